#include "choilab/harness.hpp"

#include "test_helpers.hpp"

using namespace choilab;

TEST_SUITE("harness") {

TEST_CASE("suite names round trip") {
  for (SuiteId id : all_suites()) {
    const auto back = suite_from_name(suite_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(suite_from_name("no_such_suite").has_value());
  CHECK(all_suites().size() == 11);
}

TEST_CASE("Choi suite is clean at (2,2)") {
  TheoremSuite s;
  s.id = SuiteId::Choi;
  s.dims = {{2, 2}};
  s.trials = 100;
  s.seed = 42;
  const SuiteResult r = run_suite(s);
  CHECK(r.failed == 0);
  CHECK(r.passed == 100);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("DePillis suite is clean at (2,3)") {
  TheoremSuite s;
  s.id = SuiteId::DePillis;
  s.dims = {{2, 3}};
  s.trials = 100;
  s.seed = 7;
  const SuiteResult r = run_suite(s);
  CHECK(r.failed == 0);
  CHECK(r.passed == 100);
}

TEST_CASE("JordanStructure suite is clean at (3,3) with 200 trials") {
  TheoremSuite s;
  s.id = SuiteId::JordanStructure;
  s.dims = {{3, 3}};
  s.trials = 200;
  s.seed = 1;
  const SuiteResult r = run_suite(s);
  CHECK(r.failed == 0);
  CHECK(r.passed == 200);
}

TEST_CASE("remaining suites are clean on a small budget") {
  for (SuiteId id : {SuiteId::Jamiolkowski_a, SuiteId::Jamiolkowski_b,
                     SuiteId::ChoiReformulated, SuiteId::Lemma1_T,
                     SuiteId::BasisIndependenceJ, SuiteId::BasisDependenceC,
                     SuiteId::VariantLadder, SuiteId::TimeOrientation}) {
    TheoremSuite s;
    s.id = id;
    s.dims = {{2, 2}, {2, 3}};
    s.trials = 10;
    s.seed = 5;
    const SuiteResult r = run_suite(s);
    CHECK_MESSAGE(r.failed == 0, suite_name(id));
    CHECK(r.passed == 20);
  }
}

TEST_CASE("results are deterministic under identical inputs") {
  TheoremSuite s;
  s.id = SuiteId::VariantLadder;
  s.dims = {{2, 2}};
  s.trials = 5;
  s.seed = 99;
  const SuiteResult a = run_suite(s);
  const SuiteResult b = run_suite(s);
  CHECK(a.passed == b.passed);
  CHECK(a.failed == b.failed);
  CHECK(a.counterexamples.size() == b.counterexamples.size());
}

TEST_CASE("injected corruption makes suites fail with reproducible counterexamples") {
  for (SuiteId id : all_suites()) {
    TheoremSuite s;
    s.id = id;
    s.dims = {{2, 2}};
    s.trials = 3;
    s.seed = 11;
    s.inject_corruption = true;
    const SuiteResult r = run_suite(s);
    CHECK_MESSAGE(r.failed >= 1, suite_name(id));
    REQUIRE_FALSE(r.counterexamples.empty());

    // Same inputs, same counterexamples.
    const SuiteResult again = run_suite(s);
    REQUIRE(again.counterexamples.size() == r.counterexamples.size());
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
      CHECK(again.counterexamples[i].seed == r.counterexamples[i].seed);
      CHECK(again.counterexamples[i].check == r.counterexamples[i].check);
      CHECK(again.counterexamples[i].witness == r.counterexamples[i].witness);
    }

    // And the clean run stays clean.
    s.inject_corruption = false;
    CHECK(run_suite(s).failed == 0);
  }
}

}  // TEST_SUITE
