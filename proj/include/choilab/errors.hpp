// Copyright 2026 The Choilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace choilab {

/// Shape or dimension mismatch between operands or against a declared size.
struct dim_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A duality-state carries the wrong variant tag for the requested operation.
struct variant_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numeric precondition failed (non-Hermitian input, non-unitary rotation,
/// non-PSD state, invalid configuration).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed or schema-violating input file.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace choilab
