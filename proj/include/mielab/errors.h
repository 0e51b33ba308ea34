// Copyright 2026 The mielab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIELAB_ERRORS_H
#define MIELAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace mielab {

/// Operands disagree on qubit count, bit-vector length or matrix shape.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The stabilizer group has no generating set of pure-X and pure-Z strings.
struct NotCssError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An independent cross-check disagreed with the primary computation, or a
/// bound that must hold exactly was violated. Always a bug, never bad input.
struct ValidationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateGroundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mielab

#endif
