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

#ifndef MIELAB_CSS_ANALYSIS_CSS_H
#define MIELAB_CSS_ANALYSIS_CSS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mielab/stabilizer_engine/entropy.h"
#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

/// Pure-X generators (all +) and pure-Z generators (any sign), both in
/// reduced row echelon form. `repairs` lists the qubits where a Z gate was
/// needed to make every pure-X generator positive; the form describes the
/// repaired state.
struct CssForm {
    std::vector<PauliString> x_generators;
    std::vector<PauliString> z_generators;
    std::vector<size_t> repairs;

    size_t n_x() const {
        return x_generators.size();
    }
    size_t n_z() const {
        return z_generators.size();
    }
};

/// Throws NotCssError when the group has no pure-X / pure-Z generating set.
CssForm css_canonical_form(const Tableau &t);

struct SignReport {
    /// Nonnegative Z-basis amplitudes as given.
    bool sign_free = false;
    /// CSS, i.e. sign-free after the Z gates in `repairs`.
    bool css_structure = false;
    std::vector<size_t> repairs;
    /// A generator (after X-block elimination) that breaks the condition.
    std::optional<PauliString> violating;
};

SignReport is_sign_free(const Tableau &t);

struct StructureCounts {
    size_t g = 0;
    size_t g_prime = 0;
    size_t e_ab = 0, e_bc = 0, e_ca = 0;
    size_t s_a = 0, s_b = 0, s_c = 0;
    size_t s_a_prime = 0, s_b_prime = 0, s_c_prime = 0;
    size_t n_x = 0, n_z = 0;

    std::string to_json() const;
    bool operator==(const StructureCounts &) const = default;
};

/// Tripartite GHZ / GHZ' / EPR / |0> / |+> multiplicities. A, B, C must
/// partition all qubits (std::invalid_argument). Throws NotCssError for
/// non-CSS states and ValidationError if the qubit accounting fails.
StructureCounts structure_counts(const Tableau &t, const Region &a, const Region &b, const Region &c);

struct BoundReport {
    size_t mie_bits = 0;
    size_t mi_bits = 0;
    bool sign_free = false;
    bool css_structure = false;
    bool holds = false;
};

/// Z-basis MIE against MI. A violation on a CSS state throws ValidationError.
BoundReport check_mie_mi_bound(const Tableau &t, const Region &a, const Region &b);

}  // namespace mielab

#endif
