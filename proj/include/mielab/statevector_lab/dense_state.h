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

#ifndef MIELAB_STATEVECTOR_LAB_DENSE_STATE_H
#define MIELAB_STATEVECTOR_LAB_DENSE_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mielab/stabilizer_engine/entropy.h"
#include "mielab/stabilizer_engine/tableau.h"

namespace mielab {

using cplx = std::complex<double>;

/// Largest supported Hilbert-space dimension.
inline constexpr size_t kMaxDenseDim = size_t{1} << 22;

/// Amplitudes of L sites with local dimension d. Site j is the j-th base-d
/// digit of the index, least significant first.
class DenseState {
   public:
    /// |0...0>. Throws DimensionError past the dimension cap.
    DenseState(size_t local_dim, size_t num_sites);
    DenseState(size_t local_dim, size_t num_sites, Eigen::VectorXcd amplitudes);

    size_t local_dim() const {
        return d_;
    }
    size_t num_sites() const {
        return n_;
    }
    size_t dim() const {
        return size_t(amp_.size());
    }
    /// d^site.
    size_t stride(size_t site) const;
    size_t digit(size_t index, size_t site) const {
        return (index / stride(site)) % d_;
    }

    Eigen::VectorXcd &amplitudes() {
        return amp_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amp_;
    }
    double norm() const {
        return amp_.norm();
    }
    void normalize();
    /// Multiplies by a global phase so the largest-magnitude amplitude is real
    /// and positive (first such index on ties within 1e-12).
    void fix_global_phase();

   private:
    size_t d_;
    size_t n_;
    Eigen::VectorXcd amp_;
};

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
/// Clock operator sum_n w^n |n><n|, w = exp(2 pi i / 3).
Eigen::Matrix3cd potts_u();
/// Shift operator sum_n |n+1><n|.
Eigen::Matrix3cd potts_v();

/// Z, X for qubits; U (computational) and V (shift eigenbasis) for qutrits.
enum class LocalBasis { Z, X, U, V };

LocalBasis parse_local_basis(std::string_view text);
char local_basis_char(LocalBasis b);
/// Columns are the measurement basis vectors. Throws std::invalid_argument
/// when the basis does not fit the local dimension.
Eigen::MatrixXcd basis_matrix(LocalBasis basis, size_t local_dim);

void apply_local(DenseState &s, const Eigen::MatrixXcd &op, size_t site);
/// op acts on (a, b) with a as the less significant factor index.
void apply_two_site(DenseState &s, const Eigen::Matrix4cd &op, size_t a, size_t b);
/// Rotates every listed site into the measurement frame (applies B^dagger).
void rotate_to_basis(DenseState &s, const Region &sites, LocalBasis basis);

/// Real part of <psi| opA_a opB_b |psi>. Throws std::out_of_range for bad
/// sites, std::invalid_argument for a == b, and ValidationError when both
/// operators are Hermitian but the expectation has an imaginary part above
/// 1e-10.
double correlator(const DenseState &s, const Eigen::MatrixXcd &op_a, size_t site_a, const Eigen::MatrixXcd &op_b,
                  size_t site_b);

/// Von Neumann entropy in nats of the reduced state on `region` (at most 12
/// sites of reduced dimension 4096). Eigenvalues below 1e-14 count as zero.
double entanglement_entropy_nats(const DenseState &s, const Region &region);

struct SiteOutcome {
    size_t outcome;
    double probability;
};

/// Projective measurement of one site; the state is collapsed in place and
/// renormalized. `rng` draws the outcome unless `forced` is given. Throws
/// std::invalid_argument for a forced outcome of zero probability.
SiteOutcome measure_site(DenseState &s, size_t site, LocalBasis basis, std::mt19937_64 &rng,
                         std::optional<size_t> forced = std::nullopt);

/// After the global phase fix, every amplitude in the product basis has real
/// part >= -tol and imaginary part within tol.
bool state_is_sign_free(const DenseState &s, LocalBasis basis, double tol = 1e-10);

/// Amplitudes of a stabilizer state (n <= 22), global phase fixed.
DenseState to_dense_state(const Tableau &t);

}  // namespace mielab

#endif
