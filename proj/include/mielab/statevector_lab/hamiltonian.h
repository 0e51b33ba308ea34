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

#ifndef MIELAB_STATEVECTOR_LAB_HAMILTONIAN_H
#define MIELAB_STATEVECTOR_LAB_HAMILTONIAN_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mielab/statevector_lab/dense_state.h"

namespace mielab {

/// Periodic chains. IsingCritical: -J sum X_j X_{j+1} - h sum Z_j.
/// OBrienFendley adds lambda sum (Z_j X_{j+1} X_{j+2} + X_j X_{j+1} Z_{j+2}).
/// Potts3: -J sum (U_j U_{j+1}^dag + h.c.) - h sum (V_j + V_j^dag) on qutrits.
/// GaplessSPT: sigma_j on qubit 2j, tau_{j+1/2} on qubit 2j+1;
/// -sum (tau^x sigma^z tau^x + sigma^x tau^z sigma^x) - J sum sigma^x sigma^x.
/// ClusterPlusField: -J sum Z_{j-1} X_j Z_{j+1} - h sum X_j.
enum class HamiltonianModel { IsingCritical, OBrienFendley, Potts3, GaplessSPT, ClusterPlusField };

std::string hamiltonian_name(HamiltonianModel m);
/// Accepts "tfim"/"ising", "of"/"obrien-fendley", "potts", "gspt", "cluster".
HamiltonianModel parse_hamiltonian(std::string_view text);

struct HamiltonianSpec {
    HamiltonianModel model = HamiltonianModel::IsingCritical;
    /// Unit cells; GaplessSPT has 2L qubits.
    size_t L = 0;
    double J = 1.0;
    double h = 1.0;
    double lambda = 0.428;

    static HamiltonianSpec make(HamiltonianModel model, size_t L);
    size_t local_dim() const;
    size_t num_sites() const;
    /// Throws std::invalid_argument for chains too short for the model's terms
    /// and DimensionError past the dense cap.
    void validate() const;
};

/// Real symmetric H in the computational basis, applied without storing it.
/// For L = 2 the Ising and Potts rings keep a single bond.
class HamiltonianOperator {
   public:
    explicit HamiltonianOperator(const HamiltonianSpec &spec);

    size_t dim() const {
        return dim_;
    }
    /// out = H in.
    void apply(const Eigen::VectorXd &in, Eigen::VectorXd &out) const;
    /// Sum of absolute term coefficients; bounds the spectral radius.
    double norm_bound() const {
        return norm_bound_;
    }

   private:
    struct Flip {
        double coef;
        uint64_t x;
        uint64_t z;
    };
    void add_pauli(double coef, const std::vector<std::pair<size_t, char>> &ops);

    size_t d_;
    size_t n_;
    size_t dim_;
    Eigen::VectorXd diag_;
    std::vector<Flip> flips_;
    std::vector<size_t> shift_strides_;
    double shift_coef_ = 0;
    double norm_bound_ = 0;
};

using LinearMap = std::function<void(const Eigen::VectorXd &, Eigen::VectorXd &)>;

struct LanczosOptions {
    double tol = 1e-10;
    size_t krylov_dim = 60;
    size_t max_restarts = 400;
};

struct EigenPair {
    Eigen::VectorXd vector;
    double value = 0;
    double residual = 0;
    size_t matvecs = 0;
};

/// Lowest eigenpair of a real symmetric map by restarted Lanczos. The basis is
/// regenerated rather than stored when forming the Ritz vector. Throws
/// ConvergenceError when the residual stays above tol.
EigenPair lanczos_lowest(const LinearMap &op, Eigen::VectorXd start, const LanczosOptions &options);

struct GroundStateOptions {
    double tol = 1e-10;
    uint64_t seed = 1;
    /// Also compute the first gap; needed for the degeneracy check.
    bool check_gap = true;
};

struct GroundState {
    DenseState state;
    double energy;
    double residual;
    /// NaN when the gap was not computed.
    double gap;

    /// {"model", "L", "energy", "converged_residual"}.
    std::string summary_json(const HamiltonianSpec &spec) const;
};

/// Throws ConvergenceError, or DegenerateGroundStateError when the gap is
/// below 10 tol.
GroundState ground_state(const HamiltonianSpec &spec, const GroundStateOptions &options = {});

}  // namespace mielab

#endif
