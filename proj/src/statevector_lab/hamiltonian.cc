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

#include "mielab/statevector_lab/hamiltonian.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "mielab/errors.h"

namespace mielab {

std::string hamiltonian_name(HamiltonianModel m) {
    switch (m) {
        case HamiltonianModel::IsingCritical:
            return "tfim";
        case HamiltonianModel::OBrienFendley:
            return "obrien-fendley";
        case HamiltonianModel::Potts3:
            return "potts3";
        case HamiltonianModel::GaplessSPT:
            return "gspt";
        case HamiltonianModel::ClusterPlusField:
            return "cluster-field";
    }
    return "?";
}

HamiltonianModel parse_hamiltonian(std::string_view text) {
    std::string key;
    for (char c : text) {
        if (c != '-' && c != '_' && c != '\'') {
            key += char(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (key == "tfim" || key == "ising") {
        return HamiltonianModel::IsingCritical;
    }
    if (key == "of" || key == "obrienfendley" || key == "tci") {
        return HamiltonianModel::OBrienFendley;
    }
    if (key == "potts" || key == "potts3") {
        return HamiltonianModel::Potts3;
    }
    if (key == "gspt") {
        return HamiltonianModel::GaplessSPT;
    }
    if (key == "cluster" || key == "clusterfield") {
        return HamiltonianModel::ClusterPlusField;
    }
    throw std::invalid_argument("unknown hamiltonian '" + std::string(text) + "'");
}

HamiltonianSpec HamiltonianSpec::make(HamiltonianModel model, size_t L) {
    HamiltonianSpec s;
    s.model = model;
    s.L = L;
    return s;
}

size_t HamiltonianSpec::local_dim() const {
    return model == HamiltonianModel::Potts3 ? 3 : 2;
}

size_t HamiltonianSpec::num_sites() const {
    return model == HamiltonianModel::GaplessSPT ? 2 * L : L;
}

void HamiltonianSpec::validate() const {
    size_t min_l = 2;
    if (model == HamiltonianModel::OBrienFendley || model == HamiltonianModel::GaplessSPT ||
        model == HamiltonianModel::ClusterPlusField) {
        min_l = 3;
    }
    if (L < min_l) {
        throw std::invalid_argument(hamiltonian_name(model) + " needs L >= " + std::to_string(min_l));
    }
    if (!std::isfinite(J) || !std::isfinite(h) || !std::isfinite(lambda)) {
        throw std::invalid_argument("couplings must be finite");
    }
    size_t dim = 1;
    for (size_t k = 0; k < num_sites(); k++) {
        dim *= local_dim();
        if (dim > kMaxDenseDim) {
            throw DimensionError(hamiltonian_name(model) + " at L=" + std::to_string(L) + " exceeds the 2^22 cap");
        }
    }
}

void HamiltonianOperator::add_pauli(double coef, const std::vector<std::pair<size_t, char>> &ops) {
    uint64_t x = 0, z = 0;
    for (auto [site, p] : ops) {
        uint64_t bit = uint64_t{1} << site;
        if (p == 'X') {
            x ^= bit;
        } else {
            z ^= bit;
        }
    }
    norm_bound_ += std::abs(coef);
    if (x == 0) {
        for (size_t b = 0; b < dim_; b++) {
            diag_[Eigen::Index(b)] += (std::popcount(z & b) & 1) ? -coef : coef;
        }
    } else {
        flips_.push_back({coef, x, z});
    }
}

HamiltonianOperator::HamiltonianOperator(const HamiltonianSpec &spec) {
    spec.validate();
    d_ = spec.local_dim();
    n_ = spec.num_sites();
    dim_ = 1;
    for (size_t k = 0; k < n_; k++) {
        dim_ *= d_;
    }
    diag_ = Eigen::VectorXd::Zero(Eigen::Index(dim_));
    const size_t L = spec.L;
    size_t bonds = L == 2 ? 1 : L;
    auto at = [&](size_t j) { return j % n_; };
    switch (spec.model) {
        case HamiltonianModel::IsingCritical:
        case HamiltonianModel::OBrienFendley:
            for (size_t j = 0; j < bonds; j++) {
                add_pauli(-spec.J, {{j, 'X'}, {at(j + 1), 'X'}});
            }
            for (size_t j = 0; j < L; j++) {
                add_pauli(-spec.h, {{j, 'Z'}});
            }
            if (spec.model == HamiltonianModel::OBrienFendley) {
                for (size_t j = 0; j < L; j++) {
                    add_pauli(spec.lambda, {{j, 'Z'}, {at(j + 1), 'X'}, {at(j + 2), 'X'}});
                    add_pauli(spec.lambda, {{j, 'X'}, {at(j + 1), 'X'}, {at(j + 2), 'Z'}});
                }
            }
            break;
        case HamiltonianModel::ClusterPlusField:
            for (size_t j = 0; j < L; j++) {
                add_pauli(-spec.J, {{at(j + L - 1), 'Z'}, {j, 'X'}, {at(j + 1), 'Z'}});
                add_pauli(-spec.h, {{j, 'X'}});
            }
            break;
        case HamiltonianModel::GaplessSPT:
            for (size_t j = 0; j < L; j++) {
                size_t s = 2 * j;
                add_pauli(-1.0, {{at(s + n_ - 1), 'X'}, {s, 'Z'}, {at(s + 1), 'X'}});
                add_pauli(-1.0, {{at(s + n_ - 2), 'X'}, {at(s + n_ - 1), 'Z'}, {s, 'X'}});
                add_pauli(-spec.J, {{at(s + n_ - 2), 'X'}, {s, 'X'}});
            }
            break;
        case HamiltonianModel::Potts3: {
            std::vector<size_t> stride(n_);
            size_t st = 1;
            for (size_t j = 0; j < n_; j++) {
                stride[j] = st;
                st *= 3;
            }
            // U_j U_{j+1}^dag + h.c. = 2 cos(2 pi (n_j - n_{j+1}) / 3).
            for (size_t idx = 0; idx < dim_; idx++) {
                double e = 0;
                for (size_t j = 0; j < bonds; j++) {
                    long a = long((idx / stride[j]) % 3), b = long((idx / stride[at(j + 1)]) % 3);
                    e += a == b ? -2 * spec.J : spec.J;
                }
                diag_[Eigen::Index(idx)] = e;
            }
            norm_bound_ += 2 * std::abs(spec.J) * double(bonds) + 2 * std::abs(spec.h) * double(L);
            shift_strides_ = stride;
            shift_coef_ = -spec.h;
            break;
        }
    }
}

void HamiltonianOperator::apply(const Eigen::VectorXd &in, Eigen::VectorXd &out) const {
    if (size_t(in.size()) != dim_) {
        throw DimensionError("vector length does not match the Hamiltonian");
    }
    out = diag_.cwiseProduct(in);
    for (const Flip &f : flips_) {
        if (f.z == 0) {
            for (size_t b = 0; b < dim_; b++) {
                out[Eigen::Index(b ^ f.x)] += f.coef * in[Eigen::Index(b)];
            }
        } else {
            for (size_t b = 0; b < dim_; b++) {
                double v = f.coef * in[Eigen::Index(b)];
                out[Eigen::Index(b ^ f.x)] += (std::popcount(f.z & b) & 1) ? -v : v;
            }
        }
    }
    for (size_t st : shift_strides_) {
        for (size_t idx = 0; idx < dim_; idx++) {
            size_t digit = (idx / st) % 3;
            size_t up = digit == 2 ? idx - 2 * st : idx + st;
            size_t down = digit == 0 ? idx + 2 * st : idx - st;
            double v = shift_coef_ * in[Eigen::Index(idx)];
            out[Eigen::Index(up)] += v;
            out[Eigen::Index(down)] += v;
        }
    }
}

EigenPair lanczos_lowest(const LinearMap &op, Eigen::VectorXd start, const LanczosOptions &options) {
    if (options.krylov_dim < 2) {
        throw std::invalid_argument("krylov dimension must be at least 2");
    }
    double nrm = start.norm();
    if (nrm == 0) {
        throw std::invalid_argument("zero start vector");
    }
    const Eigen::Index n = start.size();
    Eigen::VectorXd x = start / nrm;
    Eigen::VectorXd hx(n), v(n), vprev(n), w(n);
    EigenPair r;
    std::vector<double> alpha, beta;
    for (size_t restart = 0;; restart++) {
        op(x, hx);
        r.matvecs++;
        double theta = x.dot(hx);
        r.residual = (hx - theta * x).norm();
        r.value = theta;
        if (r.residual <= options.tol) {
            r.vector = x;
            return r;
        }
        if (restart == options.max_restarts) {
            throw ConvergenceError("lanczos residual " + std::to_string(r.residual) + " above tolerance after " +
                                   std::to_string(restart) + " restarts");
        }
        // Pass 1: tridiagonal coefficients only.
        alpha.clear();
        beta.clear();
        v = x;
        vprev.setZero();
        w = hx;
        double b = 0;
        for (size_t k = 0; k < options.krylov_dim; k++) {
            if (k > 0) {
                op(v, w);
                r.matvecs++;
            }
            double a = v.dot(w);
            w -= a * v;
            w -= b * vprev;
            alpha.push_back(a);
            b = w.norm();
            if (k + 1 == options.krylov_dim || b < 1e-13 * std::max(1.0, std::abs(a))) {
                break;
            }
            beta.push_back(b);
            vprev = v;
            v = w / b;
        }
        size_t m = alpha.size();
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), Eigen::Index(m));
        Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), Eigen::Index(m - 1));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub);
        Eigen::VectorXd y = es.eigenvectors().col(0);
        // Pass 2: regenerate the same basis and accumulate the Ritz vector.
        Eigen::VectorXd next = y[0] * x;
        v = x;
        vprev.setZero();
        b = 0;
        for (size_t k = 0; k + 1 < m; k++) {
            if (k == 0) {
                w = hx;
            } else {
                op(v, w);
                r.matvecs++;
            }
            w -= alpha[k] * v;
            w -= b * vprev;
            b = beta[k];
            vprev = v;
            v = w / b;
            next += y[Eigen::Index(k + 1)] * v;
        }
        x = next / next.norm();
    }
}

std::string GroundState::summary_json(const HamiltonianSpec &spec) const {
    nlohmann::ordered_json j;
    j["model"] = hamiltonian_name(spec.model);
    j["L"] = spec.L;
    j["energy"] = energy;
    j["converged_residual"] = residual;
    return j.dump();
}

GroundState ground_state(const HamiltonianSpec &spec, const GroundStateOptions &options) {
    HamiltonianOperator H(spec);
    const Eigen::Index dim = Eigen::Index(H.dim());
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss;
    auto random_vector = [&] {
        Eigen::VectorXd v(dim);
        for (Eigen::Index k = 0; k < dim; k++) {
            v[k] = gauss(rng);
        }
        return v;
    };
    LinearMap apply = [&H](const Eigen::VectorXd &in, Eigen::VectorXd &out) { H.apply(in, out); };
    LanczosOptions lo;
    lo.tol = options.tol;
    EigenPair g = lanczos_lowest(apply, random_vector(), lo);

    double gap = std::numeric_limits<double>::quiet_NaN();
    if (options.check_gap && dim > 1) {
        // Push the ground state above the spectrum and take the new minimum.
        const Eigen::VectorXd &v0 = g.vector;
        double sigma = 2 * H.norm_bound() + 1;
        LinearMap deflated = [&](const Eigen::VectorXd &in, Eigen::VectorXd &out) {
            H.apply(in, out);
            out += (sigma * v0.dot(in)) * v0;
        };
        Eigen::VectorXd start = random_vector();
        start -= v0.dot(start) * v0;
        LanczosOptions lo1 = lo;
        lo1.tol = std::max(options.tol, 1e-8);
        EigenPair e1 = lanczos_lowest(deflated, start, lo1);
        gap = e1.value - g.value;
        if (gap < 10 * options.tol) {
            throw DegenerateGroundStateError(hamiltonian_name(spec.model) + " at L=" + std::to_string(spec.L) +
                                             " has gap " + std::to_string(gap));
        }
    }
    DenseState state(spec.local_dim(), spec.num_sites(), g.vector.cast<cplx>());
    state.normalize();
    state.fix_global_phase();
    return {std::move(state), g.value, g.residual, gap};
}

}  // namespace mielab
