/**
 * Copyright 2026 The homsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "homsym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace homsym::oracle {

namespace {

void enumerate_lexicographic(int modes, int photons, std::vector<int>& current,
                             std::vector<OccupationVector>& out) {
    if (static_cast<int>(current.size()) + 1 == modes) {
        current.push_back(photons);
        out.emplace_back(current);
        current.pop_back();
        return;
    }
    for (int c = 0; c <= photons; ++c) {
        current.push_back(c);
        enumerate_lexicographic(modes, photons - c, current, out);
        current.pop_back();
    }
}

std::vector<int> repeated_mode_list(const OccupationVector& key) {
    std::vector<int> modes;
    modes.reserve(static_cast<std::size_t>(key.total()));
    for (int j = 0; j < key.size(); ++j)
        for (int r = 0; r < key[j]; ++r)
            modes.push_back(j);
    return modes;
}

double occupancy_factorial(const OccupationVector& key) {
    double f = 1.0;
    for (int j = 0; j < key.size(); ++j)
        f *= factorial_as_double(key[j]);
    return f;
}

} // namespace

DenseSectorBasis::DenseSectorBasis(ModeLayout layout, int photons)
    : layout_(layout), photons_(photons) {
    if (photons < 0)
        throw PreconditionError("DenseSectorBasis: negative photon number");
    const long long dim = dimension_for(layout, photons);
    if (dim > sector_dimension_cap)
        throw PreconditionError("DenseSectorBasis: sector dimension " + std::to_string(dim) +
                                " exceeds the desk-scale cap " +
                                std::to_string(sector_dimension_cap));
    std::vector<int> scratch;
    scratch.reserve(static_cast<std::size_t>(layout.flat_size()));
    enumerate_lexicographic(layout.flat_size(), photons, scratch, elements_);
}

const OccupationVector& DenseSectorBasis::element(int index) const {
    if (index < 0 || index >= dimension())
        throw PreconditionError("DenseSectorBasis: index out of range");
    return elements_[static_cast<std::size_t>(index)];
}

int DenseSectorBasis::index_of(const OccupationVector& key) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), key);
    if (it == elements_.end() || !(*it == key))
        throw PreconditionError("DenseSectorBasis: occupation vector not in this sector");
    return static_cast<int>(it - elements_.begin());
}

long long DenseSectorBasis::dimension_for(const ModeLayout& layout, int photons) {
    // C(photons + modes - 1, photons), with early exit once past the cap.
    const int modes = layout.flat_size();
    long long dim = 1;
    for (int i = 1; i <= photons; ++i) {
        dim = dim * (modes - 1 + i) / i;
        if (dim > 100 * sector_dimension_cap)
            return dim;
    }
    return dim;
}

Eigen::VectorXcd embed_state(const DenseSectorBasis& basis, const FockState& state) {
    require_same_layout(basis.layout(), state.layout(), "embed_state");
    Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(basis.dimension());
    for (const auto& [key, amp] : state.amplitudes()) {
        if (key.total() != basis.photons())
            throw PreconditionError("embed_state: state leaves the " +
                                    std::to_string(basis.photons()) + "-photon sector");
        vec(basis.index_of(key)) = amp;
    }
    return vec;
}

FockState extract_state(const DenseSectorBasis& basis, const Eigen::VectorXcd& vec) {
    if (vec.size() != basis.dimension())
        throw PreconditionError("extract_state: vector length does not match the sector");
    FockState::AmplitudeMap map;
    for (int i = 0; i < basis.dimension(); ++i)
        if (vec(i) != Complex{0.0, 0.0})
            map.emplace(basis.element(i), vec(i));
    return FockState(basis.layout(), std::move(map));
}

Complex permanent(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw PreconditionError("permanent: matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (n == 0)
        return {1.0, 0.0};
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    ComplexCompensatedSum sum;
    do {
        Complex prod{1.0, 0.0};
        for (int row = 0; row < n; ++row)
            prod *= m(row, order[static_cast<std::size_t>(row)]);
        sum.add(prod);
    } while (std::next_permutation(order.begin(), order.end()));
    return sum.value();
}

Eigen::MatrixXcd embed_unitary(const DenseSectorBasis& basis, const ModeUnitary& u) {
    require_same_layout(basis.layout(), u.layout(), "embed_unitary");
    const int dim = basis.dimension();
    const int photons = basis.photons();
    Eigen::MatrixXcd embedded(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const OccupationVector& in = basis.element(col);
        const auto in_modes = repeated_mode_list(in);
        const double in_fact = occupancy_factorial(in);
        for (int row = 0; row < dim; ++row) {
            const OccupationVector& out = basis.element(row);
            const auto out_modes = repeated_mode_list(out);
            Eigen::MatrixXcd sub(photons, photons);
            for (int a = 0; a < photons; ++a)
                for (int b = 0; b < photons; ++b)
                    sub(a, b) = u.matrix()(out_modes[static_cast<std::size_t>(a)],
                                           in_modes[static_cast<std::size_t>(b)]);
            embedded(row, col) =
                permanent(sub) / std::sqrt(in_fact * occupancy_factorial(out));
        }
    }
    return embedded;
}

Eigen::MatrixXcd embed_generator(const DenseSectorBasis& basis, const OneBodyGenerator& g) {
    require_same_layout(basis.layout(), g.layout(), "embed_generator");
    const int dim = basis.dimension();
    const int modes = basis.layout().flat_size();
    Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const OccupationVector& in = basis.element(col);
        for (int k = 0; k < modes; ++k) {
            if (in[k] == 0)
                continue;
            for (int j = 0; j < modes; ++j) {
                const Complex h = g.matrix()(j, k);
                if (h == Complex{0.0, 0.0})
                    continue;
                if (j == k) {
                    embedded(col, col) += h * static_cast<double>(in[k]);
                    continue;
                }
                std::vector<int> counts = in.counts();
                counts[static_cast<std::size_t>(k)] -= 1;
                counts[static_cast<std::size_t>(j)] += 1;
                const double factor =
                    std::sqrt(static_cast<double>(in[k]) * (in[j] + 1.0));
                embedded(basis.index_of(OccupationVector(std::move(counts))), col) += h * factor;
            }
        }
    }
    return embedded;
}

Eigen::MatrixXcd dense_cyclic_shift(const DenseSectorBasis& basis) {
    const ModeLayout& layout = basis.layout();
    const int n = layout.spatial;
    const int d = layout.internal;
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
    for (int col = 0; col < basis.dimension(); ++col) {
        const OccupationVector& in = basis.element(col);
        std::vector<int> moved(static_cast<std::size_t>(layout.flat_size()), 0);
        for (int s = 0; s < n; ++s)
            for (int i = 0; i < d; ++i)
                moved[static_cast<std::size_t>(((s - 1 + n) % n) * d + i)] = in[s * d + i];
        shift(basis.index_of(OccupationVector(std::move(moved))), col) = 1.0;
    }
    return shift;
}

Eigen::MatrixXcd dense_projector_residue(const DenseSectorBasis& basis, int j) {
    const int n = basis.layout().spatial;
    if (j < 0 || j >= n)
        throw PreconditionError("dense_projector_residue: residue outside [0, n)");
    const Eigen::MatrixXcd shift = dense_cyclic_shift(basis);
    const auto roots = unit_roots(n);
    Eigen::MatrixXcd projector =
        Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension());
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension());
    for (int l = 1; l < n; ++l) {
        power = power * shift;
        projector +=
            roots[static_cast<std::size_t>(((-static_cast<long long>(j) * l) % n + n) % n)] * power;
    }
    return projector / static_cast<double>(n);
}

Eigen::MatrixXcd dense_expm(const Eigen::MatrixXcd& h, double kappa) {
    if (h.rows() != h.cols())
        throw PreconditionError("dense_expm: matrix must be square");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw PreconditionError("dense_expm: matrix is not Hermitian");
    const int dim = static_cast<int>(h.rows());
    Eigen::MatrixXcd a = Complex{0.0, kappa} * h;
    // Scale until ||A||_1 <= 0.5, run the Taylor series, square back up.
    double norm1 = 0.0;
    for (int c = 0; c < dim; ++c)
        norm1 = std::max(norm1, a.col(c).cwiseAbs().sum());
    int squarings = 0;
    while (norm1 > 0.5) {
        norm1 *= 0.5;
        ++squarings;
    }
    a /= std::pow(2.0, squarings);
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int order = 1; order <= 32; ++order) {
        term = term * a / static_cast<double>(order);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18)
            break;
    }
    for (int s = 0; s < squarings; ++s)
        result = result * result;
    return result;
}

Eigen::MatrixXcd density_matrix(const DenseSectorBasis& basis, const MixedState& rho) {
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
    for (const auto& [weight, component] : rho.components()) {
        const Eigen::VectorXcd vec = embed_state(basis, component);
        dense += weight * vec * vec.adjoint();
    }
    return dense;
}

double mixed_qfi_sld(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& h) {
    if (rho.rows() != rho.cols() || h.rows() != h.cols() || rho.rows() != h.rows())
        throw PreconditionError("mixed_qfi_sld: dimension mismatch");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::norm_check)
        throw PreconditionError("mixed_qfi_sld: density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol::norm_check ||
        std::abs(rho.trace().imag()) > tol::norm_check)
        throw PreconditionError("mixed_qfi_sld: density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    const Eigen::VectorXd lambda = solver.eigenvalues();
    if (lambda.minCoeff() < -tol::norm_check)
        throw PreconditionError("mixed_qfi_sld: density matrix is not positive semidefinite");
    const Eigen::MatrixXcd h_eig = solver.eigenvectors().adjoint() * h * solver.eigenvectors();
    const int dim = static_cast<int>(lambda.size());
    CompensatedSum q;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const double denom = lambda(a) + lambda(b);
            if (denom < tol::sld_cutoff)
                continue;
            const double diff = lambda(a) - lambda(b);
            q.add(2.0 * diff * diff / denom * std::norm(h_eig(a, b)));
        }
    return q.value();
}

} // namespace homsym::oracle
