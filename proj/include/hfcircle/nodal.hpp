#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hfcircle/jacobi.hpp"

namespace hfc {

using cplx = std::complex<double>;

/// The 2n+2 interpolation nodes on the unit circle.
///
/// Index layout: node 0 is 1, node 2n+1 is -1, nodes 1..n are the Jacobi
/// zeros x_k (increasing) lifted to the upper half circle, x_k + i sqrt(1-x_k^2),
/// and node n+k is the conjugate of node k. Immutable after construction.
class NodalSystem {
public:
    explicit NodalSystem(const JacobiParams& params);

    /// Builds the system from externally supplied zeros (for instance computed
    /// in higher precision). Requires n values in (-1, 1); coincident values are
    /// not rejected here but make build_basis_data throw DegenerateSystem.
    static NodalSystem from_zeros(const JacobiParams& params, std::vector<double> x_zeros);

    const JacobiParams& params() const { return params_; }
    int degree() const { return params_.n; }
    std::size_t size() const { return nodes_.size(); }

    std::span<const double> x_zeros() const { return x_zeros_; }
    std::span<const cplx> nodes() const { return nodes_; }
    /// Nodes 1..2n, the zeros of W.
    std::span<const cplx> interior_nodes() const { return std::span<const cplx>(nodes_).subspan(1, 2 * params_.n); }
    const cplx& node(std::size_t k) const { return nodes_.at(k); }

private:
    NodalSystem(const JacobiParams& params, std::vector<double> x_zeros);

    JacobiParams params_;
    std::vector<double> x_zeros_;
    std::vector<cplx> nodes_;
};

NodalSystem build_nodes(const JacobiParams& params);

/// x = (1 + z^2) / (2z). Throws DomainError at z = 0.
cplx szego_x(cplx z);

/// W(z) = prod_{k=1}^{2n} (z - z_k), accumulated in node order.
cplx eval_W(const NodalSystem& sys, cplx z);

/// R(z) = (z^2 - 1) W(z).
cplx eval_R(const NodalSystem& sys, cplx z);

}  // namespace hfc
