#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hfcircle/jet.hpp"
#include "hfcircle/nodal.hpp"

namespace hfc {

/// Per-node data for the Lagrange basis on the zeros of R.
struct NodeBasisData {
    std::size_t node_index = 0;
    /// R^(1)(z_k) .. R^(5)(z_k).
    std::array<cplx, 5> r_derivs{};
    /// L_k^(1)(z_k) .. L_k^(4)(z_k).
    std::array<cplx, 4> l_self_derivs{};

    const cplx& r_prime() const { return r_derivs[0]; }
};

/// R^(1)..R^(5) at node k from the jet of prod_j (z - z_j) over all 2n+2 roots.
/// Throws DegenerateSystem if another node lies within 1e-14 of node k.
std::array<cplx, 5> r_derivs_at_node(const NodalSystem& sys, std::size_t k);

/// L_k(z) in factor-cancelled form: prod_{j != k} (z - z_j) / R'(z_k).
cplx lagrange_eval(const NodalSystem& sys, std::size_t k, cplx z);
cplx lagrange_eval(const NodalSystem& sys, std::size_t k, cplx z, cplx r_prime);

/// Jet of L_k at a, factor-cancelled.
ComplexJet lagrange_jet(const NodalSystem& sys, std::size_t k, cplx a, cplx r_prime);

/// L_k^(s)(z_k) = R^(s+1)(z_k) / ((s+1) R'(z_k)), s = 1..4.
std::array<cplx, 4> lagrange_self_derivs(const std::array<cplx, 5>& r_derivs);
std::array<cplx, 4> lagrange_self_derivs(const NodalSystem& sys, std::size_t k);

/// Precomputation over all 2n+2 nodes, O(n^2).
std::vector<NodeBasisData> build_basis_data(const NodalSystem& sys);

}  // namespace hfc
