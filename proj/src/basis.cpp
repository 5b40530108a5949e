#include "hfcircle/basis.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hfcircle/error.hpp"

namespace hfc {

namespace {

constexpr double kDuplicateNodeTol = 1e-14;

void check_index(const NodalSystem& sys, std::size_t k) {
    if (k >= sys.size()) {
        throw InputError("node index " + std::to_string(k) + " out of range for " + std::to_string(sys.size()) +
                         " nodes");
    }
}

}  // namespace

std::array<cplx, 5> r_derivs_at_node(const NodalSystem& sys, std::size_t k) {
    check_index(sys, k);
    const cplx zk = sys.node(k);
    const auto nodes = sys.nodes();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k && std::abs(zk - nodes[j]) < kDuplicateNodeTol) {
            std::ostringstream msg;
            msg << "nodes " << k << " and " << j << " coincide (|z_k - z_j| < " << kDuplicateNodeTol << ")";
            throw DegenerateSystem(msg.str());
        }
    }
    // Accumulated in long double and rounded once.
    std::vector<std::complex<long double>> xnodes(nodes.begin(), nodes.end());
    const auto r = jet_eval_poly_from_roots<long double>(xnodes, xnodes[k]).cast<double>();
    std::array<cplx, 5> out{};
    for (std::size_t s = 1; s <= 5; ++s) out[s - 1] = r.derivative(s);
    if (out[0] == cplx{} || !std::isfinite(std::abs(out[0]))) {
        throw DegenerateSystem("R'(z_k) vanishes or overflows at node " + std::to_string(k));
    }
    if (std::abs(r.value()) > 1e-10 * std::abs(out[0])) {
        throw DegenerateSystem("R(z_k) does not vanish at node " + std::to_string(k));
    }
    return out;
}

cplx lagrange_eval(const NodalSystem& sys, std::size_t k, cplx z, cplx r_prime) {
    check_index(sys, k);
    const auto nodes = sys.nodes();
    cplx p(1.0, 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k) p *= z - nodes[j];
    }
    return p / r_prime;
}

cplx lagrange_eval(const NodalSystem& sys, std::size_t k, cplx z) {
    check_index(sys, k);
    const cplx zk = sys.node(k);
    const auto nodes = sys.nodes();
    cplx r_prime(1.0, 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k) r_prime *= zk - nodes[j];
    }
    return lagrange_eval(sys, k, z, r_prime);
}

ComplexJet lagrange_jet(const NodalSystem& sys, std::size_t k, cplx a, cplx r_prime) {
    check_index(sys, k);
    const auto nodes = sys.nodes();
    ComplexJet out = ComplexJet::constant(1.0 / r_prime);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k) out.mul_linear(a, nodes[j]);
    }
    return out;
}

std::array<cplx, 4> lagrange_self_derivs(const std::array<cplx, 5>& r_derivs) {
    std::array<cplx, 4> out{};
    for (std::size_t s = 1; s <= 4; ++s) out[s - 1] = r_derivs[s] / (static_cast<double>(s + 1) * r_derivs[0]);
    return out;
}

std::array<cplx, 4> lagrange_self_derivs(const NodalSystem& sys, std::size_t k) {
    return lagrange_self_derivs(r_derivs_at_node(sys, k));
}

std::vector<NodeBasisData> build_basis_data(const NodalSystem& sys) {
    std::vector<NodeBasisData> out(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) {
        out[k].node_index = k;
        out[k].r_derivs = r_derivs_at_node(sys, k);
        out[k].l_self_derivs = lagrange_self_derivs(out[k].r_derivs);
    }
    return out;
}

}  // namespace hfc
