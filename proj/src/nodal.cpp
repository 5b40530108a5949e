#include "hfcircle/nodal.hpp"

#include <cmath>
#include <string>

#include "hfcircle/error.hpp"

namespace hfc {

NodalSystem::NodalSystem(const JacobiParams& params) : NodalSystem(params, jacobi_zeros(params)) {}

NodalSystem NodalSystem::from_zeros(const JacobiParams& params, std::vector<double> x_zeros) {
    validate(params);
    if (x_zeros.size() != static_cast<std::size_t>(params.n)) {
        throw InputError("from_zeros: expected " + std::to_string(params.n) + " zeros, got " +
                         std::to_string(x_zeros.size()));
    }
    for (double x : x_zeros) {
        if (!(x > -1.0 && x < 1.0)) throw DomainError("from_zeros: every zero must lie in (-1, 1)");
    }
    return NodalSystem(params, std::move(x_zeros));
}

NodalSystem::NodalSystem(const JacobiParams& params, std::vector<double> x_zeros)
    : params_(params), x_zeros_(std::move(x_zeros)) {
    const int n = params_.n;
    nodes_.resize(2 * n + 2);
    nodes_[0] = cplx(1.0, 0.0);
    nodes_[2 * n + 1] = cplx(-1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        const double x = x_zeros_[k - 1];
        const double y = std::sqrt((1.0 - x) * (1.0 + x));
        nodes_[k] = cplx(x, y);
        nodes_[n + k] = cplx(x, -y);
    }
}

NodalSystem build_nodes(const JacobiParams& params) { return NodalSystem(params); }

cplx szego_x(cplx z) {
    if (z == cplx(0.0, 0.0)) throw DomainError("szego_x is undefined at z = 0");
    return (1.0 + z * z) / (2.0 * z);
}

cplx eval_W(const NodalSystem& sys, cplx z) {
    cplx w(1.0, 0.0);
    for (const cplx& zk : sys.interior_nodes()) w *= z - zk;
    return w;
}

cplx eval_R(const NodalSystem& sys, cplx z) { return (z * z - 1.0) * eval_W(sys, z); }

}  // namespace hfc
