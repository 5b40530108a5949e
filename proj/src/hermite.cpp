#include "hfcircle/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hfcircle/error.hpp"

namespace hfc {

namespace {

// A NaN residual must never compare as "within tolerance".
double finite_or_inf(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }

cplx round_to_double(const xcplx& v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

std::vector<xcplx> widen(std::span<const cplx> v) { return {v.begin(), v.end()}; }

template <typename Real>
struct LocalTaylor {
    std::complex<Real> r_prime;
    BasicJet<Real> l;  // jet of L_k at z_k
    BasicJet<Real> r;  // jet of R at z_k
};

template <typename Real>
LocalTaylor<Real> local_taylor(std::span<const std::complex<Real>> nodes, std::size_t k) {
    const auto zk = nodes[k];
    auto others = BasicJet<Real>::constant(Real(1));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k) others.mul_linear(zk, nodes[j]);
    }
    LocalTaylor<Real> out;
    out.r_prime = others.value();
    if (out.r_prime == std::complex<Real>{} || !std::isfinite(static_cast<double>(std::abs(out.r_prime)))) {
        throw DegenerateSystem("R'(z_k) vanishes or overflows at node " + std::to_string(k));
    }
    out.l = others * (Real(1) / out.r_prime);
    out.r = others;
    out.r.mul_linear(zk, zk);
    return out;
}

template <typename Real>
std::array<std::complex<Real>, 4> closed_form(std::complex<Real> rp, const std::array<std::complex<Real>, 4>& l) {
    using C = std::complex<Real>;
    const C l1 = l[0];
    const C l2 = l[1];
    const C l3 = l[2];
    const C l4 = l[3];
    const Real five = 5;
    std::array<C, 4> c;
    c[0] = -five * l1 / rp;
    c[1] = -five / (Real(2) * rp * rp) * (l2 + Real(10) * l1 * l1);
    c[2] = -five / (Real(6) * rp * rp * rp) * (Real(-18) * l2 * l1 + l3 - Real(198) * l1 * l1 * l1);
    c[3] = -five / (Real(24) * rp * rp * rp * rp) *
           (l4 - Real(24) * l3 * l1 + l2 * l2 - Real(156) * l1 * l1 * l2 + Real(2544) * l1 * l1 * l1 * l1);
    return c;
}

// Forward substitution on the conditions [t^r] A_{0k}(z_k + t) = 0, r = 1..4.
template <typename Real>
std::array<std::complex<Real>, 4> solve_triangular(const LocalTaylor<Real>& local, std::size_t k) {
    using C = std::complex<Real>;
    std::array<BasicJet<Real>, 5> terms;
    for (unsigned p = 0; p <= 4; ++p) terms[p] = jet_pow(local.r, p) * jet_pow(local.l, 5 - p);
    std::array<C, 4> c{};
    for (std::size_t order = 1; order <= 4; ++order) {
        C rhs = terms[0][order];
        for (std::size_t p = 1; p < order; ++p) rhs += c[p - 1] * terms[p][order];
        const C diag = terms[order][order];
        if (diag == C{} || !std::isfinite(static_cast<double>(std::abs(diag)))) {
            throw DegenerateSystem("coeffs_oracle: zero diagonal at node " + std::to_string(k));
        }
        c[order - 1] = -rhs / diag;
    }
    return c;
}

template <typename Real>
std::array<std::complex<Real>, 4> self_derivs(const BasicJet<Real>& l) {
    return {l.derivative(1), l.derivative(2), l.derivative(3), l.derivative(4)};
}

// A_{0k} = L (L (L (L (L + c1 R) + c2 R^2) + c3 R^3) + c4 R^4), for scalars and jets alike.
template <typename T, typename C>
T assemble_a0k(const T& l, const std::array<T, 5>& r_pow, const std::array<C, 4>& c) {
    T s = l + r_pow[1] * c[0];
    s = s * l + r_pow[2] * c[1];
    s = s * l + r_pow[3] * c[2];
    s = s * l + r_pow[4] * c[3];
    return s * l;
}

}  // namespace

HermiteCoefficients coeffs_closed_form(const NodeBasisData& basis_k) {
    HermiteCoefficients out;
    out.node_index = basis_k.node_index;
    out.c = closed_form<double>(basis_k.r_prime(), basis_k.l_self_derivs);
    return out;
}

HermiteCoefficients coeffs_oracle(const NodalSystem& sys, std::span<const NodeBasisData> basis, std::size_t k) {
    if (basis.size() != sys.size() || k >= sys.size()) {
        throw InputError("coeffs_oracle: basis/system size mismatch or node index out of range");
    }
    const auto xnodes = widen(sys.nodes());
    const auto c = solve_triangular<long double>(local_taylor<long double>(xnodes, k), k);
    HermiteCoefficients out;
    out.node_index = k;
    for (std::size_t p = 0; p < 4; ++p) out.c[p] = round_to_double(c[p]);
    return out;
}

std::vector<CoefficientComparison> compare_coefficients(const NodalSystem& sys, std::span<const NodeBasisData> basis,
                                                        double rel_tol) {
    std::vector<CoefficientComparison> out;
    out.reserve(4 * sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const auto closed = coeffs_closed_form(basis[k]);
        const auto solved = coeffs_oracle(sys, basis, k);
        for (int p = 1; p <= 4; ++p) {
            CoefficientComparison row;
            row.node_index = k;
            row.p = p;
            row.closed_form = closed.c[p - 1];
            row.oracle = solved.c[p - 1];
            const double diff = std::abs(row.closed_form - row.oracle);
            const double scale = std::max(std::abs(row.oracle), std::abs(row.closed_form));
            row.rel_diff = scale > 0.0 ? diff / scale : 0.0;
            row.agrees = row.rel_diff <= rel_tol;
            out.push_back(row);
        }
    }
    return out;
}

HermiteOperator::HermiteOperator(NodalSystem sys, CoefficientSource source)
    : sys_(std::move(sys)), source_(source), basis_(build_basis_data(sys_)), xnodes_(widen(sys_.nodes())) {
    const std::size_t m = sys_.size();
    coeffs_.resize(m);
    xr_prime_.resize(m);
    xcoeffs_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto local = local_taylor<long double>(xnodes_, k);
        xr_prime_[k] = local.r_prime;
        xcoeffs_[k] = source_ == CoefficientSource::oracle ? solve_triangular(local, k)
                                                           : closed_form(local.r_prime, self_derivs(local.l));
        coeffs_[k].node_index = k;
        for (std::size_t p = 0; p < 4; ++p) coeffs_[k].c[p] = round_to_double(xcoeffs_[k][p]);
    }
}

void HermiteOperator::a0k_all_extended(cplx z, std::vector<xcplx>& out) const {
    const std::size_t m = xnodes_.size();
    const xcplx zx(z.real(), z.imag());
    out.resize(m);
    // out[k] holds prod_{j<k} (z - z_j) until the suffix pass.
    xcplx prefix(1.0L, 0.0L);
    for (std::size_t k = 0; k < m; ++k) {
        out[k] = prefix;
        prefix *= zx - xnodes_[k];
    }
    std::array<xcplx, 5> r_pow;
    r_pow[0] = 1.0L;
    for (std::size_t p = 1; p <= 4; ++p) r_pow[p] = r_pow[p - 1] * prefix;
    xcplx suffix(1.0L, 0.0L);
    for (std::size_t k = m; k-- > 0;) {
        const xcplx l = out[k] * suffix / xr_prime_[k];
        suffix *= zx - xnodes_[k];
        out[k] = assemble_a0k(l, r_pow, xcoeffs_[k]);
    }
}

void HermiteOperator::a0k_all(cplx z, std::vector<cplx>& out) const {
    thread_local std::vector<xcplx> ext;
    a0k_all_extended(z, ext);
    out.resize(ext.size());
    std::transform(ext.begin(), ext.end(), out.begin(), round_to_double);
}

std::vector<cplx> HermiteOperator::a0k_all(cplx z) const {
    std::vector<cplx> out;
    a0k_all(z, out);
    return out;
}

void HermiteOperator::a0k_jet_all_extended(cplx z, std::vector<ExtendedJet>& out) const {
    const std::size_t m = xnodes_.size();
    const xcplx zx(z.real(), z.imag());
    out.resize(m);
    ExtendedJet prefix = ExtendedJet::constant(1.0L);
    for (std::size_t k = 0; k < m; ++k) {
        out[k] = prefix;
        prefix.mul_linear(zx, xnodes_[k]);
    }
    std::array<ExtendedJet, 5> r_pow;
    r_pow[0] = ExtendedJet::constant(1.0L);
    for (std::size_t p = 1; p <= 4; ++p) r_pow[p] = r_pow[p - 1] * prefix;
    ExtendedJet suffix = ExtendedJet::constant(1.0L);
    for (std::size_t k = m; k-- > 0;) {
        const ExtendedJet l = out[k] * suffix * (1.0L / xr_prime_[k]);
        suffix.mul_linear(zx, xnodes_[k]);
        out[k] = assemble_a0k(l, r_pow, xcoeffs_[k]);
    }
}

void HermiteOperator::a0k_jet_all(cplx z, std::vector<ComplexJet>& out) const {
    std::vector<ExtendedJet> ext;
    a0k_jet_all_extended(z, ext);
    out.resize(ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k) out[k] = ext[k].cast<double>();
}

cplx HermiteOperator::a0k(std::size_t k, cplx z) const {
    if (k >= size()) throw InputError("a0k: node index out of range");
    const cplx l = lagrange_eval(sys_, k, z, basis_[k].r_prime());
    const cplx r = eval_R(sys_, z);
    const auto& c = coeffs_[k].c;
    cplx out = std::pow(l, 5);
    for (int p = 1; p <= 4; ++p) out += c[p - 1] * std::pow(r, p) * std::pow(l, 5 - p);
    return out;
}

ComplexJet HermiteOperator::a0k_jet(std::size_t k, cplx z) const {
    if (k >= size()) throw InputError("a0k_jet: node index out of range");
    const ComplexJet l = lagrange_jet(sys_, k, z, basis_[k].r_prime());
    const ComplexJet r = jet_eval_poly_from_roots(sys_.nodes(), z);
    const auto& c = coeffs_[k].c;
    ComplexJet out = jet_pow(l, 5);
    for (unsigned p = 1; p <= 4; ++p) out += jet_pow(r, p) * jet_pow(l, 5 - p) * c[p - 1];
    return out;
}

Interpolant::Interpolant(std::shared_ptr<const HermiteOperator> op, std::vector<cplx> values)
    : op_(std::move(op)), values_(std::move(values)) {
    if (!op_) throw InputError("Interpolant: null operator");
    if (values_.size() != op_->size()) {
        throw InputError("Interpolant: expected " + std::to_string(op_->size()) + " values, got " +
                         std::to_string(values_.size()));
    }
}

cplx Interpolant::eval(cplx z) const {
    thread_local std::vector<xcplx> a;
    op_->a0k_all_extended(z, a);
    xcplx sum{};
    for (std::size_t k = 0; k < a.size(); ++k) sum += xcplx(values_[k].real(), values_[k].imag()) * a[k];
    return round_to_double(sum);
}

ComplexJet Interpolant::eval_jet(cplx z) const {
    std::vector<ExtendedJet> a;
    op_->a0k_jet_all_extended(z, a);
    ExtendedJet sum;
    for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * xcplx(values_[k].real(), values_[k].imag());
    return sum.cast<double>();
}

Interpolant interpolate(const NodalSystem& sys, std::vector<cplx> values, CoefficientSource source) {
    if (values.size() != sys.size()) {
        throw InputError("interpolate: expected " + std::to_string(sys.size()) + " values, got " +
                         std::to_string(values.size()));
    }
    return Interpolant(std::make_shared<const HermiteOperator>(sys, source), std::move(values));
}

Interpolant interpolate(std::shared_ptr<const HermiteOperator> op, std::vector<cplx> values) {
    return Interpolant(std::move(op), std::move(values));
}

double HermiteResidualReport::max_scaled_derivative_residual() const {
    return *std::max_element(max_scaled_derivative.begin(), max_scaled_derivative.end());
}

HermiteResidualReport verify_hermite_conditions(const Interpolant& q) {
    HermiteResidualReport report;
    const auto& sys = q.system();
    const double n = sys.degree();
    report.nodes.reserve(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const ComplexJet jet = q.eval_jet(sys.node(k));
        NodeResidual row;
        row.node_index = k;
        row.value_residual = finite_or_inf(std::abs(jet.value() - q.values()[k]));
        double scale = 1.0;
        for (std::size_t r = 1; r <= 4; ++r) {
            scale *= n;
            row.scaled_derivative[r - 1] = finite_or_inf(std::abs(jet.derivative(r)) / scale);
            report.max_scaled_derivative[r - 1] =
                std::max(report.max_scaled_derivative[r - 1], row.scaled_derivative[r - 1]);
        }
        report.max_value_residual = std::max(report.max_value_residual, row.value_residual);
        report.nodes.push_back(row);
    }
    return report;
}

}  // namespace hfc
