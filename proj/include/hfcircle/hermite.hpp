#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hfcircle/basis.hpp"
#include "hfcircle/jet.hpp"
#include "hfcircle/nodal.hpp"

namespace hfc {

/// c_{1k} .. c_{4k} of A_{0k} = L_k^5 + sum_p c_{pk} R^p L_k^{5-p}.
struct HermiteCoefficients {
    std::size_t node_index = 0;
    std::array<cplx, 4> c{};
};

/// The four coefficients transcribed from the reference closed forms, written
/// in terms of L_k'(z_k)..L_k''''(z_k) and R'(z_k).
HermiteCoefficients coeffs_closed_form(const NodeBasisData& basis_k);

/// Coefficients obtained by imposing A_{0k}^{(r)}(z_k) = 0, r = 1..4, on jets.
///
/// The jet of R^p L_k^{5-p} at z_k vanishes below order p, so the conditions
/// form a lower-triangular system with diagonal R'(z_k)^p, solved by forward
/// substitution. Throws DegenerateSystem on a zero diagonal.
HermiteCoefficients coeffs_oracle(const NodalSystem& sys, std::span<const NodeBasisData> basis, std::size_t k);

/// One (p, k) cell of the closed-form versus oracle comparison.
struct CoefficientComparison {
    std::size_t node_index = 0;
    int p = 1;
    cplx closed_form;
    cplx oracle;
    double rel_diff = 0.0;
    bool agrees = true;
};

inline constexpr double kCoefficientAgreementTol = 1e-8;

std::vector<CoefficientComparison> compare_coefficients(const NodalSystem& sys, std::span<const NodeBasisData> basis,
                                                        double rel_tol = kCoefficientAgreementTol);

enum class CoefficientSource { oracle, closed_form };

using xcplx = std::complex<long double>;

/// The fundamental polynomials A_{0k} of a nodal system.
///
/// Evaluation of all 2n+2 of them at one point costs O(n): prefix and suffix
/// products of (z - z_j) give every factor-cancelled L_k(z) without division
/// by (z - z_k). R'(z_k), the coefficients and the evaluation run in long
/// double: sum_k A_{0k}(z) = 1 cancels terms as large as the Lebesgue
/// constant, which reaches 1e7 at n = 32 for alpha = beta = -1/2.
class HermiteOperator {
public:
    explicit HermiteOperator(NodalSystem sys, CoefficientSource source = CoefficientSource::oracle);

    const NodalSystem& system() const { return sys_; }
    std::span<const NodeBasisData> basis() const { return basis_; }
    std::span<const HermiteCoefficients> coefficients() const { return coeffs_; }
    CoefficientSource source() const { return source_; }
    std::size_t size() const { return sys_.size(); }

    /// A_{0k}(z) for every k, written into out (resized to 2n+2).
    void a0k_all(cplx z, std::vector<cplx>& out) const;
    std::vector<cplx> a0k_all(cplx z) const;
    void a0k_jet_all(cplx z, std::vector<ComplexJet>& out) const;

    /// Unrounded variants; sums over k should be formed from these.
    void a0k_all_extended(cplx z, std::vector<xcplx>& out) const;
    void a0k_jet_all_extended(cplx z, std::vector<ExtendedJet>& out) const;

    cplx a0k(std::size_t k, cplx z) const;
    ComplexJet a0k_jet(std::size_t k, cplx z) const;

private:
    NodalSystem sys_;
    CoefficientSource source_;
    std::vector<NodeBasisData> basis_;
    std::vector<HermiteCoefficients> coeffs_;
    std::vector<xcplx> xnodes_;
    std::vector<xcplx> xr_prime_;
    std::vector<std::array<xcplx, 4>> xcoeffs_;
};

/// Q_n(z) = sum_k f(z_k) A_{0k}(z).
class Interpolant {
public:
    Interpolant(std::shared_ptr<const HermiteOperator> op, std::vector<cplx> values);

    const HermiteOperator& op() const { return *op_; }
    const NodalSystem& system() const { return op_->system(); }
    std::span<const cplx> values() const { return values_; }

    cplx eval(cplx z) const;
    ComplexJet eval_jet(cplx z) const;

private:
    std::shared_ptr<const HermiteOperator> op_;
    std::vector<cplx> values_;
};

/// Throws InputError unless values.size() == 2n+2.
Interpolant interpolate(const NodalSystem& sys, std::vector<cplx> values,
                        CoefficientSource source = CoefficientSource::oracle);
Interpolant interpolate(std::shared_ptr<const HermiteOperator> op, std::vector<cplx> values);

inline cplx eval(const Interpolant& q, cplx z) { return q.eval(z); }
inline ComplexJet eval_jet(const Interpolant& q, cplx z) { return q.eval_jet(z); }

struct NodeResidual {
    std::size_t node_index = 0;
    double value_residual = 0.0;
    /// |Q^(r)(z_k)| / n^r for r = 1..4.
    std::array<double, 4> scaled_derivative{};
};

struct HermiteResidualReport {
    std::vector<NodeResidual> nodes;
    double max_value_residual = 0.0;
    std::array<double, 4> max_scaled_derivative{};

    double max_scaled_derivative_residual() const;
};

HermiteResidualReport verify_hermite_conditions(const Interpolant& q);

}  // namespace hfc
