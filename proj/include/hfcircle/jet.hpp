#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace hfc {

/// Degree-5 truncated Taylor series over std::complex<Real>.
///
/// Coefficient c[k] is f^(k)(a)/k! at an expansion point a that the caller
/// tracks. Arithmetic follows truncated Cauchy-product semantics; there is no
/// division because every quantity built from jets here is a polynomial.
template <typename Real>
class BasicJet {
public:
    static constexpr std::size_t kOrder = 5;
    static constexpr std::size_t kSize = kOrder + 1;
    using value_type = std::complex<Real>;

    BasicJet() = default;
    explicit BasicJet(const std::array<value_type, kSize>& coeffs) : c_(coeffs) {}

    static BasicJet constant(value_type v) {
        BasicJet j;
        j.c_[0] = v;
        return j;
    }

    /// Jet of the identity map at a: (a, 1, 0, 0, 0, 0).
    static BasicJet variable(value_type a) {
        BasicJet j;
        j.c_[0] = a;
        j.c_[1] = Real(1);
        return j;
    }

    const value_type& operator[](std::size_t k) const { return c_[k]; }
    value_type& operator[](std::size_t k) { return c_[k]; }
    const std::array<value_type, kSize>& coeffs() const { return c_; }

    value_type value() const { return c_[0]; }

    /// k-th derivative at the expansion point, k! * c[k].
    value_type derivative(std::size_t k) const {
        Real fact = 1;
        for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<Real>(i);
        return fact * c_.at(k);
    }

    BasicJet& operator+=(const BasicJet& o) {
        for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
        return *this;
    }
    BasicJet& operator-=(const BasicJet& o) {
        for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    BasicJet& operator*=(value_type s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    BasicJet& operator*=(const BasicJet& o) {
        std::array<value_type, kSize> out{};
        for (std::size_t i = 0; i < kSize; ++i) {
            if (c_[i] == value_type{}) continue;
            for (std::size_t j = 0; i + j < kSize; ++j) out[i + j] += c_[i] * o.c_[j];
        }
        c_ = out;
        return *this;
    }

    /// Multiply by the linear factor (z - root) expanded at the point a.
    BasicJet& mul_linear(value_type a, value_type root) {
        const value_type d = a - root;
        for (std::size_t i = kSize - 1; i > 0; --i) c_[i] = c_[i] * d + c_[i - 1];
        c_[0] *= d;
        return *this;
    }

    template <typename Other>
    BasicJet<Other> cast() const {
        BasicJet<Other> out;
        for (std::size_t i = 0; i < kSize; ++i) {
            out[i] = std::complex<Other>(static_cast<Other>(c_[i].real()), static_cast<Other>(c_[i].imag()));
        }
        return out;
    }

    friend BasicJet operator+(BasicJet a, const BasicJet& b) { return a += b; }
    friend BasicJet operator-(BasicJet a, const BasicJet& b) { return a -= b; }
    friend BasicJet operator*(BasicJet a, const BasicJet& b) { return a *= b; }
    friend BasicJet operator*(BasicJet a, value_type s) { return a *= s; }
    friend BasicJet operator*(value_type s, BasicJet a) { return a *= s; }

private:
    std::array<value_type, kSize> c_{};
};

using ComplexJet = BasicJet<double>;
/// Same arithmetic in long double; used internally where cancellation is severe.
using ExtendedJet = BasicJet<long double>;

/// j^m by repeated multiplication; m >= 0.
template <typename Real>
BasicJet<Real> jet_pow(const BasicJet<Real>& j, unsigned m) {
    auto out = BasicJet<Real>::constant(Real(1));
    for (unsigned i = 0; i < m; ++i) out *= j;
    return out;
}

/// Jet at a of prod_j (z - roots[j]).
template <typename Real>
BasicJet<Real> jet_eval_poly_from_roots(std::span<const std::complex<Real>> roots, std::complex<Real> a) {
    auto out = BasicJet<Real>::constant(Real(1));
    for (const auto& r : roots) out.mul_linear(a, r);
    return out;
}

inline ComplexJet jet_eval_poly_from_roots(std::span<const std::complex<double>> roots, std::complex<double> a) {
    return jet_eval_poly_from_roots<double>(roots, a);
}

inline ComplexJet jet_variable(std::complex<double> a) { return ComplexJet::variable(a); }
inline ComplexJet jet_add(const ComplexJet& a, const ComplexJet& b) { return a + b; }
inline ComplexJet jet_mul(const ComplexJet& a, const ComplexJet& b) { return a * b; }
inline ComplexJet jet_scale(const ComplexJet& a, std::complex<double> s) { return a * s; }

}  // namespace hfc
