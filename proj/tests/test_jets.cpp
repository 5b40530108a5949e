#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hfcircle/jet.hpp"
#include "hfcircle/nodal.hpp"
#include "oracles.hpp"

using hfc::ComplexJet;
using hfc::cplx;

namespace {

bool jet_close(const ComplexJet& a, const ComplexJet& b, double tol) {
    double scale = 0.0;
    for (std::size_t i = 0; i < ComplexJet::kSize; ++i) scale = std::max(scale, std::abs(b[i]));
    for (std::size_t i = 0; i < ComplexJet::kSize; ++i) {
        if (std::abs(a[i] - b[i]) > tol * std::max(scale, 1.0)) return false;
    }
    return true;
}

ComplexJet random_jet(std::mt19937_64& rng) {
    ComplexJet j;
    for (std::size_t i = 0; i < ComplexJet::kSize; ++i) j[i] = oracle::random_in_square(rng);
    return j;
}

ComplexJet poly_jet(const std::vector<cplx>& coeffs, cplx a) {
    const ComplexJet z = hfc::jet_variable(a);
    ComplexJet acc;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + ComplexJet::constant(coeffs[i]);
    return acc;
}

}  // namespace

TEST_CASE("jet_variable") {
    const auto j0 = hfc::jet_variable(0.0);
    CHECK(j0[0] == cplx(0.0));
    CHECK(j0[1] == cplx(1.0));
    const auto j1 = hfc::jet_variable(cplx(1.0, 1.0));
    CHECK(j1[0] == cplx(1.0, 1.0));
    CHECK(j1.derivative(1) == cplx(1.0));
    for (std::size_t k = 2; k <= 5; ++k) CHECK(j1.derivative(k) == cplx(0.0));
}

TEST_CASE("jet arithmetic examples") {
    const auto sq = hfc::jet_mul(hfc::jet_variable(2.0), hfc::jet_variable(2.0));
    const cplx want_sq[] = {4.0, 4.0, 1.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) CHECK(sq[i] == want_sq[i]);

    const auto cube = hfc::jet_pow(hfc::jet_variable(1.0), 3);
    const cplx want_cube[] = {1.0, 3.0, 3.0, 1.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) CHECK(cube[i] == want_cube[i]);

    const cplx i_unit(0.0, 1.0);
    const auto z = hfc::jet_variable(i_unit);
    const auto q = hfc::jet_add(z * z, ComplexJet::constant(-1.0));
    const cplx want_q[] = {-2.0, cplx(0.0, 2.0), 1.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(q[k] - want_q[k]) < 1e-15);

    CHECK(hfc::jet_pow(z, 0)[0] == cplx(1.0));
    CHECK(hfc::jet_scale(z, 2.0)[1] == cplx(2.0));
}

TEST_CASE("jet_eval_poly_from_roots") {
    const cplx roots1[] = {cplx(0.0, 1.0), cplx(0.0, -1.0)};
    const auto a = hfc::jet_eval_poly_from_roots(roots1, 0.0);
    const cplx want_a[] = {1.0, 0.0, 1.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(a[k] - want_a[k]) < 1e-15);

    const cplx roots2[] = {1.0};
    const auto b = hfc::jet_eval_poly_from_roots(roots2, 1.0);
    CHECK(b[0] == cplx(0.0));
    CHECK(b[1] == cplx(1.0));

    // W for (0,0,2) at 0.5+0.1i, each order checked by a central difference
    // (step 1e-3, Richardson-extrapolated) of the next lower order.
    const auto sys = hfc::build_nodes({0.0, 0.0, 2});
    const cplx at(0.5, 0.1);
    const auto w = hfc::jet_eval_poly_from_roots(sys.interior_nodes(), at);
    CHECK(std::abs(w.value() - hfc::eval_W(sys, at)) <= 1e-14);
    const double h = 1e-3;
    for (std::size_t k = 1; k <= 5; ++k) {
        auto lower = [&](cplx p) { return hfc::jet_eval_poly_from_roots(sys.interior_nodes(), p).derivative(k - 1); };
        const cplx d1 = oracle::central_difference(lower, at, 1, h);
        const cplx d2 = oracle::central_difference(lower, at, 1, h / 2);
        const cplx fd = (4.0 * d2 - d1) / 3.0;
        const cplx got = w.derivative(k);
        // W has degree 4, so the fifth derivative is identically zero.
        if (k == 5) {
            CHECK(std::abs(got) < 1e-12);
            CHECK(std::abs(fd) < 1e-6);
        } else {
            CHECK(oracle::relative_error(got, fd) <= 1e-6);
        }
    }
    // Plain order-k central differences at step 1e-3 for the low orders.
    auto W = [&](cplx p) { return hfc::eval_W(sys, p); };
    CHECK(oracle::relative_error(w.derivative(1), oracle::central_difference(W, at, 1, h)) <= 1e-6);
    CHECK(oracle::relative_error(w.derivative(2), oracle::central_difference(W, at, 2, h)) <= 1e-6);
}

TEST_CASE("property: ring laws") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_jet(rng);
        const auto b = random_jet(rng);
        const auto c = random_jet(rng);
        CHECK(jet_close(a + b, b + a, 1e-13));
        CHECK(jet_close(a * b, b * a, 1e-13));
        CHECK(jet_close((a + b) + c, a + (b + c), 1e-13));
        CHECK(jet_close((a * b) * c, a * (b * c), 1e-13));
        CHECK(jet_close(a * (b + c), a * b + a * c, 1e-13));
    }
}

TEST_CASE("property: Leibniz rule") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_jet(rng);
        const auto g = random_jet(rng);
        const auto fg = f * g;
        for (std::size_t k = 0; k <= 5; ++k) {
            cplx sum{};
            double binom = 1.0;
            for (std::size_t j = 0; j <= k; ++j) {
                sum += binom * f.derivative(j) * g.derivative(k - j);
                binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
            }
            CHECK(std::abs(fg.derivative(k) - sum) <= 1e-12 * std::max(1.0, std::abs(sum)));
        }
    }
}

TEST_CASE("property: random polynomials against exact and finite-difference derivatives") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> degs(0, 10);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> coeffs(degs(rng) + 1);
        for (auto& c : coeffs) c = oracle::random_in_square(rng);
        const cplx a = oracle::random_in_disk(rng);
        const auto jet = poly_jet(coeffs, a);
        for (std::size_t k = 0; k <= 5; ++k) {
            // Exact k-th derivative of sum c_d z^d, accumulated in long double.
            oracle::lcplx exact{};
            const oracle::lcplx al(a.real(), a.imag());
            for (std::size_t d = k; d < coeffs.size(); ++d) {
                long double fall = 1.0L;
                for (std::size_t i = 0; i < k; ++i) fall *= static_cast<long double>(d - i);
                exact += fall * oracle::lcplx(coeffs[d].real(), coeffs[d].imag()) * std::pow(al, static_cast<int>(d - k));
            }
            const cplx want(static_cast<double>(exact.real()), static_cast<double>(exact.imag()));
            if (std::abs(want) == 0.0) {
                CHECK(std::abs(jet.derivative(k)) == 0.0);
            } else {
                CHECK(oracle::relative_error(jet.derivative(k), want) <= 1e-12);
            }
        }
    }
}
