#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "hfcircle/error.hpp"
#include "hfcircle/experiments.hpp"
#include "hfcircle/hermite.hpp"
#include "oracles.hpp"

using hfc::cplx;
using hfc::JacobiParams;

namespace {

const cplx I(0.0, 1.0);

// c_p R'(z_k)^p is the t^p coefficient of L_k(z_k + t)^{-5}; an independent
// third route to the coefficients using only the Taylor data of L_k.
std::array<cplx, 4> series_coefficients(const hfc::NodeBasisData& b) {
    std::array<cplx, 5> l{1.0, b.l_self_derivs[0], b.l_self_derivs[1] / 2.0, b.l_self_derivs[2] / 6.0,
                          b.l_self_derivs[3] / 24.0};
    std::array<cplx, 5> inv{1.0, 0.0, 0.0, 0.0, 0.0};
    for (int m = 1; m < 5; ++m) {
        for (int j = 1; j <= m; ++j) inv[m] -= l[j] * inv[m - j];
    }
    std::array<cplx, 5> pw{1.0, 0.0, 0.0, 0.0, 0.0};
    for (int rep = 0; rep < 5; ++rep) {
        std::array<cplx, 5> next{};
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; i + j < 5; ++j) next[i + j] += pw[i] * inv[j];
        }
        pw = next;
    }
    std::array<cplx, 4> out{};
    cplx rp_pow = 1.0;
    for (int p = 1; p <= 4; ++p) {
        rp_pow *= b.r_prime();
        out[p - 1] = pw[p] / rp_pow;
    }
    return out;
}

std::vector<cplx> random_values(std::mt19937_64& rng, std::size_t m) {
    std::vector<cplx> v(m);
    for (auto& x : v) x = oracle::random_in_square(rng);
    return v;
}

}  // namespace

TEST_CASE("coeffs_closed_form") {
    hfc::NodeBasisData flat;
    flat.r_derivs = {2.0, 0.0, 0.0, 0.0, 0.0};
    flat.l_self_derivs = {0.0, 0.0, 0.7, -0.3};
    const auto c = hfc::coeffs_closed_form(flat);
    CHECK(c.c[0] == cplx(0.0));
    CHECK(c.c[1] == cplx(0.0));

    const auto sys = hfc::build_nodes({0.0, 0.0, 1});
    const auto basis = hfc::build_basis_data(sys);
    CHECK(std::abs(hfc::coeffs_closed_form(basis[1]).c[0] - (-15.0 / 8.0)) < 1e-14);
}

TEST_CASE("coeffs_oracle") {
    const auto sys = hfc::build_nodes({0.0, 0.0, 1});
    const auto basis = hfc::build_basis_data(sys);
    CHECK(std::abs(hfc::coeffs_oracle(sys, basis, 1).c[0] - (-15.0 / 8.0)) < 1e-14);

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ab(-0.9, 1.5);
    for (int trial = 0; trial < 12; ++trial) {
        const auto s = hfc::build_nodes({ab(rng), ab(rng), 1 + trial * 2});
        const auto b = hfc::build_basis_data(s);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const auto c = hfc::coeffs_oracle(s, b, k);
            // First forward-substitution step is c_1 = -5 L_k'(z_k) / R'(z_k).
            CHECK(oracle::relative_error(c.c[0], -5.0 * b[k].l_self_derivs[0] / b[k].r_prime()) <= 1e-12);
            const auto series = series_coefficients(b[k]);
            for (int p = 0; p < 4; ++p) CHECK(oracle::relative_error(c.c[p], series[p]) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(hfc::coeffs_oracle(sys, std::span(basis).first(2), 0), hfc::InputError);
}

TEST_CASE("closed form versus oracle: c_1 agrees, higher orders carry a fixed discrepancy") {
    // The closed-form c_2..c_4 differ from the exact solution of the derivative
    // conditions. With l_s = L_k^(s)(z_k) and r = R'(z_k), closed form minus exact is
    //   c_2: -40 l_1^2 / r^2
    //   c_3: +200 l_1^3 / r^3
    //   c_4: -5 (2880 l_1^4 - 408 l_1^2 l_2 + 19 l_2^2) / (24 r^4)
    for (const JacobiParams p : {JacobiParams{-0.5, -0.5, 4}, JacobiParams{0.0, 0.0, 8}, JacobiParams{0.3, -0.2, 16}}) {
        const auto sys = hfc::build_nodes(p);
        const auto basis = hfc::build_basis_data(sys);
        const auto rows = hfc::compare_coefficients(sys, basis);
        REQUIRE(rows.size() == 4 * sys.size());
        for (const auto& row : rows) {
            const auto& b = basis[row.node_index];
            const cplx r = b.r_prime();
            const cplx l1 = b.l_self_derivs[0];
            const cplx l2 = b.l_self_derivs[1];
            cplx delta{};
            switch (row.p) {
                case 1: delta = 0.0; break;
                case 2: delta = -40.0 * l1 * l1 / (r * r); break;
                case 3: delta = 200.0 * l1 * l1 * l1 / (r * r * r); break;
                case 4:
                    delta = -5.0 * (2880.0 * std::pow(l1, 4) - 408.0 * l1 * l1 * l2 + 19.0 * l2 * l2) /
                            (24.0 * std::pow(r, 4));
                    break;
            }
            const double scale = std::max({std::abs(row.oracle), std::abs(row.closed_form), 1e-300});
            CHECK(std::abs((row.closed_form - row.oracle) - delta) <= 1e-8 * scale);
            if (row.p == 1) CHECK(row.agrees);
            CHECK(row.agrees == (row.rel_diff <= hfc::kCoefficientAgreementTol));
        }
    }
}

TEST_CASE("A_0k at nodes") {
    for (const JacobiParams p : {JacobiParams{0.0, 0.0, 1}, JacobiParams{0.5, 0.5, 6}, JacobiParams{0.3, -0.2, 10}}) {
        const hfc::HermiteOperator op(hfc::build_nodes(p));
        const auto& sys = op.system();
        double sup = 0.0;
        for (int i = 0; i < 256; ++i) {
            for (const cplx& v : op.a0k_all(std::polar(1.0, 2 * std::numbers::pi * i / 256))) sup = std::max(sup, std::abs(v));
        }
        for (std::size_t j = 0; j < sys.size(); ++j) {
            const auto all = op.a0k_all(sys.node(j));
            for (std::size_t k = 0; k < sys.size(); ++k) {
                CHECK(std::abs(all[k] - (k == j ? 1.0 : 0.0)) <= 1e-12);
                const auto jet = op.a0k_jet(k, sys.node(j));
                CHECK(std::abs(jet.value() - (k == j ? 1.0 : 0.0)) <= 1e-12);
                for (std::size_t r = 1; r <= 4; ++r) CHECK(std::abs(jet.derivative(r)) <= 1e-9 * sup);
            }
        }
    }
}

TEST_CASE("A_0k through closed-form and solved coefficients, against a brute-force Hermite solve") {
    const auto sys = hfc::build_nodes({0.0, 0.0, 1});
    const hfc::HermiteOperator solved(sys);
    const hfc::HermiteOperator closed(sys, hfc::CoefficientSource::closed_form);
    std::vector<cplx> one_hot(sys.size(), 0.0);
    one_hot[0] = 1.0;
    const auto monomials = oracle::brute_force_hermite({sys.nodes().begin(), sys.nodes().end()}, one_hot);
    const cplx want = oracle::horner(monomials, 0.0);
    CHECK(std::abs(solved.a0k(0, 0.0) - want) <= 1e-10);
    // L_0'(1) = 3/2 here, so the closed-form c_2..c_4 move A_00(0) away from the true value.
    CHECK(std::abs(closed.a0k(0, 0.0) - want) > 1e-3);
}

TEST_CASE("interpolant matches a brute-force confluent Vandermonde solve") {
    std::mt19937_64 rng(47);
    for (const JacobiParams p : {JacobiParams{0.0, 0.0, 1}, JacobiParams{-0.5, 0.2, 2}, JacobiParams{0.4, 0.1, 3}}) {
        const auto sys = hfc::build_nodes(p);
        const auto values = random_values(rng, sys.size());
        const auto q = hfc::interpolate(sys, values);
        const auto monomials = oracle::brute_force_hermite({sys.nodes().begin(), sys.nodes().end()}, values);
        for (int i = 0; i < 32; ++i) {
            const cplx z = oracle::random_in_disk(rng);
            const cplx want = oracle::horner(monomials, z);
            CHECK(std::abs(q.eval(z) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("interpolate") {
    const auto sys = hfc::build_nodes({0.2, 0.7, 9});
    CHECK_THROWS_AS(hfc::interpolate(sys, std::vector<cplx>(3, 1.0)), hfc::InputError);

    const auto ones = hfc::interpolate(sys, std::vector<cplx>(sys.size(), 1.0));
    for (int i = 0; i < 128; ++i) {
        const cplx z = std::polar(1.0, 2 * std::numbers::pi * i / 128);
        CHECK(std::abs(ones.eval(z) - 1.0) <= 1e-9 * sys.degree());
    }

    auto op = std::make_shared<const hfc::HermiteOperator>(sys);
    std::vector<cplx> hot(sys.size(), 0.0);
    hot[3] = 1.0;
    const auto q3 = hfc::interpolate(op, hot);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        const cplx z = oracle::random_in_disk(rng);
        CHECK(std::abs(q3.eval(z) - op->a0k(3, z)) <= 1e-12 * std::max(1.0, std::abs(op->a0k(3, z))));
    }

    std::vector<cplx> ident(sys.nodes().begin(), sys.nodes().end());
    const auto qz = hfc::interpolate(op, ident);
    for (std::size_t k = 0; k < sys.size(); ++k) CHECK(std::abs(qz.eval(sys.node(k)) - sys.node(k)) <= 1e-13);
}

TEST_CASE("eval and eval_jet") {
    const auto sys = hfc::build_nodes({0.0, 0.0, 4});
    auto op = std::make_shared<const hfc::HermiteOperator>(sys);
    std::vector<cplx> sq;
    for (const cplx& z : sys.nodes()) sq.push_back(z * z);
    const auto q = hfc::interpolate(op, sq);

    // Per-k direct formula versus the prefix/suffix Horner path.
    const cplx at(0.3, 0.2);
    cplx direct{};
    for (std::size_t k = 0; k < sys.size(); ++k) direct += sq[k] * op->a0k(k, at);
    CHECK(std::abs(hfc::eval(q, at) - direct) <= 1e-10);
    CHECK(std::abs(hfc::eval_jet(q, at).value() - direct) <= 1e-10);

    const double lambda = hfc::lebesgue_constant(*op, 512);
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const auto jet = q.eval_jet(sys.node(k));
        CHECK(std::abs(jet.value() - sq[k]) <= 1e-12);
        for (std::size_t r = 1; r <= 4; ++r) CHECK(std::abs(jet.derivative(r)) <= 1e-8 * std::max(1.0, lambda));
    }
}

TEST_CASE("verify_hermite_conditions") {
    std::mt19937_64 rng(59);
    const auto c = hfc::verify_hermite_conditions(hfc::interpolate(hfc::build_nodes({0.0, 0.0, 12}),
                                                                   std::vector<cplx>(26, cplx(0.3, -2.0))));
    CHECK(c.max_value_residual <= 1e-9);
    CHECK(c.max_scaled_derivative_residual() <= 1e-9);

    std::uniform_real_distribution<double> ab(-0.9, 1.5);
    for (int n = 1; n <= 16; ++n) {
        const auto sys = hfc::build_nodes({ab(rng), ab(rng), n});
        const auto report = hfc::verify_hermite_conditions(hfc::interpolate(sys, random_values(rng, sys.size())));
        CHECK(report.nodes.size() == sys.size());
        CHECK(report.max_value_residual <= 1e-9);
        CHECK(report.max_scaled_derivative_residual() <= 1e-6);
    }

    const auto sys = hfc::build_nodes({0.1, 0.1, 5});
    std::vector<cplx> hot(sys.size(), 0.0);
    hot[4] = 1.0;
    const auto table = hfc::verify_hermite_conditions(hfc::interpolate(sys, hot));
    for (const auto& row : table.nodes) {
        CHECK(row.value_residual <= 1e-12);
        for (double d : row.scaled_derivative) CHECK(d <= 1e-9);
    }
}

TEST_CASE("closed-form coefficients break the derivative conditions") {
    const auto sys = hfc::build_nodes({0.0, 0.0, 8});
    std::vector<cplx> values(sys.nodes().begin(), sys.nodes().end());
    const auto q = hfc::interpolate(sys, values, hfc::CoefficientSource::closed_form);
    const auto report = hfc::verify_hermite_conditions(q);
    CHECK(report.max_value_residual <= 1e-12);
    CHECK(report.max_scaled_derivative[0] <= 1e-9);
    CHECK(report.max_scaled_derivative[1] > 1e-3);
}

TEST_CASE("property: partition of unity on the closed disk") {
    std::mt19937_64 rng(61);
    for (int n : {2, 8, 16, 32}) {
        const hfc::HermiteOperator op(hfc::build_nodes({-0.3, 0.6, n}));
        for (int i = 0; i < 100; ++i) {
            const cplx z = i < 50 ? oracle::random_in_disk(rng) : std::polar(1.0, 2 * std::numbers::pi * i / 50.0);
            cplx sum{};
            for (const cplx& a : op.a0k_all(z)) sum += a;
            CHECK(std::abs(sum - 1.0) <= 1e-9 * n);
        }
    }
}

TEST_CASE("property: conjugation equivariance") {
    std::mt19937_64 rng(67);
    const auto sys = hfc::build_nodes({0.25, -0.6, 11});
    const auto f = [](cplx z) { return std::exp(z) + 1.0 / (z - 2.0); };
    std::vector<cplx> values;
    for (const cplx& z : sys.nodes()) values.push_back(f(z));
    // Enforce exact conjugate symmetry of the data.
    const int n = sys.degree();
    for (int k = 1; k <= n; ++k) values[n + k] = std::conj(values[k]);
    values[0] = values[0].real();
    values[2 * n + 1] = values[2 * n + 1].real();
    const auto q = hfc::interpolate(sys, values);
    for (int i = 0; i < 64; ++i) {
        const cplx z = oracle::random_in_disk(rng);
        CHECK(std::abs(q.eval(std::conj(z)) - std::conj(q.eval(z))) <= 1e-10 * std::max(1.0, std::abs(q.eval(z))));
    }
}

TEST_CASE("property: degree of Q_n is below 5(2n+2)") {
    std::mt19937_64 rng(71);
    for (int n : {1, 2, 3, 4}) {
        const auto sys = hfc::build_nodes({0.0, 0.0, n});
        const auto q = hfc::interpolate(sys, random_values(rng, sys.size()));
        const int bound = 5 * (2 * n + 2);
        const auto coeffs = oracle::monomial_coefficients_from_roots_of_unity([&](cplx z) { return q.eval(z); }, bound + 6);
        double top = 0.0;
        for (int d = 0; d < bound; ++d) top = std::max(top, std::abs(coeffs[d]));
        for (int d = bound; d < bound + 6; ++d) CHECK(std::abs(coeffs[d]) <= 1e-8 * top);
    }
}
