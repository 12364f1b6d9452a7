#include "doctest.h"
#include "oracles.hpp"

#include "wedge/spheroidal.hpp"

#include <algorithm>

using namespace wedge;

namespace {

// Recurrence obtained by inserting sum c_s x^s, x = u - 1, into
// x(x+2)P'' + [2(mu+1)(x+1) - 2 alpha x(x+2)]P' + (2 alpha N x - A)P = 0.
std::vector<std::vector<double>> ode_matrix(double mu, double f, int N)
{
    const double alpha = f / (N + mu + 1);
    std::vector<std::vector<double>> m(N + 1, std::vector<double>(N + 1, 0.0));
    for (int s = 0; s <= N; ++s) {
        if (s > 0) m[s][s - 1] = 2 * alpha * (N - s + 1);
        m[s][s] = s * (s + 2 * mu + 1 - 4 * alpha);
        if (s < N) m[s][s + 1] = 2.0 * (s + 1) * (s + mu + 1);
    }
    return m;
}

double det_shifted(std::vector<std::vector<double>> m, double A)
{
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= A;
    return oracle::determinant(m);
}

// Pointwise residual of the conjugated equation for coefficients c.
double pointwise_residual(const std::vector<double>& c, double mu, double f, int N, double A, double x)
{
    const double alpha = f / (N + mu + 1);
    double p = 0, dp = 0, ddp = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        p += c[k] * std::pow(x, k);
        if (k >= 1) dp += k * c[k] * std::pow(x, k - 1);
        if (k >= 2) ddp += k * (k - 1.0) * c[k] * std::pow(x, k - 2);
    }
    return x * (x + 2) * ddp + (2 * (mu + 1) * (x + 1) - 2 * alpha * x * (x + 2)) * dp + (2 * alpha * N * x - A) * p;
}

}  // namespace

TEST_CASE("eigenvalues are roots of the brute-force determinant")
{
    for (double mu : {0.3, 0.5, 1.5})
        for (double f : {0.2, 1.0, 2.5})
            for (int N = 0; N <= 5; ++N) {
                const auto m = ode_matrix(mu, f, N);
                const auto sols = solve_spheroidal({mu, f, N});
                REQUIRE(sols.size() == std::size_t(N + 1));
                for (std::size_t i = 0; i < sols.size(); ++i) {
                    const double A = sols[i].A, h = 1e-6 * (1 + std::abs(A));
                    // |det| at the root is small against its slope nearby
                    const double slope = std::abs(det_shifted(m, A + h) - det_shifted(m, A - h)) / (2 * h);
                    CHECK(std::abs(det_shifted(m, A)) <= 1e-9 * slope * (1 + std::abs(A)));
                    CHECK(sols[i].index == int(i));
                    if (i > 0) CHECK(sols[i].A > sols[i - 1].A);
                    CHECK(sols[i].coeffs[0] == 1.0);
                    for (double x : {0.0, 0.5, 2.0}) {
                        double scale = 0;
                        for (double v : sols[i].coeffs) scale = std::max(scale, std::abs(v));
                        CHECK(std::abs(pointwise_residual(sols[i].coeffs, mu, f, N, A, x)) <=
                              1e-10 * scale * std::pow(1 + x, N + 2) * (1 + std::abs(A)));
                    }
                }
            }
}

TEST_CASE("mu = 0.5, f = 1, N = 1")
{
    const SpheroidalSpec spec{0.5, 1.0, 1};
    const auto sols = solve_spheroidal(spec);
    CHECK(sols[0].A == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(sols[1].A == doctest::Approx(2.4).epsilon(1e-13));
    // The recurrence exactly as printed puts 2 alpha on the diagonal instead.
    const auto printed = solve_spheroidal(spec, RecurrenceForm::as_printed);
    CHECK(printed[0].A == doctest::Approx(-0.8).epsilon(1e-13));
    CHECK(printed[1].A == doctest::Approx(3.0).epsilon(1e-13));
    const auto cp = characteristic_polynomial(build_tridiagonal(spec));
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == doctest::Approx(-2.4));
    CHECK(cp[1] == doctest::Approx(-1.4));
    CHECK(cp[2] == 1.0);
}

TEST_CASE("characteristic polynomial matches the determinant")
{
    for (int N = 1; N <= 4; ++N) {
        const auto m = ode_matrix(0.8, 1.3, N);
        const auto cp = characteristic_polynomial(build_tridiagonal({0.8, 1.3, N}));
        for (double A : {-3.0, 0.5, 4.0, 11.0}) {
            const double sign = (N + 1) % 2 ? -1.0 : 1.0;  // det(A - T) = (-1)^(N+1) det(T - A)
            CHECK(oracle::horner(cp, A) == doctest::Approx(sign * det_shifted(m, A)).epsilon(1e-10));
        }
    }
}

TEST_CASE("small focal distance recovers n(n + 2mu + 1)")
{
    for (double mu : {0.5, 2.0})
        for (int N = 0; N <= 6; ++N) {
            const auto sols = solve_spheroidal({mu, 1e-8, N});
            for (int n = 0; n <= N; ++n) CHECK(sols[n].A == doctest::Approx(n * (n + 2 * mu + 1)).epsilon(1e-7));
        }
}

TEST_CASE("recurrence read off the ODE agrees with the solver matrix")
{
    for (double mu : {0.25, 1.0, 3.0})
        for (double f : {0.1, 2.0})
            for (int N = 0; N <= 6; ++N) {
                const SpheroidalSpec spec{mu, f, N};
                const auto d = ode_derive_recurrence(spec);
                CHECK(recurrence_mismatch(d, build_tridiagonal(spec)) < 1e-10);
                CHECK(d.max_off_band < 1e-10);
                CHECK(d.max_singular < 1e-10);
                CHECK(d.shift == doctest::Approx(mu * (mu + 1) - spec.alpha() * spec.alpha() + 2 * spec.alpha() * N));
            }
}

TEST_CASE("charpoly cross-check flags the printed terms")
{
    const auto r1 = charpoly_crosscheck({0.7, 1.1, 1});
    REQUIRE(!r1.terms.empty());
    for (const auto& t : r1.terms) CHECK(t.matches_nu_reading);
    const auto r2 = charpoly_crosscheck({0.7, 1.1, 2});
    bool any_mismatch = false;
    for (const auto& t : r2.terms) any_mismatch = any_mismatch || !t.matches_nu_reading;
    CHECK(any_mismatch);
    CHECK(charpoly_crosscheck({0.7, 1.1, 3}).terms.empty());
}

TEST_CASE("invalid specs")
{
    CHECK_THROWS_AS(solve_spheroidal({0.5, -1.0, 1}), DomainError);
    CHECK_THROWS_AS(solve_spheroidal({0.5, 1.0, -1}), DomainError);
    CHECK_THROWS_AS(solve_spheroidal({-0.5, 1.0, 1}), DomainError);
}
