#include "doctest.h"
#include "oracles.hpp"

#include "wedge/ladders.hpp"

using namespace wedge;
using oracle::pi;

namespace {

// [z + B (z^2 - 1) d/dz] applied to coefficients, B = 1/(2mu+n+1) raising, -1/n lowering.
oracle::Coeffs polar_step(const oracle::Coeffs& c, double B)
{
    oracle::Coeffs out(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        out[k + 1] += c[k];
        if (k > 0) {
            out[k + 1] += B * k * c[k];
            out[k - 1] -= B * k * c[k];
        }
    }
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

}  // namespace

TEST_CASE("polynomial ladders move one rung with the expected scalars")
{
    for (double b : {1.3, 2.5, 4.0})
        for (int n = 0; n <= 8; ++n) {
            const auto up = kummer_raise(n, b);
            CHECK(up.scalar == doctest::Approx(b + n));
            CHECK(oracle::max_diff(up.result.coeffs(), kummer_poly(n + 1, b).coeffs()) < 1e-12);
            const auto down = kummer_lower(n, b);
            if (n == 0) {
                CHECK(down.annihilated);
                CHECK(down.result.is_zero());
            } else {
                CHECK(down.scalar == doctest::Approx(-n));
                CHECK(oracle::max_diff(down.result.coeffs(), kummer_poly(n - 1, b).coeffs()) < 1e-12);
            }
        }
    for (int n = 0; n <= 8; ++n) {
        CHECK(hermite_raise(n).scalar == 1.0);
        if (n > 0) CHECK(hermite_lower(n).scalar == 2.0 * n);
    }
    CHECK(hermite_lower(0).annihilated);
}

TEST_CASE("polar ladders follow the two-parameter operators")
{
    for (double mu : {0.3, 1.0, 2.7})
        for (int n = 0; n <= 8; ++n) {
            const oracle::Coeffs p = polar_parity_poly(n, mu).coeffs();
            const oracle::Coeffs up = polar_step(p, 1.0 / (2 * mu + n + 1));
            CHECK(oracle::max_diff(up, polar_parity_poly(n + 1, mu).coeffs()) < 1e-12);
            CHECK(oracle::max_diff(up, polar_raise_op(polar_parity_poly(n, mu), n, mu).coeffs()) < 1e-12);
            if (n > 0) {
                const oracle::Coeffs down = polar_step(p, -1.0 / n);
                CHECK(oracle::max_diff(down, polar_parity_poly(n - 1, mu).coeffs()) < 1e-12);
                CHECK(polar_lower(n, mu).scalar == 1.0);
            }
        }
    CHECK(polar_lower(0, 0.5).annihilated);
}

TEST_CASE("angular ladders")
{
    const AngularMode m = AngularMode::from_angle(2, pi / 2);
    const auto up = angular_raise(m);
    REQUIRE(up.result);
    CHECK(up.result->n_phi() == 3);
    CHECK(up.result->mu() == doctest::Approx(6.0));
    CHECK(angular_lower(AngularMode::from_angle(1, pi / 2)).annihilated);
    for (double phi : {0.1, 0.7, 1.2})
        CHECK(angular_operator_apply(m, Direction::raise, phi) == doctest::Approx(std::sin(6 * phi)));
}

TEST_CASE("ground-state annihilation is structural")
{
    for (double mu : {0.5, 1.0, 2.0, pi / 2.7}) {
        CHECK(ground_annihilation_residual(mu, Direction::raise).max_abs == 0.0);
        // The lowering sign does not annihilate, nor does a mismatched mu.
        CHECK(ground_annihilation_residual(mu, Direction::lower).max_abs > 0.1);
        CHECK(ground_annihilation_residual(mu, Direction::raise, mu + 0.25).max_abs > 0.1);
    }
}

TEST_CASE("state ladders")
{
    const AngularMode m = AngularMode::abstract(0.8);
    const auto s = make_state(Family::osc_cyl, 1, 2, m);
    const auto r = apply_ladder(s, Dof::radial, Direction::raise);
    REQUIRE(r.state);
    CHECK(quantum_numbers(*r.state) == std::pair{2, 2});
    CHECK(r.energy_shift == doctest::Approx(2.0));
    const auto z = apply_ladder(s, Dof::axial, Direction::lower);
    REQUIRE(z.state);
    CHECK(z.scalar == doctest::Approx(4.0));
    CHECK(apply_ladder(make_state(Family::osc_cyl, 0, 0, m), Dof::radial, Direction::lower).annihilated);

    const auto a = apply_ladder(make_state(Family::hyd_sph, 0, 1, AngularMode::from_angle(1, pi)), Dof::angular, Direction::raise);
    REQUIRE(a.state);
    CHECK(mode_of(*a.state).n_phi() == 2);
    CHECK(a.energy_shift > 0.0);

    CHECK_THROWS_AS(apply_ladder(s, Dof::xi, Direction::raise), DomainError);
    CHECK(dof_from_name(dof_name(Dof::polar)) == Dof::polar);
    CHECK_THROWS_AS(dof_from_name("sideways"), DomainError);
}

TEST_CASE("spheroidal ladder stays in the shell")
{
    const auto s = make_state(Family::hyd_spheroidal, 1, 1, AngularMode::abstract(0.5), 1.2);
    const auto up = apply_ladder(s, Dof::spheroidal, Direction::raise);
    REQUIRE(up.state);
    CHECK(quantum_numbers(*up.state) == std::pair{2, 0});
    CHECK(up.energy_shift == 0.0);
    CHECK(apply_ladder(*up.state, Dof::spheroidal, Direction::raise).annihilated);
}
