#include "doctest.h"
#include "oracles.hpp"

#include "wedge/interbasis.hpp"

using namespace wedge;
using oracle::pi;

namespace {

// <row_i | col_j> / ||common factor||^2 by quadrature over (r, theta).
Eigen::MatrixXd quadrature_overlap(const TransformMatrix& t, double r_max)
{
    const auto rows = t.rows.states(), cols = t.cols.states();
    const oracle::GaussLegendre gr(160), gt(120);
    const double phi = 0.3 * t.rows.mode.phi0();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows.size(), cols.size());
    double den = 0.0;
    for (std::size_t a = 0; a < gr.x.size(); ++a) {
        const double r = 0.5 * r_max * (gr.x[a] + 1);
        for (std::size_t b = 0; b < gt.x.size(); ++b) {
            const double th = 0.5 * pi * (gt.x[b] + 1);
            const double w = gr.w[a] * gt.w[b] * r * r * std::sin(th);
            const Spherical p{r, th, phi};
            const Cartesian x = to_cartesian(p);
            auto at = [&](const Eigenstate& s) -> CoordinatePoint {
                switch (family_of(s)) {
                case Family::osc_cyl: return to_cylindrical(x);
                case Family::hyd_par: return to_parabolic(x);
                default: return p;
                }
            };
            const double c = common_factor(rows[0], p);
            den += w * c * c;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double pi_ = eval_normalized(rows[i], p);
                for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) += w * pi_ * eval_normalized(cols[j], at(cols[j]));
            }
        }
    }
    return m / den;
}

}  // namespace

TEST_CASE("hydrogen spherical-parabolic N = 1 is a 45 degree rotation")
{
    const auto t = hydrogen_sph_par_matrix(1, AngularMode::abstract(1.0));
    const double h = std::sqrt(0.5);
    CHECK(t.m(0, 0) == doctest::Approx(h));
    CHECK(t.m(0, 1) == doctest::Approx(-h));
    CHECK(t.m(1, 0) == doctest::Approx(h));
    CHECK(t.m(1, 1) == doctest::Approx(h));
}

TEST_CASE("closed forms are orthonormal")
{
    for (double mu : {0.3, 0.5, 2.2}) {
        const AngularMode m = AngularMode::abstract(mu);
        for (int N = 0; N <= 5; ++N) CHECK(osc_interbasis_matrix(N, m).orthonormality_defect() < 1e-12);
        for (int N = 0; N <= 2; ++N) CHECK(hydrogen_sph_par_matrix(N, m).orthonormality_defect() < 1e-12);
    }
}

TEST_CASE("closed forms equal brute-force overlap integrals")
{
    for (double mu : {0.5, 1.3}) {
        const AngularMode m = AngularMode::abstract(mu);
        for (int N = 1; N <= 3; ++N) {
            const auto t = osc_interbasis_matrix(N, m);
            CHECK((quadrature_overlap(t, 9.0) - t.m).cwiseAbs().maxCoeff() < 1e-8);
        }
        for (int N = 1; N <= 2; ++N) {
            const auto t = hydrogen_sph_par_matrix(N, m);
            CHECK((quadrature_overlap(t, 40.0 * (N + mu + 1)) - t.m).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("numeric overlap recovers the closed forms")
{
    const AngularMode m = AngularMode::abstract(0.8);
    for (int N = 0; N <= 5; ++N) {
        const auto t = osc_interbasis_matrix(N, m);
        const auto num = numeric_overlap_matrix(t.rows, t.cols);
        CHECK(num.points >= 4 * (N + 1) * (N + 1));
        CHECK(num.condition < 1e8);
        CHECK(align_signs(num.matrix.m, t.m).max_diff < 1e-8);
    }
    // Beyond the closed forms the numeric route still gives an orthogonal matrix.
    CHECK(osc_interbasis_matrix(7, m).orthonormality_defect() < 1e-8);
    CHECK(hydrogen_sph_par_matrix(4, m).orthonormality_defect() < 1e-8);
}

TEST_CASE("published N = 4 oscillator matrix differs by one column sign")
{
    const auto t = osc_interbasis_matrix(4, AngularMode::abstract(0.6));
    const auto g = align_signs(numeric_overlap_matrix(t.rows, t.cols).matrix.m, t.m);
    CHECK(g.max_diff < 1e-8);
    int flips = 0;
    for (int c : g.col_signs) flips += c * g.row_signs[0] < 0;
    for (int r : g.row_signs) CHECK(r == g.row_signs[0]);
    CHECK(flips == 1);
}

TEST_CASE("spherical-spheroidal expansions hold pointwise")
{
    for (double mu : {0.5, 1.7})
        for (double f : {0.4, 1.0, 3.0}) {
            const AngularMode m = AngularMode::abstract(mu);
            for (int N = 0; N <= 3; ++N) {
                const auto t = hydrogen_sph_spheroidal_matrix(N, m, f);
                CHECK(pointwise_expansion_error(t) < 1e-10);
            }
            double res = 1.0;
            const auto c = sph_spheroidal_by_coefficients(1, m, f, &res);
            CHECK(res < 1e-10);
            CHECK((c.m - hydrogen_sph_spheroidal_matrix(1, m, f).m).cwiseAbs().maxCoeff() < 1e-10);
            // The printed N = 1 matrix carries an extra 1/f on its first row.
            const Eigen::MatrixXd printed = printed_sph_spheroidal_matrix_n1(m, f);
            CHECK((printed.row(0) * f - c.m.row(0)).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((printed.row(1) - c.m.row(1)).cwiseAbs().maxCoeff() < 1e-10);
        }
}

TEST_CASE("oscillator N = 2 identities")
{
    const auto rep = expansion_identity_check(AngularMode::abstract(0.9));
    CHECK(rep.first_identity_error < 1e-12);
    CHECK(rep.second_identity_corrected_error < 1e-12);
    CHECK(rep.second_identity_published_error > 1e-3);
}

TEST_CASE("wedge samples are deterministic and inside the wedge")
{
    const AngularMode m = AngularMode::from_angle(1, pi / 3);
    const auto a = sample_wedge_points(m, 2.0, 50), b = sample_wedge_points(m, 2.0, 50);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& p = std::get<Spherical>(a[i]);
        const auto& q = std::get<Spherical>(b[i]);
        CHECK(p.r == q.r);
        CHECK(p.phi == q.phi);
        CHECK(p.r > 0.0);
        CHECK(p.r < 2.0);
        CHECK(p.phi > 0.0);
        CHECK(p.phi < pi / 3);
    }
}
