#include "wedge/verify.hpp"

#include "wedge/interbasis.hpp"
#include "wedge/ladders.hpp"
#include "wedge/spheroidal.hpp"
#include "wedge/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace wedge {

namespace {

constexpr double pi = std::numbers::pi;

struct Checker {
    SuiteResult& r;
    std::optional<double> override_tol;

    void check(double err, double tol, const std::string& what)
    {
        const double t = override_tol.value_or(tol);
        r.tolerance = std::max(r.tolerance, t);
        ++r.checks;
        if (!std::isfinite(err) || err > t) {
            std::ostringstream os;
            os << what << ": error " << err << " > " << t;
            r.failures.push_back(os.str());
        }
        if (std::isfinite(err)) r.max_error = std::max(r.max_error, err);
        else r.max_error = INFINITY;
    }
};

double rel_diff(const Polynomial& a, const Polynomial& b)
{
    const double s = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    return s > 0.0 ? max_coeff_diff(a, b) / s : 0.0;
}

const double mus[] = {0.3, 0.5, 1.0, 2.5};

// Coefficients from p_{k+2} = (k-n)(k+n+2mu+1)/((k+1)(k+2)) p_k, scaled to the leading coefficient.
Polynomial polar_by_recurrence(int n, double mu)
{
    std::vector<double> c(n + 1, 0.0);
    c[n % 2] = 1.0;
    for (int k = n % 2; k + 2 <= n; k += 2) c[k + 2] = (k - n) * (k + n + 2 * mu + 1) / ((k + 1.0) * (k + 2.0)) * c[k];
    const double s = polar_leading_coeff(n, mu) / c[n];
    for (double& v : c) v *= s;
    return Polynomial(c, Variable::z);
}

void suite_polynomials(Checker& ck)
{
    for (double mu : mus)
        for (int n = 0; n <= 10; ++n) {
            const std::string tag = " n=" + std::to_string(n) + " mu=" + std::to_string(mu);
            for (double b : {mu + 1.0, n + mu + 1.5, 2.0 * (n + mu) + 2.0}) {
                const Polynomial p = kummer_poly(n, b);
                ck.check(ode_residual(KummerOde{n, b}, p).max_abs_coeff() / p.max_abs_coeff(), 1e-12, "kummer ode" + tag);
            }
            const Polynomial h = hermite_poly(n);
            ck.check(ode_residual(HermiteOde{n}, h).max_abs_coeff() / h.max_abs_coeff(), 1e-12, "hermite ode" + tag);
            const Polynomial q = polar_parity_poly(n, mu);
            ck.check(ode_residual(PolarOde{n, mu}, q).max_abs_coeff() / q.max_abs_coeff(), 1e-12, "polar ode" + tag);
            ck.check(rel_diff(q, polar_by_recurrence(n, mu)), 1e-12, "polar recurrence" + tag);
            ck.check(q.has_parity(n % 2) ? 0.0 : 1.0, 0.0, "polar parity" + tag);
        }
}

void suite_ladders(Checker& ck)
{
    for (double mu : mus)
        for (int n = 0; n <= 9; ++n) {
            const std::string tag = " n=" + std::to_string(n) + " mu=" + std::to_string(mu);
            const double b = mu + 1.0;
            ck.check(rel_diff(kummer_raise(n, b).result, kummer_poly(n + 1, b)), 1e-12, "kummer raise" + tag);
            ck.check(rel_diff(hermite_raise(n).result, hermite_poly(n + 1)), 1e-12, "hermite raise" + tag);
            ck.check(rel_diff(polar_raise(n, mu).result, polar_parity_poly(n + 1, mu)), 1e-12, "polar raise" + tag);
            if (n > 0) {
                ck.check(rel_diff(kummer_lower(n, b).result, kummer_poly(n - 1, b)), 1e-12, "kummer lower" + tag);
                ck.check(rel_diff(hermite_lower(n).result, hermite_poly(n - 1)), 1e-12, "hermite lower" + tag);
                ck.check(rel_diff(polar_lower(n, mu).result, polar_parity_poly(n - 1, mu)), 1e-12, "polar lower" + tag);
            }
        }
}

void suite_angular(Checker& ck)
{
    for (double phi0 : {pi / 3, pi, 2 * pi})
        for (int n = 1; n <= 5; ++n) {
            const AngularMode m = AngularMode::from_angle(n, phi0);
            double err = 0.0;
            for (int i = 0; i <= 99; ++i) {
                const double phi = phi0 * i / 99.0;
                err = std::max(err, std::abs(angular_operator_apply(m, Direction::raise, phi) -
                                             std::sin((n + 1) * pi * phi / phi0)));
                err = std::max(err, std::abs(angular_operator_apply(m, Direction::lower, phi) -
                                             std::sin((n - 1) * pi * phi / phi0)));
            }
            ck.check(err, 1e-12, "angular ladder n_phi=" + std::to_string(n));
            ck.check(std::max(std::abs(phi_eval(m, 0.0)), std::abs(phi_eval(m, phi0))), 1e-12 * n, "wedge faces");
        }
    ck.check(angular_lower(AngularMode::from_angle(1, pi)).annihilated ? 0.0 : 1.0, 0.0, "lowering n_phi=1");
}

void suite_annihilation(Checker& ck)
{
    for (double mu : {0.25, 0.5, 1.0, 1.7, 4.0})
        ck.check(ground_annihilation_residual(mu, Direction::raise).max_abs, 1e-12, "ground annihilation");
}

void suite_spheroidal(Checker& ck)
{
    for (double mu : {0.25, 0.5, 1.5, 3.0})
        for (double f : {0.1, 1.0, 3.0})
            for (int N = 0; N <= 6; ++N) {
                const SpheroidalSpec spec{mu, f, N};
                const std::string tag = " mu=" + std::to_string(mu) + " f=" + std::to_string(f) + " N=" + std::to_string(N);
                const auto sys = build_tridiagonal(spec);
                const auto d = ode_derive_recurrence(spec);
                const double scale = 1.0 + *std::max_element(sys.super.begin(), sys.super.end());
                ck.check(recurrence_mismatch(d, sys) / scale, 1e-10, "ode-derived recurrence" + tag);
                ck.check(d.max_off_band / scale, 1e-10, "tridiagonal band" + tag);
                ck.check(d.max_singular / scale, 1e-10, "singular terms" + tag);
                std::vector<SpheroidalSolution> sols;
                try {
                    sols = solve_spheroidal(spec);
                } catch (const NumericError& e) {
                    ck.check(INFINITY, 1e-10, std::string("spectrum") + tag + ": " + e.what());
                    continue;
                }
                for (const auto& s : sols) {
                    ck.check(recurrence_residual(sys, s), 1e-10, "recurrence residual" + tag);
                    const Polynomial p = s.polynomial();
                    ck.check(ode_residual(SpheroidalOde{mu, f, N, s.A}, p).max_abs_coeff() / p.max_abs_coeff(), 1e-10,
                             "spheroidal ode" + tag);
                }
            }
}

// Closed-form matrix brought into the library's own state signs.
TransformMatrix regauge(TransformMatrix t, const SignGauge& g)
{
    for (int i = 0; i < t.m.rows(); ++i)
        for (int j = 0; j < t.m.cols(); ++j) t.m(i, j) *= g.row_signs[i] * g.col_signs[j];
    return t;
}

void suite_interbasis(Checker& ck)
{
    for (double mu : {0.3, 0.7, 1.5}) {
        const AngularMode m = AngularMode::abstract(mu);
        const std::string tag = " mu=" + std::to_string(mu);
        for (int N = 0; N <= 5; ++N) {
            const auto t = osc_interbasis_matrix(N, m);
            ck.check(t.orthonormality_defect(), 1e-12, "osc orthonormality N=" + std::to_string(N) + tag);
            const auto num = numeric_overlap_matrix(t.rows, t.cols, true);
            const auto g = align_signs(num.matrix.m, t.m);
            ck.check(g.max_diff, 1e-8, "osc oracle N=" + std::to_string(N) + tag);
            ck.check(pointwise_expansion_error(regauge(t, g)), 1e-10, "osc pointwise N=" + std::to_string(N) + tag);
        }
        for (int N = 0; N <= 2; ++N) {
            const auto t = hydrogen_sph_par_matrix(N, m);
            ck.check(t.orthonormality_defect(), 1e-12, "sph-par orthonormality N=" + std::to_string(N) + tag);
            const auto num = numeric_overlap_matrix(t.rows, t.cols, true);
            ck.check(align_signs(num.matrix.m, t.m).max_diff, 1e-8, "sph-par oracle N=" + std::to_string(N) + tag);
            ck.check(pointwise_expansion_error(t), 1e-10, "sph-par pointwise N=" + std::to_string(N) + tag);
        }
        for (double f : {0.5, 1.0, 2.0})
            for (int N = 1; N <= 2; ++N) {
                const auto t = hydrogen_sph_spheroidal_matrix(N, m, f);
                ck.check(pointwise_expansion_error(t), 1e-10, "sph-spheroidal pointwise N=" + std::to_string(N) + tag);
            }
        const auto rep = expansion_identity_check(m);
        ck.check(std::max(rep.first_identity_error, rep.second_identity_corrected_error), 1e-12, "oscillator N=2 identities" + tag);
    }
}

void suite_degeneracy(Checker& ck)
{
    for (double mu : {0.3, 1.2})
        for (int N = 0; N <= 5; ++N) {
            const AngularMode m = AngularMode::abstract(mu);
            for (Family fam : {Family::osc_cyl, Family::osc_sph, Family::hyd_sph, Family::hyd_par}) {
                const auto states = multiplet(fam, N, m);
                const double e0 = energy(states.front());
                const double expect = is_hydrogen(fam) ? -0.5 / ((N + mu + 1) * (N + mu + 1)) : N + mu + 1.5;
                ck.check(std::abs(e0 - expect), 1e-12, "shell energy");
                for (const auto& s : states) ck.check(std::abs(energy(s) - e0), 1e-12, "degeneracy");
                if (fam == Family::hyd_par)
                    for (const auto& s : states) {
                        auto [a, b] = separation_constants(std::get<HydPar>(s));
                        ck.check(std::abs(a + b - 2.0), 1e-12, "separation constants");
                    }
            }
        }
}

void suite_coincidence(Checker& ck)
{
    const AngularMode m = AngularMode::from_angle(1, 2 * pi / 3);
    const auto pts = sample_wedge_points(m, 4.0, 20, 11);
    const Eigenstate oc = make_state(Family::osc_cyl, 0, 0, m), os = make_state(Family::osc_sph, 0, 0, m);
    const Eigenstate oc1 = make_state(Family::osc_cyl, 0, 1, m), os1 = make_state(Family::osc_sph, 0, 1, m);
    const Eigenstate hs = make_state(Family::hyd_sph, 0, 0, m), hp = make_state(Family::hyd_par, 0, 0, m);
    const Eigenstate hd = make_state(Family::hyd_spheroidal, 0, 0, m, 1.3);
    double e_osc = 0.0, e_osc1 = 0.0, e_hyd = 0.0, scale = 0.0, scale1 = 0.0, scale_h = 0.0;
    for (const auto& p : pts) {
        const Cartesian c = to_nucleus_frame(p);
        const CoordinatePoint cyl = to_cylindrical(c), par = to_parabolic(c);
        const CoordinatePoint pro = to_prolate_spheroidal({c.x, c.y, c.z - 1.3}, 1.3);
        const double a = eval_eigenfunction(oc, cyl), b = eval_eigenfunction(os, p);
        e_osc = std::max(e_osc, std::abs(a - b));
        scale = std::max(scale, std::abs(a));
        const double a1 = eval_normalized(oc1, cyl), b1 = eval_normalized(os1, p);
        e_osc1 = std::max(e_osc1, std::abs(a1 - b1));
        scale1 = std::max(scale1, std::abs(a1));
        const double h1 = eval_eigenfunction(hs, p), h2 = eval_eigenfunction(hp, par), h3 = eval_eigenfunction(hd, pro);
        e_hyd = std::max({e_hyd, std::abs(h1 - h2), std::abs(h1 - h3)});
        scale_h = std::max(scale_h, std::abs(h1));
    }
    ck.check(e_osc / scale, 1e-12, "oscillator ground state cyl/sph");
    ck.check(e_osc1 / scale1, 1e-12, "oscillator n_z=1 / n_theta=1");
    ck.check(e_hyd / scale_h, 1e-12, "hydrogen ground state sph/par/spheroidal");
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> r = {
        {"polynomials", suite_polynomials}, {"ladders", suite_ladders},       {"angular", suite_angular},
        {"annihilation", suite_annihilation}, {"spheroidal", suite_spheroidal}, {"interbasis", suite_interbasis},
        {"degeneracy", suite_degeneracy},   {"coincidence", suite_coincidence},
    };
    return r;
}

}  // namespace

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

std::vector<SuiteResult> run_verify(const std::vector<std::string>& suites, std::optional<double> tol_override)
{
    for (const auto& s : suites) {
        bool known = false;
        for (const auto& [name, fn] : registry()) known = known || name == s;
        if (!known) throw DomainError("unknown verify suite: " + s);
    }
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) {
        if (!suites.empty() && std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
        SuiteResult r;
        r.name = name;
        Checker ck{r, tol_override};
        try {
            fn(ck);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace wedge
