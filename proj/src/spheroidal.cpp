#include "wedge/spheroidal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace wedge {

void SpheroidalSpec::validate() const
{
    if (!std::isfinite(mu) || mu < 0.0) throw DomainError("spheroidal: mu must be non-negative");
    if (!std::isfinite(f) || f < 0.0) throw DomainError("spheroidal: f must be non-negative");
    if (N < 0) throw DomainError("spheroidal: N must be non-negative");
}

const char* form_name(RecurrenceForm form)
{
    return form == RecurrenceForm::ode_consistent ? "ode" : "printed";
}

TridiagonalSystem build_tridiagonal(const SpheroidalSpec& spec, RecurrenceForm form)
{
    spec.validate();
    const int n = spec.N + 1;
    const double a = spec.alpha();
    const double dk = form == RecurrenceForm::ode_consistent ? 4.0 * a : 2.0 * a;
    TridiagonalSystem sys{spec, form, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                          std::vector<double>(n, 0.0)};
    for (int s = 0; s < n; ++s) {
        if (s > 0) sys.sub[s] = 2.0 * a * (spec.N + 1 - s);
        sys.diag[s] = s * (s + 2.0 * spec.mu + 1.0 - dk);
        if (s < spec.N) sys.super[s] = 2.0 * (s + 1) * (s + spec.mu + 1.0);
    }
    return sys;
}

namespace {

struct RowResidual {
    double r, dr;
};

// Forward recurrence from c_0 = 1; returns the leftover in row N and its A-derivative.
RowResidual forward(const TridiagonalSystem& sys, double A, std::vector<double>& c)
{
    const int n = sys.size();
    c.assign(n, 0.0);
    std::vector<double> dc(n, 0.0);
    c[0] = 1.0;
    for (int s = 0; s + 1 < n; ++s) {
        const double prev = s > 0 ? c[s - 1] : 0.0;
        const double dprev = s > 0 ? dc[s - 1] : 0.0;
        c[s + 1] = ((A - sys.diag[s]) * c[s] - sys.sub[s] * prev) / sys.super[s];
        dc[s + 1] = (c[s] + (A - sys.diag[s]) * dc[s] - sys.sub[s] * dprev) / sys.super[s];
    }
    const int N = n - 1;
    const double prev = N > 0 ? c[N - 1] : 0.0;
    const double dprev = N > 0 ? dc[N - 1] : 0.0;
    return {sys.sub[N] * prev + (sys.diag[N] - A) * c[N], sys.sub[N] * dprev + (sys.diag[N] - A) * dc[N] - c[N]};
}

std::vector<double> eigenvalues(const TridiagonalSystem& sys)
{
    const int n = sys.size();
    bool symmetrizable = true;
    for (int s = 1; s < n; ++s)
        if (!(sys.sub[s] * sys.super[s - 1] > 0.0)) symmetrizable = false;

    std::vector<double> out(n);
    if (symmetrizable) {
        Eigen::VectorXd d(n), e(std::max(n - 1, 0));
        for (int s = 0; s < n; ++s) d[s] = sys.diag[s];
        for (int s = 1; s < n; ++s) e[s - 1] = std::sqrt(sys.sub[s] * sys.super[s - 1]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw NumericError("spheroidal: eigensolver did not converge");
        for (int s = 0; s < n; ++s) out[s] = es.eigenvalues()[s];
    } else {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int s = 0; s < n; ++s) {
            m(s, s) = sys.diag[s];
            if (s > 0) m(s, s - 1) = sys.sub[s];
            if (s + 1 < n) m(s, s + 1) = sys.super[s];
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
        if (es.info() != Eigen::Success) throw NumericError("spheroidal: eigensolver did not converge");
        for (int s = 0; s < n; ++s) {
            if (std::abs(es.eigenvalues()[s].imag()) > 1e-10)
                throw NumericError("spheroidal: complex eigenvalue");
            out[s] = es.eigenvalues()[s].real();
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<SpheroidalSolution> solve_spheroidal(const SpheroidalSpec& spec, RecurrenceForm form)
{
    const TridiagonalSystem sys = build_tridiagonal(spec, form);
    const std::vector<double> A = eigenvalues(sys);
    const int n = sys.size();
    for (int i = 1; i < n; ++i)
        if (A[i] - A[i - 1] <= 1e-10 * std::max(1.0, std::abs(A[i])))
            throw NumericError("spheroidal: degenerate eigenvalues");

    std::vector<SpheroidalSolution> out;
    for (int i = 0; i < n; ++i) {
        SpheroidalSolution sol;
        sol.index = i;
        sol.A = A[i];
        RowResidual rr = forward(sys, sol.A, sol.coeffs);
        for (int it = 0; it < 4 && rr.r != 0.0 && rr.dr != 0.0; ++it) {
            std::vector<double> trial;
            const double An = sol.A - rr.r / rr.dr;
            RowResidual nr = forward(sys, An, trial);
            if (!(std::abs(nr.r) < std::abs(rr.r))) break;
            sol.A = An;
            sol.coeffs = std::move(trial);
            rr = nr;
        }
        if (recurrence_residual(sys, sol) > 1e-8) throw NumericError("spheroidal: eigenvector refinement failed");
        out.push_back(std::move(sol));
    }
    return out;
}

double recurrence_residual(const TridiagonalSystem& sys, const SpheroidalSolution& sol)
{
    const int n = sys.size();
    const auto& c = sol.coeffs;
    double cmax = 0.0, rmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    for (int s = 0; s < n; ++s) {
        double r = (sys.diag[s] - sol.A) * c[s];
        if (s > 0) r += sys.sub[s] * c[s - 1];
        if (s + 1 < n) r += sys.super[s] * c[s + 1];
        rmax = std::max(rmax, std::abs(r));
    }
    return cmax > 0.0 ? rmax / cmax : rmax;
}

std::vector<double> characteristic_polynomial(const TridiagonalSystem& sys)
{
    // p_k = (A - d_k) p_{k-1} - sub_k super_{k-1} p_{k-2}
    Polynomial prev2({1.0});
    Polynomial prev({-sys.diag[0], 1.0});
    for (int k = 1; k < sys.size(); ++k) {
        Polynomial cur = Polynomial({-sys.diag[k], 1.0}) * prev - prev2 * (sys.sub[k] * sys.super[k - 1]);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    std::vector<double> c = prev.coeffs();
    c.resize(sys.size() + 1, 0.0);
    return c;
}

namespace {

// Coefficient of A^k in the characteristic polynomial, split into powers of f.
std::vector<double> f_expansion(const SpheroidalSpec& spec, RecurrenceForm form, int k)
{
    // Quadratic in f for N <= 2; three samples determine it exactly.
    const double h = spec.f != 0.0 ? spec.f : 1.0;
    double y[3];
    for (int i = 0; i < 3; ++i) {
        SpheroidalSpec s = spec;
        s.f = i * h;
        y[i] = characteristic_polynomial(build_tridiagonal(s, form))[k];
    }
    const double c0 = y[0];
    const double c2 = (y[2] - 2.0 * y[1] + y[0]) / (2.0 * h * h);
    const double c1 = (y[1] - y[0]) / h - c2 * h;
    return {c0, c1, c2};
}

void add_term(CharpolyReport& rep, const std::string& name, double derived, double printed, double nu_reading)
{
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); };
    rep.terms.push_back({name, derived, printed, nu_reading, close(derived, printed), close(derived, nu_reading)});
}

}  // namespace

CharpolyReport charpoly_crosscheck(const SpheroidalSpec& spec, RecurrenceForm form)
{
    spec.validate();
    CharpolyReport rep;
    rep.spec = spec;
    rep.form = form;
    rep.coefficients = characteristic_polynomial(build_tridiagonal(spec, form));
    const double m = spec.mu, nu = spec.nu();
    if (spec.N == 1) {
        auto a1 = f_expansion(spec, form, 1), a0 = f_expansion(spec, form, 0);
        add_term(rep, "A^1 f^0", a1[0], -(2 * m + 2), -(2 * m + 2));
        add_term(rep, "A^1 f^1", a1[1], 4.0 / m, 4.0 / nu);
        add_term(rep, "A^0 f^0", a0[0], 0.0, 0.0);
        add_term(rep, "A^0 f^1", a0[1], -4.0 * (m + 1) / m, -4.0 * (m + 1) / nu);
    } else if (spec.N == 2) {
        auto a2 = f_expansion(spec, form, 2), a1 = f_expansion(spec, form, 1), a0 = f_expansion(spec, form, 0);
        add_term(rep, "A^2 f^0", a2[0], -8 - 6 * m, -8 - 6 * m);
        add_term(rep, "A^2 f^1", a2[1], 12.0 / nu, 12.0 / nu);
        add_term(rep, "A^1 f^0", a1[0], 12 + 20 * m + 8 * m * m, 12 + 20 * m + 8 * m * m);
        add_term(rep, "A^1 f^1", a1[1], -16.0 * (3 * m + 4) / m, -16.0 * (3 * m + 4) / nu);
        add_term(rep, "A^1 f^2", a1[2], 12.0 / (m * m), 12.0 / (nu * nu));
        add_term(rep, "A^0 f^0", a0[0], 0.0, 0.0);
        add_term(rep, "A^0 f^1", a0[1], 16.0 * (1 + m) * (2 * m + 3) / m, 16.0 * (1 + m) * (2 * m + 3) / nu);
        add_term(rep, "A^0 f^2", a0[2], -64.0 * (m + 1) / (m * m), -64.0 * (m + 1) / (nu * nu));
    }
    return rep;
}

namespace {

// Functions (u^2-1)^{mu/2} e^{-alpha u} sum_k q[k](x) (u^2-1)^{-k}, with x = u - 1.
struct QuasiPoly {
    std::vector<Polynomial> q;

    Polynomial& level(std::size_t k)
    {
        if (q.size() <= k) q.resize(k + 1, Polynomial({}, Variable::w));
        return q[k];
    }
};

const Polynomial& u2m1()
{
    static const Polynomial p({0.0, 2.0, 1.0}, Variable::w);
    return p;
}

QuasiPoly d_du(const QuasiPoly& a, double mu, double alpha)
{
    QuasiPoly out;
    const Polynomial u({1.0, 1.0}, Variable::w);
    for (std::size_t k = 0; k < a.q.size(); ++k) {
        const Polynomial& p = a.q[k];
        if (p.is_zero()) continue;
        out.level(k) += derivative(p) - p * alpha;
        out.level(k + 1) += u * p * (mu - 2.0 * k);
    }
    return out;
}

QuasiPoly times_u2m1(const QuasiPoly& a)
{
    QuasiPoly out;
    for (std::size_t k = 0; k < a.q.size(); ++k) {
        if (k == 0) out.level(0) += a.q[0] * u2m1();
        else out.level(k - 1) += a.q[k];
    }
    return out;
}

QuasiPoly over_u2m1(const QuasiPoly& a)
{
    QuasiPoly out;
    for (std::size_t k = 0; k < a.q.size(); ++k) out.level(k + 1) += a.q[k];
    return out;
}

QuasiPoly times(const QuasiPoly& a, const Polynomial& p)
{
    QuasiPoly out;
    for (std::size_t k = 0; k < a.q.size(); ++k) out.level(k) += a.q[k] * p;
    return out;
}

QuasiPoly plus(QuasiPoly a, const QuasiPoly& b)
{
    for (std::size_t k = 0; k < b.q.size(); ++k) a.level(k) += b.q[k];
    return a;
}

// Divides by x^2 + 2x; returns {quotient, remainder}.
std::pair<Polynomial, Polynomial> divmod_u2m1(const Polynomial& p)
{
    std::vector<double> r = p.coeffs();
    if (r.size() < 3) return {Polynomial({}, Variable::w), p};
    std::vector<double> quo(r.size() - 2, 0.0);
    for (std::size_t i = r.size() - 1; i >= 2; --i) {
        const double c = r[i];
        quo[i - 2] = c;
        r[i] = 0.0;
        r[i - 1] -= 2.0 * c;
    }
    return {Polynomial(quo, Variable::w), Polynomial(r, Variable::w)};
}

// Moves every multiple of (u^2-1) down one level; returns the largest leftover.
double reduce(QuasiPoly& a)
{
    double leftover = 0.0;
    for (std::size_t k = a.q.size(); k-- > 1;) {
        auto [quo, rem] = divmod_u2m1(a.q[k]);
        a.level(k - 1) += quo;
        a.q[k] = rem;
    }
    for (std::size_t k = 1; k < a.q.size(); ++k) leftover = std::max(leftover, a.q[k].max_abs_coeff());
    return leftover;
}

}  // namespace

DerivedRecurrence ode_derive_recurrence(const SpheroidalSpec& spec)
{
    spec.validate();
    const double mu = spec.mu, f = spec.f, alpha = spec.alpha();
    const int n = spec.N + 1;
    // 2 f u - alpha^2 u^2 in x
    const Polynomial potential({2.0 * f - alpha * alpha, 2.0 * f - 2.0 * alpha * alpha, -alpha * alpha}, Variable::w);

    std::vector<std::vector<double>> K(n + 1, std::vector<double>(n, 0.0));
    DerivedRecurrence out;
    out.spec = spec;
    for (int s = 0; s < n; ++s) {
        QuasiPoly U;
        U.level(0) = Polynomial::monomial(s, 1.0, Variable::w);
        QuasiPoly LU = d_du(times_u2m1(d_du(U, mu, alpha)), mu, alpha);
        LU = plus(LU, times(over_u2m1(U), Polynomial::constant(-mu * mu, Variable::w)));
        LU = plus(LU, times(U, potential));
        out.max_singular = std::max(out.max_singular, reduce(LU));
        const Polynomial& img = LU.level(0);
        for (int i = 0; i <= img.degree(); ++i) {
            if (i <= n) K[i][s] = img.coeff(i);
            else out.max_off_band = std::max(out.max_off_band, std::abs(img.coeff(i)));
        }
    }
    for (int i = 0; i <= n; ++i)
        for (int s = 0; s < n; ++s)
            if (std::abs(i - s) > 1 || i == n) out.max_off_band = std::max(out.max_off_band, std::abs(K[i][s]));

    out.shift = K[0][0];
    out.sub.assign(n, 0.0);
    out.diag.assign(n, 0.0);
    out.super.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        out.diag[i] = K[i][i] - out.shift;
        if (i > 0) out.sub[i] = K[i][i - 1];
        if (i + 1 < n) out.super[i] = K[i][i + 1];
    }
    return out;
}

double recurrence_mismatch(const DerivedRecurrence& d, const TridiagonalSystem& sys)
{
    double m = 0.0;
    for (int s = 0; s < sys.size(); ++s) {
        m = std::max(m, std::abs(d.sub[s] - sys.sub[s]));
        m = std::max(m, std::abs(d.diag[s] - sys.diag[s]));
        m = std::max(m, std::abs(d.super[s] - sys.super[s]));
    }
    return m;
}

double spheroidal_product_eval(const SpheroidalSpec& spec, const SpheroidalSolution& sol, double u, double v)
{
    if (static_cast<int>(sol.coeffs.size()) != spec.N + 1) throw DomainError("spheroidal: solution size mismatch");
    const Polynomial p = sol.polynomial();
    return p(u - 1.0) * p(v - 1.0);
}

Polynomial printed_closed_form(const SpheroidalSpec& spec, double A)
{
    const double b = 1.0 + spec.mu, nu = spec.nu();
    switch (spec.N) {
    case 0: return Polynomial({1.0}, Variable::w);
    case 1: return Polynomial({1.0, A / (2.0 * b)}, Variable::w);
    case 2:
        return Polynomial({1.0, A / (2.0 * b),
                           -(A - 2.0 * b) * (4.0 * spec.f + A * nu) / (8.0 * b * (2.0 + spec.mu) * nu)},
                          Variable::w);
    default: throw DomainError("printed closed forms exist only for N <= 2");
    }
}

}  // namespace wedge
