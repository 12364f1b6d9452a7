#include "wedge/ladders.hpp"

#include <cmath>
#include <numbers>

namespace wedge {

namespace {

Polynomial lin(double c0, double c1, Variable v) { return Polynomial({c0, c1}, v); }

PolyLadderResult finish(Polynomial op_out, double scalar)
{
    return {op_out * (1.0 / scalar), scalar, false};
}

PolyLadderResult annihilated(Variable v) { return {Polynomial({}, v), 0.0, true}; }

}  // namespace

Polynomial kummer_raise_op(const Polynomial& p, int n, double b)
{
    const Variable v = p.var();
    return p * (b + n) - lin(0.0, 1.0, v) * p + lin(0.0, 1.0, v) * derivative(p);
}

Polynomial kummer_lower_op(const Polynomial& p, int n)
{
    return p * static_cast<double>(-n) + lin(0.0, 1.0, p.var()) * derivative(p);
}

Polynomial hermite_raise_op(const Polynomial& p) { return lin(0.0, 2.0, p.var()) * p - derivative(p); }

Polynomial hermite_lower_op(const Polynomial& p) { return derivative(p); }

Polynomial polar_raise_op(const Polynomial& p, int n, double mu)
{
    const Variable v = p.var();
    return lin(0.0, 1.0, v) * p + Polynomial({-1.0, 0.0, 1.0}, v) * derivative(p) * (1.0 / (2.0 * mu + n + 1.0));
}

Polynomial polar_lower_op(const Polynomial& p, int n)
{
    if (n == 0) throw DomainError("polar lowering is undefined at n = 0");
    const Variable v = p.var();
    return lin(0.0, 1.0, v) * p - Polynomial({-1.0, 0.0, 1.0}, v) * derivative(p) * (1.0 / n);
}

PolyLadderResult kummer_raise(int n, double b)
{
    if (b + n == 0.0) throw DomainError("kummer_raise: b + n vanishes");
    return finish(kummer_raise_op(kummer_poly(n, b), n, b), b + n);
}

PolyLadderResult kummer_lower(int n, double b)
{
    if (n == 0) return annihilated(Variable::t);
    return finish(kummer_lower_op(kummer_poly(n, b), n), -static_cast<double>(n));
}

PolyLadderResult hermite_raise(int n) { return finish(hermite_raise_op(hermite_poly(n)), 1.0); }

PolyLadderResult hermite_lower(int n)
{
    if (n == 0) return annihilated(Variable::z);
    return finish(hermite_lower_op(hermite_poly(n)), 2.0 * n);
}

PolyLadderResult polar_raise(int n, double mu) { return finish(polar_raise_op(polar_parity_poly(n, mu), n, mu), 1.0); }

PolyLadderResult polar_lower(int n, double mu)
{
    if (n == 0) return annihilated(Variable::z);
    return finish(polar_lower_op(polar_parity_poly(n, mu), n), 1.0);
}

AngularLadderResult angular_raise(const AngularMode& mode) { return {mode.shifted(1), 1.0, false}; }

AngularLadderResult angular_lower(const AngularMode& mode)
{
    if (mode.n_phi() == 1) return {std::nullopt, 0.0, true};
    return {mode.shifted(-1), 1.0, false};
}

double angular_operator_apply(const AngularMode& mode, Direction dir, double phi)
{
    const double k = std::numbers::pi / mode.phi0();
    const int n = mode.n_phi();
    const double f = std::sin(n * k * phi);
    const double df = n * k * std::cos(n * k * phi);
    const double sign = dir == Direction::raise ? 1.0 : -1.0;
    return std::cos(k * phi) * f + sign * std::sin(k * phi) * df / (n * k);
}

QuasiPower QuasiPower::derivative() const
{
    QuasiPower out{mu, g, {}};
    for (auto [k, c] : terms) {
        out.terms[k - 1] += c * (mu + k);
        out.terms[k + 1] += -2.0 * g * c;
    }
    return out;
}

QuasiPower QuasiPower::times_s(int power) const
{
    QuasiPower out{mu, g, {}};
    for (auto [k, c] : terms) out.terms[k + power] += c;
    return out;
}

QuasiPower QuasiPower::operator+(const QuasiPower& o) const
{
    QuasiPower out = *this;
    for (auto [k, c] : o.terms) out.terms[k] += c;
    return out;
}

QuasiPower QuasiPower::operator*(double a) const
{
    QuasiPower out = *this;
    for (auto& kv : out.terms) kv.second *= a;
    return out;
}

double QuasiPower::max_abs() const
{
    double m = 0.0;
    for (auto [k, c] : terms) m = std::max(m, std::abs(c));
    return m;
}

double QuasiPower::operator()(double s) const
{
    double acc = 0.0;
    for (auto [k, c] : terms) acc += c * std::pow(s, mu + k);
    return acc * std::exp(-g * s * s);
}

AnnihilationResidual ground_annihilation_residual(double mu, Direction dir, std::optional<double> mu_op)
{
    if (!std::isfinite(mu) || mu < 0.0) throw DomainError("mu must be non-negative");
    const double m = mu_op.value_or(mu);
    QuasiPower ground{mu, 0.5, {{0, 1.0}}};
    const double sign = dir == Direction::raise ? 1.0 : -1.0;
    QuasiPower res = ground.times_s(1) + ground.derivative() * sign + ground.times_s(-1) * (-sign * m);
    for (auto it = res.terms.begin(); it != res.terms.end();) {
        if (it->second == 0.0) it = res.terms.erase(it);
        else ++it;
    }
    return {res, res.max_abs()};
}

const char* dof_name(Dof d)
{
    switch (d) {
    case Dof::angular: return "angular";
    case Dof::radial: return "radial";
    case Dof::axial: return "axial";
    case Dof::polar: return "polar";
    case Dof::xi: return "xi";
    case Dof::eta: return "eta";
    case Dof::spheroidal: return "spheroidal";
    }
    return "?";
}

Dof dof_from_name(const std::string& name)
{
    for (Dof d : {Dof::angular, Dof::radial, Dof::axial, Dof::polar, Dof::xi, Dof::eta, Dof::spheroidal})
        if (name == dof_name(d)) return d;
    throw DomainError("unknown degree of freedom: " + name);
}

namespace {

// Scalar of the Kummer ladder on M(-n, b, .), or nullopt when annihilated.
std::optional<double> kummer_scalar(int n, double b, Direction dir)
{
    if (dir == Direction::raise) return b + n;
    if (n == 0) return std::nullopt;
    return -static_cast<double>(n);
}

}  // namespace

StateLadderResult apply_ladder(const Eigenstate& state, Dof dof, Direction dir)
{
    const Family fam = family_of(state);
    const AngularMode& mode = mode_of(state);
    const double mu = mode.mu();
    auto [a, b] = quantum_numbers(state);
    const int step = dir == Direction::raise ? 1 : -1;
    const std::optional<double> f = focal_of(state);

    std::optional<double> scalar;
    int na = a, nb = b;
    AngularMode nm = mode;

    auto bad = [&] {
        return DomainError(std::string("degree of freedom '") + dof_name(dof) + "' does not apply to " +
                           describe(state));
    };

    if (dof == Dof::angular) {
        if (dir == Direction::lower && mode.n_phi() == 1) scalar.reset();
        else {
            scalar = 1.0;
            nm = mode.shifted(step);
        }
    } else {
        switch (fam) {
        case Family::osc_cyl:
            if (dof == Dof::radial) {
                scalar = kummer_scalar(a, mu + 1.0, dir);
                na = a + step;
            } else if (dof == Dof::axial) {
                if (dir == Direction::raise) scalar = 1.0;
                else if (b > 0) scalar = 2.0 * b;
                nb = b + step;
            } else throw bad();
            break;
        case Family::osc_sph:
        case Family::hyd_sph:
            if (dof == Dof::radial) {
                const double lambda = b + mu;
                const double kb = fam == Family::osc_sph ? lambda + 1.5 : 2.0 * lambda + 2.0;
                scalar = kummer_scalar(a, kb, dir);
                na = a + step;
            } else if (dof == Dof::polar) {
                if (dir == Direction::raise || b > 0) scalar = 1.0;
                nb = b + step;
            } else throw bad();
            break;
        case Family::hyd_par:
            if (dof == Dof::xi) {
                scalar = kummer_scalar(a, mu + 1.0, dir);
                na = a + step;
            } else if (dof == Dof::eta) {
                scalar = kummer_scalar(b, mu + 1.0, dir);
                nb = b + step;
            } else throw bad();
            break;
        case Family::hyd_spheroidal:
            if (dof != Dof::spheroidal) throw bad();
            na = a + step;
            nb = b - step;
            if (na >= 0 && nb >= 0) scalar = 1.0;
            break;
        }
    }

    StateLadderResult out;
    if (!scalar) {
        out.annihilated = true;
        return out;
    }
    out.scalar = *scalar;
    out.state = make_state(fam, na, nb, nm, f);
    out.energy_shift = energy(*out.state) - energy(state);
    return out;
}

}  // namespace wedge
