#include "wedge/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wedge {

namespace {
constexpr double pi = std::numbers::pi;

void require(bool ok, const char* msg)
{
    if (!ok) throw DomainError(msg);
}
}  // namespace

AngularMode AngularMode::from_angle(int n_phi, double phi0)
{
    require(n_phi >= 1, "n_phi must be at least 1");
    require(std::isfinite(phi0) && phi0 > 0.0 && phi0 <= 2.0 * pi * (1.0 + 1e-15), "phi0 must lie in (0, 2 pi]");
    return AngularMode(n_phi, phi0, pi / phi0, false);
}

AngularMode AngularMode::abstract(double mu)
{
    require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
    return AngularMode(1, pi / mu, mu, true);
}

AngularMode AngularMode::shifted(int dn) const
{
    require(n_phi_ + dn >= 1, "n_phi must stay at least 1");
    return AngularMode(n_phi_ + dn, phi0_, base_, abstract_);
}

double mu_from_angle(int n_phi, double phi0) { return AngularMode::from_angle(n_phi, phi0).mu(); }

double phi_eval(const AngularMode& mode, double phi)
{
    const double phi0 = mode.phi0();
    const double tol = 1e-12 * std::max(1.0, phi0);
    require(std::isfinite(phi) && phi >= -tol && phi <= phi0 + tol, "phi outside the wedge");
    return std::sqrt(2.0 / phi0) * std::sin(mode.mu() * phi);
}

Family family_of(const Eigenstate& s) { return static_cast<Family>(s.index()); }

const char* system_name(Family f) { return is_hydrogen(f) ? "hydrogen" : "osc"; }

const char* family_name(Family f)
{
    switch (f) {
    case Family::osc_cyl: return "cyl";
    case Family::osc_sph: return "sph";
    case Family::hyd_sph: return "sph";
    case Family::hyd_par: return "par";
    case Family::hyd_spheroidal: return "spheroidal";
    }
    return "?";
}

bool is_hydrogen(Family f) { return f != Family::osc_cyl && f != Family::osc_sph; }

const AngularMode& mode_of(const Eigenstate& s)
{
    return std::visit([](const auto& st) -> const AngularMode& { return st.mode; }, s);
}

std::pair<int, int> quantum_numbers(const Eigenstate& s)
{
    return std::visit(
        [](const auto& st) -> std::pair<int, int> {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, OscCyl>) return {st.n_rho, st.n_z};
            else if constexpr (std::is_same_v<T, OscSph>) return {st.n_r, st.n_theta};
            else if constexpr (std::is_same_v<T, HydSph>) return {st.n_r, st.n_theta};
            else if constexpr (std::is_same_v<T, HydPar>) return {st.n_xi, st.n_eta};
            else return {st.n_u, st.n_v};
        },
        s);
}

int shell_index(const Eigenstate& s)
{
    auto [a, b] = quantum_numbers(s);
    return is_hydrogen(family_of(s)) ? a + b : 2 * a + b;
}

std::optional<double> focal_of(const Eigenstate& s)
{
    if (auto* h = std::get_if<HydSpheroidal>(&s)) return h->f;
    return std::nullopt;
}

Eigenstate make_state(Family family, int q1, int q2, const AngularMode& mode, std::optional<double> f)
{
    require(q1 >= 0 && q2 >= 0, "quantum numbers must be non-negative");
    require(!f || family == Family::hyd_spheroidal, "a focal distance only applies to spheroidal states");
    switch (family) {
    case Family::osc_cyl: return OscCyl{q1, q2, mode};
    case Family::osc_sph: return OscSph{q1, q2, mode};
    case Family::hyd_sph: return HydSph{q1, q2, mode};
    case Family::hyd_par: return HydPar{q1, q2, mode};
    case Family::hyd_spheroidal: {
        require(f.has_value() && std::isfinite(*f) && *f > 0.0, "spheroidal states need f > 0");
        SpheroidalSpec spec{mode.mu(), *f, q1 + q2};
        auto sols = solve_spheroidal(spec);
        return HydSpheroidal{q1, q2, mode, *f, sols.at(q1)};
    }
    }
    throw DomainError("unknown family");
}

bool same_state(const Eigenstate& a, const Eigenstate& b)
{
    return family_of(a) == family_of(b) && quantum_numbers(a) == quantum_numbers(b) && mode_of(a) == mode_of(b) &&
           focal_of(a) == focal_of(b);
}

double nu_of(const Eigenstate& s)
{
    require(is_hydrogen(family_of(s)), "nu is defined for hydrogen states only");
    auto [a, b] = quantum_numbers(s);
    return a + b + mode_of(s).mu() + 1.0;
}

double energy(const Eigenstate& s)
{
    const Family fam = family_of(s);
    if (is_hydrogen(fam)) {
        const double nu = nu_of(s);
        return -0.5 / (nu * nu);
    }
    return shell_index(s) + mode_of(s).mu() + 1.5;
}

std::pair<double, double> separation_constants(const HydPar& s)
{
    const double mu = s.mode.mu();
    const double nu = s.n_xi + s.n_eta + mu + 1.0;
    const double a_xi = (2.0 * s.n_xi + mu + 1.0) / nu;
    return {a_xi, 2.0 - a_xi};  // the sum is exactly 2 in floating point
}

const char* chart_name(const CoordinatePoint& p)
{
    static const char* names[] = {"cartesian", "cylindrical", "spherical", "parabolic", "prolate"};
    return names[p.index()];
}

Cartesian to_cartesian(const CoordinatePoint& p)
{
    return std::visit(
        [](const auto& c) -> Cartesian {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Cartesian>) {
                return c;
            } else if constexpr (std::is_same_v<T, Cylindrical>) {
                require(c.rho >= 0.0, "rho must be non-negative");
                return {c.rho * std::cos(c.phi), c.rho * std::sin(c.phi), c.z};
            } else if constexpr (std::is_same_v<T, Spherical>) {
                require(c.r >= 0.0 && c.theta >= 0.0 && c.theta <= pi, "invalid spherical point");
                const double rho = c.r * std::sin(c.theta);
                return {rho * std::cos(c.phi), rho * std::sin(c.phi), c.r * std::cos(c.theta)};
            } else if constexpr (std::is_same_v<T, Parabolic>) {
                require(c.xi >= 0.0 && c.eta >= 0.0, "xi and eta must be non-negative");
                const double rho = c.xi * c.eta;
                return {rho * std::cos(c.phi), rho * std::sin(c.phi), 0.5 * (c.xi * c.xi - c.eta * c.eta)};
            } else {
                require(c.f > 0.0 && c.u >= 1.0 && c.v >= -1.0 && c.v <= 1.0, "invalid prolate spheroidal point");
                const double rho = c.f * std::sqrt((c.u * c.u - 1.0) * (1.0 - c.v * c.v));
                return {rho * std::cos(c.phi), rho * std::sin(c.phi), c.f * c.u * c.v};
            }
        },
        p);
}

namespace {
double azimuth(const Cartesian& c)
{
    double phi = std::atan2(c.y, c.x);
    if (phi < 0.0) phi += 2.0 * pi;
    return phi;
}
}  // namespace

Cylindrical to_cylindrical(const Cartesian& c) { return {std::hypot(c.x, c.y), azimuth(c), c.z}; }

Spherical to_spherical(const Cartesian& c)
{
    const double rho = std::hypot(c.x, c.y);
    return {std::hypot(rho, c.z), std::atan2(rho, c.z), azimuth(c)};
}

Parabolic to_parabolic(const Cartesian& c)
{
    const double r = std::hypot(std::hypot(c.x, c.y), c.z);
    return {std::sqrt(std::max(0.0, r + c.z)), std::sqrt(std::max(0.0, r - c.z)), azimuth(c)};
}

ProlateSpheroidal to_prolate_spheroidal(const Cartesian& c, double f)
{
    require(std::isfinite(f) && f > 0.0, "f must be positive");
    const double rho = std::hypot(c.x, c.y);
    const double r1 = std::hypot(rho, c.z + f);
    const double r2 = std::hypot(rho, c.z - f);
    const double u = std::max(1.0, (r1 + r2) / (2.0 * f));
    const double v = std::clamp((r1 - r2) / (2.0 * f), -1.0, 1.0);
    return {u, v, azimuth(c), f};
}

Cartesian to_nucleus_frame(const CoordinatePoint& p)
{
    Cartesian c = to_cartesian(p);
    if (auto* ps = std::get_if<ProlateSpheroidal>(&p)) c.z += ps->f;
    return c;
}

ProlateSpheroidal nucleus_frame_to_prolate(const Cartesian& c, double f)
{
    return to_prolate_spheroidal({c.x, c.y, c.z - f}, f);
}

namespace {

struct Resolved {
    double rho, z, r, ct, phi;
};

Resolved resolve(const CoordinatePoint& p, bool hydrogen)
{
    if (auto* c = std::get_if<Cylindrical>(&p)) {
        require(c->rho >= 0.0, "rho must be non-negative");
        const double r = std::hypot(c->rho, c->z);
        return {c->rho, c->z, r, r > 0.0 ? c->z / r : 1.0, c->phi};
    }
    if (auto* s = std::get_if<Spherical>(&p)) {
        require(s->r >= 0.0 && s->theta >= 0.0 && s->theta <= pi, "invalid spherical point");
        const double ct = std::cos(s->theta);
        return {s->r * std::sin(s->theta), s->r * ct, s->r, ct, s->phi};
    }
    if (auto* q = std::get_if<Parabolic>(&p)) {
        require(q->xi >= 0.0 && q->eta >= 0.0, "xi and eta must be non-negative");
        const double x2 = q->xi * q->xi, e2 = q->eta * q->eta;
        const double r = 0.5 * (x2 + e2), z = 0.5 * (x2 - e2);
        return {q->xi * q->eta, z, r, r > 0.0 ? z / r : 1.0, q->phi};
    }
    if (auto* ps = std::get_if<ProlateSpheroidal>(&p)) {
        require(hydrogen, "prolate spheroidal points are only meaningful for hydrogen states");
        const Cartesian c = to_cartesian(p);
        const double rho = std::hypot(c.x, c.y);
        const double r = ps->f * (ps->u + ps->v);
        const double z = c.z + ps->f;
        return {rho, z, r, r > 0.0 ? std::clamp(z / r, -1.0, 1.0) : 1.0, ps->phi};
    }
    const auto& c = std::get<Cartesian>(p);
    const double rho = std::hypot(c.x, c.y);
    const double r = std::hypot(rho, c.z);
    return {rho, c.z, r, r > 0.0 ? c.z / r : 1.0, azimuth(c)};
}

// (u, v) of a hydrogen point for focal half-distance f
std::pair<double, double> prolate_uv(const CoordinatePoint& p, const Resolved& rp, double f)
{
    if (auto* ps = std::get_if<ProlateSpheroidal>(&p); ps && ps->f == f) return {ps->u, ps->v};
    const double r2 = std::hypot(rp.rho, rp.z - 2.0 * f);
    const double u = std::max(1.0, (rp.r + r2) / (2.0 * f));
    const double v = std::clamp((rp.r - r2) / (2.0 * f), -1.0, 1.0);
    return {u, v};
}

double ipow(double x, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

double common_factor(const Eigenstate& s, const CoordinatePoint& p)
{
    const Family fam = family_of(s);
    const bool hyd = is_hydrogen(fam);
    const Resolved rp = resolve(p, hyd);
    const AngularMode& mode = mode_of(s);
    const double mu = mode.mu();
    const double gauss = hyd ? std::exp(-rp.r / nu_of(s)) : std::exp(-0.5 * rp.r * rp.r);
    return std::pow(rp.rho, mu) * gauss * phi_eval(mode, rp.phi);
}

double polynomial_part(const Eigenstate& s, const CoordinatePoint& p)
{
    const Family fam = family_of(s);
    const Resolved rp = resolve(p, is_hydrogen(fam));
    const double mu = mode_of(s).mu();
    switch (fam) {
    case Family::osc_cyl: {
        const auto& st = std::get<OscCyl>(s);
        return kummer_poly(st.n_rho, mu + 1.0)(rp.rho * rp.rho) * hermite_poly(st.n_z)(rp.z);
    }
    case Family::osc_sph: {
        const auto& st = std::get<OscSph>(s);
        const double lambda = st.n_theta + mu;
        return ipow(rp.r, st.n_theta) * polar_parity_poly(st.n_theta, mu)(rp.ct) *
               kummer_poly(st.n_r, lambda + 1.5)(rp.r * rp.r);
    }
    case Family::hyd_sph: {
        const auto& st = std::get<HydSph>(s);
        const double lambda = st.n_theta + mu;
        const double t = 2.0 * rp.r / nu_of(s);
        return ipow(t, st.n_theta) * polar_parity_poly(st.n_theta, mu)(rp.ct) *
               kummer_poly(st.n_r, 2.0 * lambda + 2.0)(t);
    }
    case Family::hyd_par: {
        const auto& st = std::get<HydPar>(s);
        const double nu = nu_of(s);
        double x2 = rp.r + rp.z, e2 = rp.r - rp.z;
        if (auto* q = std::get_if<Parabolic>(&p)) {
            x2 = q->xi * q->xi;
            e2 = q->eta * q->eta;
        }
        return kummer_poly(st.n_xi, mu + 1.0)(x2 / nu) * kummer_poly(st.n_eta, mu + 1.0)(e2 / nu);
    }
    case Family::hyd_spheroidal: {
        const auto& st = std::get<HydSpheroidal>(s);
        auto [u, v] = prolate_uv(p, rp, st.f);
        return spheroidal_product_eval(st.spec(), st.solution, u, v);
    }
    }
    throw DomainError("unknown family");
}

double eval_eigenfunction(const Eigenstate& s, const CoordinatePoint& p)
{
    return common_factor(s, p) * polynomial_part(s, p);
}

double polar_norm(int n, double mu)
{
    // P_n = kappa C_n^{(a)}, a = mu + 1/2
    const double a = mu + 0.5;
    double log_lead_c = n * std::log(2.0) - std::lgamma(n + 1.0);
    for (int k = 0; k < n; ++k) log_lead_c += std::log(a + k);
    const double log_kappa = std::log(polar_leading_coeff(n, mu)) - log_lead_c;
    const double log_h = std::log(pi) + (1.0 - 2.0 * a) * std::log(2.0) + std::lgamma(n + 2.0 * a) -
                         std::lgamma(n + 1.0) - std::log(n + a) - 2.0 * std::lgamma(a);
    return std::exp(2.0 * log_kappa + log_h);
}

double relative_norm(const Eigenstate& s)
{
    const double mu = mode_of(s).mu();
    switch (family_of(s)) {
    case Family::osc_cyl: {
        const auto& st = std::get<OscCyl>(s);
        const double l = std::lgamma(st.n_rho + 1.0) + std::lgamma(mu + 1.0) - std::lgamma(st.n_rho + mu + 1.0) +
                         st.n_z * std::log(2.0) + std::lgamma(st.n_z + 1.0);
        return std::exp(0.5 * l);
    }
    case Family::osc_sph: {
        const auto& st = std::get<OscSph>(s);
        const double b = st.n_theta + mu + 1.5;
        const double l = std::lgamma(st.n_r + 1.0) + 2.0 * std::lgamma(b) - std::lgamma(st.n_r + b) -
                         std::lgamma(mu + 1.5);
        return std::sqrt(std::exp(l) * polar_norm(st.n_theta, mu) / polar_norm(0, mu));
    }
    case Family::hyd_sph: {
        const auto& st = std::get<HydSph>(s);
        const double b = 2.0 * (st.n_theta + mu) + 2.0;
        const double l = std::lgamma(st.n_r + 1.0) + 2.0 * std::lgamma(b) + std::log(2.0 * st.n_r + b) -
                         std::lgamma(st.n_r + b) - std::lgamma(2.0 * mu + 3.0);
        return std::sqrt(std::exp(l) * polar_norm(st.n_theta, mu) / polar_norm(0, mu));
    }
    case Family::hyd_par: {
        const auto& st = std::get<HydPar>(s);
        auto i0 = [mu](int n) {
            return std::exp(std::lgamma(n + 1.0) + 2.0 * std::lgamma(mu + 1.0) - std::lgamma(n + mu + 1.0));
        };
        auto i1 = [&](int n) { return i0(n) * (2.0 * n + mu + 1.0); };
        const double num = i1(st.n_xi) * i0(st.n_eta) + i0(st.n_xi) * i1(st.n_eta);
        return std::sqrt(num / (2.0 * std::tgamma(mu + 1.0) * std::tgamma(mu + 2.0)));
    }
    case Family::hyd_spheroidal: break;
    }
    throw DomainError("no closed-form norm for spheroidal states");
}

double eval_normalized(const Eigenstate& s, const CoordinatePoint& p)
{
    return eval_eigenfunction(s, p) / relative_norm(s);
}

double published_norm_ratio(const Eigenstate& s)
{
    const double m = mode_of(s).mu();
    auto [a, b] = quantum_numbers(s);
    const Family fam = family_of(s);
    require(fam == Family::hyd_sph || fam == Family::hyd_par, "printed ratios exist for hydrogen sph/par only");
    require(a + b <= 2, "printed ratios exist for n1 + n2 <= 2 only");
    if (a + b == 0) return 1.0;
    if (fam == Family::hyd_sph) {
        if (a == 0 && b == 1) return 2.0 / std::sqrt(2.0 + m);
        if (a == 1 && b == 0) return 2.0 * (1.0 + m) / std::sqrt(2.0 + m);
        if (a == 0 && b == 2) return std::sqrt(4.0 * (1.0 + m) / ((2.0 + m) * (3.0 + m) * (3.0 + 2.0 * m)));
        if (a == 1 && b == 1) return std::sqrt(8.0);
        return std::sqrt(2.0 * std::pow(1.0 + m, 3) * (3.0 + 2.0 * m) / (3.0 + m));
    }
    if (a + b == 1) return (1.0 + m) / std::sqrt(2.0 + m);
    if (a == 1) return (1.0 + m) * std::sqrt(2.0 * (1.0 + m)) / std::sqrt(3.0 + m);
    return (1.0 + m) * std::sqrt(2.0 + m) / std::sqrt(3.0 + m);
}

std::vector<Eigenstate> multiplet(Family family, int N, const AngularMode& mode, std::optional<double> f)
{
    require(N >= 0, "N must be non-negative");
    std::vector<Eigenstate> out;
    if (!is_hydrogen(family)) {
        for (int a = N / 2; a >= 0; --a) out.push_back(make_state(family, a, N - 2 * a, mode));
        return out;
    }
    if (family == Family::hyd_spheroidal) {
        require(f.has_value() && std::isfinite(*f) && *f > 0.0, "spheroidal states need f > 0");
        auto sols = solve_spheroidal({mode.mu(), *f, N});
        for (int a = 0; a <= N; ++a) out.push_back(HydSpheroidal{a, N - a, mode, *f, sols[a]});
        return out;
    }
    for (int a = 0; a <= N; ++a) out.push_back(make_state(family, a, N - a, mode));
    return out;
}

std::string describe(const Eigenstate& s)
{
    static const char* names[] = {"OscCyl", "OscSph", "HydSph", "HydPar", "HydSpheroidal"};
    auto [a, b] = quantum_numbers(s);
    std::ostringstream os;
    os << names[s.index()] << "(" << a << "," << b << ", mu=" << mode_of(s).mu();
    if (auto f = focal_of(s)) os << ", f=" << *f;
    os << ")";
    return os.str();
}

}  // namespace wedge
