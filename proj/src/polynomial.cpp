#include "wedge/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wedge {

const char* variable_name(Variable v)
{
    switch (v) {
    case Variable::t: return "t";
    case Variable::z: return "z";
    case Variable::w: return "w";
    case Variable::s: return "s";
    }
    return "?";
}

Polynomial::Polynomial(std::vector<double> coeffs, Variable var) : c_(std::move(coeffs)), var_(var)
{
    for (double c : c_)
        if (!std::isfinite(c)) throw DomainError("polynomial coefficient is not finite");
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::constant(double c, Variable var) { return Polynomial({c}, var); }

Polynomial Polynomial::monomial(int k, double c, Variable var)
{
    if (k < 0) throw DomainError("negative monomial degree");
    std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v), var);
}

double Polynomial::max_abs_coeff() const
{
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Polynomial::check_var(const Polynomial& o) const
{
    if (var_ != o.var_ && !is_zero() && !o.is_zero())
        throw DomainError(std::string("mixing polynomials in ") + variable_name(var_) + " and " +
                          variable_name(o.var_));
}

void Polynomial::trim(double rel)
{
    const double cut = rel * max_abs_coeff();
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_var(o);
    if (is_zero()) var_ = o.var_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_var(o);
    if (is_zero()) var_ = o.var_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double a)
{
    if (!std::isfinite(a)) throw DomainError("non-finite scale factor");
    if (a == 0.0) {
        c_.clear();
        return *this;
    }
    for (double& c : c_) c *= a;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.is_zero() ? b.var_ : a.var_);
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r), a.var_);
}

bool Polynomial::has_parity(int parity) const
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (static_cast<int>(k % 2) != (parity & 1) && c_[k] != 0.0) return false;
    return true;
}

double poly_eval(const Polynomial& p, double x) { return p(x); }

Polynomial derivative(const Polynomial& p)
{
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Polynomial({}, p.var());
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return Polynomial(std::move(d), p.var());
}

Polynomial scale(const Polynomial& p, double a) { return p * a; }

double max_coeff_diff(const Polynomial& a, const Polynomial& b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

Polynomial kummer_poly(int n, double b)
{
    if (n < 0) throw DomainError("kummer_poly: n must be non-negative");
    if (!std::isfinite(b)) throw DomainError("kummer_poly: b must be finite");
    for (int k = 0; k < n; ++k)
        if (b + k == 0.0) throw DomainError("kummer_poly: Pochhammer (b)_k vanishes");
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    long double term = 1.0L;
    for (int k = 0; k <= n; ++k) {
        c[k] = static_cast<double>(term);
        term *= static_cast<long double>(k - n) / ((static_cast<long double>(b) + k) * (k + 1));
    }
    return Polynomial(std::move(c), Variable::t);
}

Polynomial hermite_poly(int n)
{
    if (n < 0) throw DomainError("hermite_poly: n must be non-negative");
    Polynomial prev({1.0}, Variable::z);
    if (n == 0) return prev;
    Polynomial cur({0.0, 2.0}, Variable::z);
    const Polynomial two_z({0.0, 2.0}, Variable::z);
    for (int k = 1; k < n; ++k) {
        Polynomial next = two_z * cur - prev * (2.0 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial polar_parity_poly(int n, double mu)
{
    if (n < 0) throw DomainError("polar_parity_poly: n must be non-negative");
    if (!std::isfinite(mu) || mu < 0.0) throw DomainError("polar_parity_poly: mu must be non-negative");
    // sum_k a_k ((1-z)/2)^k, expanded binomially in long double
    std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
    const long double m = mu;
    long double a = 1.0L;
    std::vector<long double> binom(static_cast<std::size_t>(n) + 1, 0.0L);
    for (int k = 0; k <= n; ++k) {
        // binom holds coefficients of (1-z)^k
        if (k == 0) {
            binom[0] = 1.0L;
        } else {
            for (int j = k; j >= 1; --j) binom[j] = binom[j] - binom[j - 1];
        }
        const long double w = a / std::pow(2.0L, k);
        for (int j = 0; j <= k; ++j) acc[j] += w * binom[j];
        a *= static_cast<long double>(k - n) * (n + 2 * m + 1 + k) / ((m + 1 + k) * (k + 1));
    }
    std::vector<double> c(acc.size(), 0.0);
    for (std::size_t j = 0; j < acc.size(); ++j)
        if (static_cast<int>(j % 2) == n % 2) c[j] = static_cast<double>(acc[j]);
    return Polynomial(std::move(c), Variable::z);
}

double polar_leading_coeff(int n, double mu)
{
    long double r = 1.0L;
    for (int k = 0; k < n; ++k) r *= (n + 2.0L * mu + 1 + k) / (2.0L * (mu + 1 + k));
    return static_cast<double>(r);
}

namespace {

Polynomial var_poly(std::vector<double> c, Variable v) { return Polynomial(std::move(c), v); }

struct ResidualVisitor {
    const Polynomial& p;

    Polynomial operator()(const KummerOde& o) const
    {
        const Variable v = p.var();
        Polynomial d1 = derivative(p), d2 = derivative(d1);
        return var_poly({0.0, 1.0}, v) * d2 + var_poly({o.b, -1.0}, v) * d1 + p * static_cast<double>(o.n);
    }
    Polynomial operator()(const HermiteOde& o) const
    {
        const Variable v = p.var();
        Polynomial d1 = derivative(p), d2 = derivative(d1);
        return d2 - var_poly({0.0, 2.0}, v) * d1 + p * (2.0 * o.n);
    }
    Polynomial operator()(const PolarOde& o) const
    {
        const Variable v = p.var();
        Polynomial d1 = derivative(p), d2 = derivative(d1);
        return var_poly({1.0, 0.0, -1.0}, v) * d2 - var_poly({0.0, 2.0 * (o.mu + 1.0)}, v) * d1 +
               p * (o.n * (o.n + 2.0 * o.mu + 1.0));
    }
    Polynomial operator()(const SpheroidalOde& o) const
    {
        const Variable v = p.var();
        const double nu = o.N + o.mu + 1.0;
        const double alpha = o.f / nu;
        Polynomial d1 = derivative(p), d2 = derivative(d1);
        const Polynomial xx2 = var_poly({0.0, 2.0, 1.0}, v);
        const Polynomial first = var_poly({2.0 * (o.mu + 1.0), 2.0 * (o.mu + 1.0)}, v) - xx2 * (2.0 * alpha);
        return xx2 * d2 + first * d1 + var_poly({-o.A, 2.0 * alpha * o.N}, v) * p;
    }
};

}  // namespace

Polynomial ode_residual(const OdeFamily& family, const Polynomial& p)
{
    return std::visit(ResidualVisitor{p}, family);
}

Polynomial ode_residual(const OdeFamily& family)
{
    if (auto* k = std::get_if<KummerOde>(&family)) return ode_residual(family, kummer_poly(k->n, k->b));
    if (auto* h = std::get_if<HermiteOde>(&family)) return ode_residual(family, hermite_poly(h->n));
    if (auto* q = std::get_if<PolarOde>(&family)) return ode_residual(family, polar_parity_poly(q->n, q->mu));
    throw DomainError("ode_residual: spheroidal family needs explicit coefficients");
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const double c = p.coeffs()[k];
        if (c == 0.0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        os << std::abs(c);
        if (k >= 1) os << "*" << variable_name(p.var());
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace wedge
