#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wedge {

// Thrown for out-of-domain arguments (negative degree, vanishing Pochhammer, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical procedure cannot meet its accuracy contract.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// t: confluent argument, z: cos(theta) or axial coordinate,
// w: spheroidal offset u-1 (or v-1), s: radial quasi-power variable.
enum class Variable { t, z, w, s };

const char* variable_name(Variable v);

// Dense real polynomial; coeffs[k] multiplies x^k. The zero polynomial
// has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs, Variable var = Variable::t);

    static Polynomial constant(double c, Variable var = Variable::t);
    static Polynomial monomial(int k, double c = 1.0, Variable var = Variable::t);

    const std::vector<double>& coeffs() const { return c_; }
    Variable var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
    double max_abs_coeff() const;

    double operator()(double x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double a);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= -1.0; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    // True when every odd (parity 0) or even (parity 1) coefficient vanishes.
    bool has_parity(int parity) const;

    // Drops trailing coefficients with |c| < rel * max|c|.
    void trim(double rel = 1e-14);

private:
    void check_var(const Polynomial& o) const;
    std::vector<double> c_;
    Variable var_ = Variable::t;
};

double poly_eval(const Polynomial& p, double x);
Polynomial derivative(const Polynomial& p);
Polynomial scale(const Polynomial& p, double a);

// max_k |a_k - b_k|
double max_coeff_diff(const Polynomial& a, const Polynomial& b);

// M(-n, b, t) = sum_k (-n)_k / ((b)_k k!) t^k.
Polynomial kummer_poly(int n, double b);

// Physicists' Hermite polynomial H_n(z).
Polynomial hermite_poly(int n);

// Parity (-1)^n part of 2F1(-n, n+2mu+1; mu+1; (1-z)/2). At mu = 0 this is
// the Legendre polynomial P_n(z).
Polynomial polar_parity_poly(int n, double mu);

// Leading coefficient of polar_parity_poly(n, mu).
double polar_leading_coeff(int n, double mu);

struct KummerOde { int n; double b; };
struct HermiteOde { int n; };
struct PolarOde { int n; double mu; };
// Conjugated spheroidal equation in x = u - 1 with alpha = f/nu,
//   x(x+2) P'' + [2(mu+1)(x+1) - 2 alpha x(x+2)] P' + (2 alpha N x - A) P = 0.
struct SpheroidalOde { double mu; double f; int N; double A; };

using OdeFamily = std::variant<KummerOde, HermiteOde, PolarOde, SpheroidalOde>;

// Applies the family's differential operator to p (its own eigenvalue term
// included), so a genuine solution gives the zero polynomial.
Polynomial ode_residual(const OdeFamily& family, const Polynomial& p);

// Residual of the polynomial the family's constructor would build.
// Spheroidal families need explicit coefficients and are rejected here.
Polynomial ode_residual(const OdeFamily& family);

std::string to_string(const Polynomial& p);

}  // namespace wedge
