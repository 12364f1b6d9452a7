#pragma once

#include "wedge/polynomial.hpp"
#include "wedge/states.hpp"

#include <map>
#include <optional>
#include <string>

namespace wedge {

enum class Direction { raise, lower };

// Operator output = scalar * result. When the operator maps onto nothing
// (lowering the bottom rung) annihilated is set and result is the zero polynomial.
struct PolyLadderResult {
    Polynomial result;
    double scalar = 0.0;
    bool annihilated = false;
};

// Raw operators acting on an arbitrary polynomial.
Polynomial kummer_raise_op(const Polynomial& p, int n, double b);   // (b + n - t + t d/dt)
Polynomial kummer_lower_op(const Polynomial& p, int n);             // (-n + t d/dt)
Polynomial hermite_raise_op(const Polynomial& p);                   // 2z - d/dz
Polynomial hermite_lower_op(const Polynomial& p);                   // d/dz
// z + (z^2-1)/(2 mu + n + 1) d/dz
Polynomial polar_raise_op(const Polynomial& p, int n, double mu);
// z - (z^2-1)/n d/dz
Polynomial polar_lower_op(const Polynomial& p, int n);

PolyLadderResult kummer_raise(int n, double b);
PolyLadderResult kummer_lower(int n, double b);
PolyLadderResult hermite_raise(int n);
PolyLadderResult hermite_lower(int n);
PolyLadderResult polar_raise(int n, double mu);
PolyLadderResult polar_lower(int n, double mu);

struct AngularLadderResult {
    std::optional<AngularMode> result;
    double scalar = 0.0;
    bool annihilated = false;
};

AngularLadderResult angular_raise(const AngularMode& mode);
AngularLadderResult angular_lower(const AngularMode& mode);

// [cos(pi phi/phi0) +/- (phi0/(n_phi pi)) sin(pi phi/phi0) d/dphi] applied to the
// unnormalized sin(n_phi pi phi / phi0) at phi (plus sign raises).
double angular_operator_apply(const AngularMode& mode, Direction dir, double phi);

// Functions exp(-g s^2) sum_k c_k s^(mu + k), keyed by the integer offset k.
struct QuasiPower {
    double mu = 0.0;
    double g = 0.5;
    std::map<int, double> terms;

    QuasiPower derivative() const;
    QuasiPower times_s(int power) const;  // multiply by s^power
    QuasiPower operator+(const QuasiPower& o) const;
    QuasiPower operator*(double a) const;
    double max_abs() const;
    double operator()(double s) const;
};

struct AnnihilationResidual {
    QuasiPower residual;
    double max_abs = 0.0;
};

// (s + d/ds - mu'/s) for raise, (s - d/ds + mu'/s) for lower, applied to
// s^mu exp(-s^2/2). The raise form annihilates it when mu' = mu.
AnnihilationResidual ground_annihilation_residual(double mu, Direction dir, std::optional<double> mu_op = {});

enum class Dof { angular, radial, axial, polar, xi, eta, spheroidal };

const char* dof_name(Dof d);
Dof dof_from_name(const std::string& name);

struct StateLadderResult {
    std::optional<Eigenstate> state;
    double scalar = 0.0;
    bool annihilated = false;
    double energy_shift = 0.0;
};

// Moves one quantum number of a state. The spheroidal dof shifts n_u by one
// and n_v the opposite way, staying inside the shell.
StateLadderResult apply_ladder(const Eigenstate& state, Dof dof, Direction dir);

}  // namespace wedge
