#pragma once

#include "wedge/polynomial.hpp"
#include "wedge/spheroidal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wedge {

// Angular factor sqrt(2/phi0) sin(mu phi) of a wedge with opening phi0,
// mu = n_phi pi / phi0. An abstract mode carries mu directly (phi0 = pi/mu).
class AngularMode {
public:
    static AngularMode from_angle(int n_phi, double phi0);
    static AngularMode abstract(double mu);

    int n_phi() const { return n_phi_; }
    double phi0() const { return phi0_; }
    double mu() const { return n_phi_ * base_; }
    bool is_abstract() const { return abstract_; }
    // Same wedge, n_phi shifted by dn. Throws when n_phi would drop below 1.
    AngularMode shifted(int dn) const;

    friend bool operator==(const AngularMode& a, const AngularMode& b)
    {
        return a.n_phi_ == b.n_phi_ && a.phi0_ == b.phi0_ && a.base_ == b.base_ && a.abstract_ == b.abstract_;
    }

private:
    AngularMode(int n, double phi0, double base, bool abs) : n_phi_(n), phi0_(phi0), base_(base), abstract_(abs) {}
    int n_phi_;
    double phi0_;
    double base_;  // pi / phi0
    bool abstract_;
};

double mu_from_angle(int n_phi, double phi0);
double phi_eval(const AngularMode& mode, double phi);

struct OscCyl { int n_rho; int n_z; AngularMode mode; };
struct OscSph { int n_r; int n_theta; AngularMode mode; };
struct HydSph { int n_r; int n_theta; AngularMode mode; };
struct HydPar { int n_xi; int n_eta; AngularMode mode; };
struct HydSpheroidal {
    int n_u;
    int n_v;
    AngularMode mode;
    double f;
    SpheroidalSolution solution;
    SpheroidalSpec spec() const { return {mode.mu(), f, n_u + n_v}; }
};

using Eigenstate = std::variant<OscCyl, OscSph, HydSph, HydPar, HydSpheroidal>;

enum class Family { osc_cyl, osc_sph, hyd_sph, hyd_par, hyd_spheroidal };

Family family_of(const Eigenstate& s);
const char* system_name(Family f);  // "osc" or "hydrogen"
const char* family_name(Family f);  // "cyl", "sph", "par", "spheroidal"
bool is_hydrogen(Family f);
const AngularMode& mode_of(const Eigenstate& s);
std::pair<int, int> quantum_numbers(const Eigenstate& s);
// 2n_rho+n_z, 2n_r+n_theta, or n1+n2 for hydrogen
int shell_index(const Eigenstate& s);
std::optional<double> focal_of(const Eigenstate& s);

// Validating constructor; hydrogen spheroidal states solve their spectrum.
Eigenstate make_state(Family family, int q1, int q2, const AngularMode& mode, std::optional<double> f = {});

bool same_state(const Eigenstate& a, const Eigenstate& b);

double energy(const Eigenstate& s);
// nu = n1 + n2 + mu + 1 (hydrogen only)
double nu_of(const Eigenstate& s);

// (A_xi, A_eta) with A_xi + A_eta = 2
std::pair<double, double> separation_constants(const HydPar& s);

struct Cartesian { double x, y, z; };
struct Cylindrical { double rho, phi, z; };
struct Spherical { double r, theta, phi; };
struct Parabolic { double xi, eta, phi; };
// x = f sqrt((u^2-1)(1-v^2)) cos phi, z = f u v; foci at z = -f (nucleus) and z = +f.
struct ProlateSpheroidal { double u, v, phi, f; };

using CoordinatePoint = std::variant<Cartesian, Cylindrical, Spherical, Parabolic, ProlateSpheroidal>;

const char* chart_name(const CoordinatePoint& p);

// Chart-own frame: prolate points come out centered between the foci.
Cartesian to_cartesian(const CoordinatePoint& p);
Cylindrical to_cylindrical(const Cartesian& c);
Spherical to_spherical(const Cartesian& c);
Parabolic to_parabolic(const Cartesian& c);
ProlateSpheroidal to_prolate_spheroidal(const Cartesian& centered, double f);

// Cartesian point with the nucleus at the origin (prolate points shifted by +f).
Cartesian to_nucleus_frame(const CoordinatePoint& p);
// Inverse of the above for a given focal half-distance.
ProlateSpheroidal nucleus_frame_to_prolate(const Cartesian& c, double f);

// psi = common factor x polynomial part, with the common factor
//   oscillator: rho^mu exp(-r^2/2) Phi(phi),  hydrogen: rho^mu exp(-r/nu) Phi(phi).
double eval_eigenfunction(const Eigenstate& s, const CoordinatePoint& p);
double common_factor(const Eigenstate& s, const CoordinatePoint& p);
double polynomial_part(const Eigenstate& s, const CoordinatePoint& p);

// ||psi|| / ||common factor|| in closed form (not for spheroidal states).
double relative_norm(const Eigenstate& s);
// eval_eigenfunction / relative_norm
double eval_normalized(const Eigenstate& s, const CoordinatePoint& p);
// Printed normalization ratios for hydrogen spherical/parabolic states, N <= 2.
double published_norm_ratio(const Eigenstate& s);

// Integral of (1-z^2)^mu P_n(z)^2 over [-1, 1] for polar_parity_poly(n, mu).
double polar_norm(int n, double mu);

// Degenerate shell. Oscillator: descending n_rho / n_r. Hydrogen: ascending first number.
std::vector<Eigenstate> multiplet(Family family, int N, const AngularMode& mode, std::optional<double> f = {});

std::string describe(const Eigenstate& s);

}  // namespace wedge
