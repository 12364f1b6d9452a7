#pragma once

#include "wedge/polynomial.hpp"

#include <string>
#include <vector>

namespace wedge {

// Hydrogen in prolate spheroidal coordinates: nucleus at one focus, foci 2f apart.
struct SpheroidalSpec {
    double mu = 0.0;
    double f = 0.0;
    int N = 0;
    double nu() const { return N + mu + 1.0; }
    double alpha() const { return f / nu(); }
    void validate() const;
};

// ode_consistent: diagonal s(s+2mu+1-4f/nu), which is what the differential
// equation actually yields. as_printed: the published diagonal s(s+2mu+1-2f/nu).
enum class RecurrenceForm { ode_consistent, as_printed };

const char* form_name(RecurrenceForm form);

// Row s: sub[s] c_{s-1} + diag[s] c_s + super[s] c_{s+1} = A c_s, s = 0..N.
// sub[0] and super[N] are zero.
struct TridiagonalSystem {
    SpheroidalSpec spec;
    RecurrenceForm form = RecurrenceForm::ode_consistent;
    std::vector<double> sub, diag, super;
    int size() const { return static_cast<int>(diag.size()); }
};

TridiagonalSystem build_tridiagonal(const SpheroidalSpec& spec,
                                    RecurrenceForm form = RecurrenceForm::ode_consistent);

struct SpheroidalSolution {
    int index = 0;  // rank by ascending A, equals n_u
    double A = 0.0;
    std::vector<double> coeffs;  // c_0 = 1
    // Polynomial in w = u - 1 (or v - 1).
    Polynomial polynomial() const { return Polynomial(coeffs, Variable::w); }
};

// All N+1 eigenpairs, ascending in A.
std::vector<SpheroidalSolution> solve_spheroidal(const SpheroidalSpec& spec,
                                                 RecurrenceForm form = RecurrenceForm::ode_consistent);

// max_s |row_s residual| / max_s |c_s|
double recurrence_residual(const TridiagonalSystem& sys, const SpheroidalSolution& sol);

// Coefficients of det(A - T) in powers of A, lowest first, monic.
std::vector<double> characteristic_polynomial(const TridiagonalSystem& sys);

struct CharpolyTerm {
    std::string name;
    double derived = 0.0;
    double printed = 0.0;           // printed formula taken literally
    double printed_nu_reading = 0.0;  // printed formula with a0 mu read as a0 nu
    bool matches_printed = false;
    bool matches_nu_reading = false;
};

struct CharpolyReport {
    SpheroidalSpec spec;
    RecurrenceForm form = RecurrenceForm::ode_consistent;
    std::vector<double> coefficients;  // lowest power of A first
    std::vector<CharpolyTerm> terms;   // N = 1 and N = 2 only
};

CharpolyReport charpoly_crosscheck(const SpheroidalSpec& spec,
                                   RecurrenceForm form = RecurrenceForm::ode_consistent);

// Recurrence read off directly from the spheroidal equation by expanding
// L[(u^2-1)^{mu/2} e^{-alpha u} (u-1)^s] in the structure
// (u^2-1)^{mu/2} e^{-alpha u} sum_k q_k(u) (u^2-1)^{-k}.
struct DerivedRecurrence {
    SpheroidalSpec spec;
    std::vector<double> sub, diag, super;
    double shift = 0.0;          // constant removed so that diag[0] = 0
    double max_off_band = 0.0;   // largest entry outside the tridiagonal band
    double max_singular = 0.0;   // largest leftover (u^2-1)^{-k} coefficient
};

DerivedRecurrence ode_derive_recurrence(const SpheroidalSpec& spec);

// Largest |coefficient difference| between the derived and built recurrences.
double recurrence_mismatch(const DerivedRecurrence& d, const TridiagonalSystem& sys);

// S(u) S(v) for a solution (no prefactor, no exponential).
double spheroidal_product_eval(const SpheroidalSpec& spec, const SpheroidalSolution& sol, double u, double v);

// Printed closed forms of S(u) for N = 1, 2 as functions of A.
Polynomial printed_closed_form(const SpheroidalSpec& spec, double A);

}  // namespace wedge
