#pragma once

#include "wedge/states.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace wedge {

struct MultipletDescriptor {
    Family family;
    int N;
    AngularMode mode;
    std::optional<double> f;
    std::vector<Eigenstate> states() const { return multiplet(family, N, mode, f); }
};

// psi_row[i] = sum_j m(i, j) psi_col[j], with both sides normalized when
// `normalized` is set, otherwise in the raw polynomial convention.
struct TransformMatrix {
    MultipletDescriptor rows;
    MultipletDescriptor cols;
    Eigen::MatrixXd m;
    bool normalized = true;
    bool orthonormal_expected = true;

    double orthonormality_defect() const;  // max |m m^T - I|
};

// Spherical oscillator shell in terms of the cylindrical one, N <= 5 in closed
// form, larger N through the numeric route.
TransformMatrix osc_interbasis_matrix(int N, const AngularMode& mode);

// Spherical hydrogen shell in terms of the parabolic one, N <= 2 in closed form.
TransformMatrix hydrogen_sph_par_matrix(int N, const AngularMode& mode);

// Spherical hydrogen polynomials in terms of spheroidal products. N = 1 uses the
// closed form in the roots A_1 < A_2; other N come from exact coefficient matching.
TransformMatrix hydrogen_sph_spheroidal_matrix(int N, const AngularMode& mode, double f);

// Same matrix obtained by matching monomial coefficients in (r, z).
TransformMatrix sph_spheroidal_by_coefficients(int N, const AngularMode& mode, double f, double* residual = nullptr);

// Published N = 1 matrix, verbatim.
Eigen::MatrixXd printed_sph_spheroidal_matrix_n1(const AngularMode& mode, double f);

struct OverlapResult {
    TransformMatrix matrix;
    int points = 0;
    double condition = 0.0;
    double residual = 0.0;  // max relative least-squares residual
};

// Least squares on deterministic quasi-random wedge points (at least 4 (N+1)^2).
OverlapResult numeric_overlap_matrix(const MultipletDescriptor& rows, const MultipletDescriptor& cols,
                                     bool normalized = true);

struct SignGauge {
    std::vector<int> row_signs;
    std::vector<int> col_signs;
    Eigen::MatrixXd aligned;  // diag(row_signs) * numeric * diag(col_signs)
    double max_diff = 0.0;
};

// Per-state sign choice bringing `numeric` closest to `reference`.
SignGauge align_signs(const Eigen::MatrixXd& numeric, const Eigen::MatrixXd& reference);

// Max relative |psi_row - sum_j m_ij psi_col| over sampled wedge points.
double pointwise_expansion_error(const TransformMatrix& t, int points = 100);

struct ExpansionReport {
    double first_identity_error = 0.0;             // first oscillator N = 2 identity
    double second_identity_published_error = 0.0;  // second identity, published coefficients
    double second_identity_corrected_error = 0.0;  // second identity, coefficients (1/2, 1/2)
};

ExpansionReport expansion_identity_check(const AngularMode& mode, int points = 200);

// Deterministic wedge points in spherical charts: r in (0, r_max), all theta,
// phi inside the wedge. Halton sequence in bases 2, 3, 5 starting at `offset`.
std::vector<CoordinatePoint> sample_wedge_points(const AngularMode& mode, double r_max, int count, int offset = 1);

}  // namespace wedge
