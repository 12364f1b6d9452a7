#include "wedge/interbasis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wedge {

namespace {

double halton(int index, int base)
{
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

Eigen::MatrixXd rows_of(std::initializer_list<std::initializer_list<double>> init)
{
    const auto n = static_cast<Eigen::Index>(init.size());
    const auto m = static_cast<Eigen::Index>(init.begin()->size());
    Eigen::MatrixXd out(n, m);
    Eigen::Index i = 0;
    for (const auto& row : init) {
        Eigen::Index j = 0;
        for (double v : row) out(i, j++) = v;
        ++i;
    }
    return out;
}

void require(bool ok, const char* msg)
{
    if (!ok) throw DomainError(msg);
}

// Polynomial in (r, z), keyed by exponents.
using BiPoly = std::map<std::pair<int, int>, double>;

BiPoly bi_mul(const BiPoly& a, const BiPoly& b)
{
    BiPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    return out;
}

BiPoly bi_add(BiPoly a, const BiPoly& b, double scale = 1.0)
{
    for (const auto& [e, c] : b) a[e] += scale * c;
    return a;
}

BiPoly bi_const(double c) { return {{{0, 0}, c}}; }

// Spherical hydrogen polynomial t^{n_theta} P(cos theta) M(-n_r, 2 lambda + 2, t), t = 2r/nu.
BiPoly spherical_bipoly(int n_r, int n_theta, double mu)
{
    const double nu = n_r + n_theta + mu + 1.0;
    const double c = 2.0 / nu;
    const Polynomial P = polar_parity_poly(n_theta, mu);
    const Polynomial M = kummer_poly(n_r, 2.0 * (n_theta + mu) + 2.0);
    BiPoly ang, rad;
    for (int k = 0; k <= P.degree(); ++k)
        if (P.coeff(k) != 0.0) ang[{n_theta - k, k}] = std::pow(c, n_theta) * P.coeff(k);
    for (int j = 0; j <= M.degree(); ++j) rad[{j, 0}] = std::pow(c, j) * M.coeff(j);
    return bi_mul(ang, rad);
}

// S(x) S(y) with x + y = r/f - 2 and x y = (z - r)/f (nucleus at the origin).
BiPoly spheroidal_bipoly(const std::vector<double>& c, double f)
{
    const BiPoly e1 = {{{0, 0}, -2.0}, {{1, 0}, 1.0 / f}};
    const BiPoly e2 = {{{1, 0}, -1.0 / f}, {{0, 1}, 1.0 / f}};
    const int n = static_cast<int>(c.size());
    std::vector<BiPoly> p(n), e2pow(n);
    p[0] = bi_const(2.0);
    if (n > 1) p[1] = e1;
    for (int m = 2; m < n; ++m) p[m] = bi_add(bi_mul(e1, p[m - 1]), bi_mul(e2, p[m - 2]), -1.0);
    e2pow[0] = bi_const(1.0);
    for (int m = 1; m < n; ++m) e2pow[m] = bi_mul(e2pow[m - 1], e2);
    BiPoly out;
    for (int j = 0; j < n; ++j) {
        out = bi_add(out, e2pow[j], c[j] * c[j]);
        for (int k = j + 1; k < n; ++k) out = bi_add(out, bi_mul(e2pow[j], p[k - j]), c[j] * c[k]);
    }
    return out;
}

double state_value(const Eigenstate& s, const CoordinatePoint& p, bool normalized)
{
    const double v = polynomial_part(s, p);
    return normalized ? v / relative_norm(s) : v;
}

double r_scale(const MultipletDescriptor& d)
{
    return is_hydrogen(d.family) ? 3.0 * (d.N + d.mode.mu() + 1.0) : 3.0;
}

}  // namespace

double TransformMatrix::orthonormality_defect() const
{
    const Eigen::MatrixXd d = m * m.transpose() - Eigen::MatrixXd::Identity(m.rows(), m.rows());
    return d.cwiseAbs().maxCoeff();
}

std::vector<CoordinatePoint> sample_wedge_points(const AngularMode& mode, double r_max, int count, int offset)
{
    std::vector<CoordinatePoint> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    const double phi0 = mode.phi0();
    for (int k = 0; k < count; ++k) {
        const int i = k + std::max(offset, 1);
        const double r = r_max * halton(i, 2);
        const double theta = std::acos(2.0 * halton(i, 3) - 1.0);
        const double phi = phi0 * (0.05 + 0.9 * halton(i, 5));
        out.emplace_back(Spherical{r, theta, phi});
    }
    return out;
}

TransformMatrix osc_interbasis_matrix(int N, const AngularMode& mode)
{
    require(N >= 0, "N must be non-negative");
    const MultipletDescriptor rows{Family::osc_sph, N, mode, std::nullopt};
    const MultipletDescriptor cols{Family::osc_cyl, N, mode, std::nullopt};
    const double m = mode.mu();
    const double b = m + 1.0;
    using std::sqrt;
    Eigen::MatrixXd M;
    switch (N) {
    case 0:
    case 1: M = Eigen::MatrixXd::Identity(1, 1); break;
    case 2: {
        const double d = 2 * m + 3;
        M = rows_of({{sqrt(2 * b / d), -sqrt(1 / d)}, {sqrt(1 / d), sqrt(2 * b / d)}});
        break;
    }
    case 3: {
        const double d = 2 * m + 5;
        M = rows_of({{sqrt(2 * b / d), -sqrt(3 / d)}, {sqrt(3 / d), sqrt(2 * b / d)}});
        break;
    }
    case 4: {
        const double d3 = 2 * m + 3, d5 = 2 * m + 5, d7 = 2 * m + 7;
        M = rows_of({{sqrt(4 * b * (m + 2) / (d3 * d5)), -sqrt(4 * b / (d3 * d5)), -sqrt(3 / (d3 * d5))},
                     {sqrt(4 * (m + 2) / (d3 * d7)), (2 * m + 1) / sqrt(d3 * d7), sqrt(12 * b / (d3 * d7))},
                     {sqrt(3 / (d5 * d7)), sqrt(12 * (m + 2) / (d5 * d7)), -sqrt(4 * b * (m + 2) / (d5 * d7))}});
        break;
    }
    case 5: {
        const double d5 = 2 * m + 5, d7 = 2 * m + 7, d9 = 2 * m + 9;
        M = rows_of({{sqrt(4 * b * (m + 2) / (d5 * d7)), -sqrt(12 * b / (d5 * d7)), sqrt(15 / (d5 * d7))},
                     {sqrt(12 * (m + 2) / (d5 * d9)), (2 * m - 1) / sqrt(d5 * d9), -sqrt(20 * b / (d5 * d9))},
                     {sqrt(15 / (d7 * d9)), sqrt(20 * (m + 2) / (d7 * d9)), sqrt(4 * b * (m + 2) / (d7 * d9))}});
        break;
    }
    default: return numeric_overlap_matrix(rows, cols, true).matrix;
    }
    return {rows, cols, M, true, true};
}

TransformMatrix hydrogen_sph_par_matrix(int N, const AngularMode& mode)
{
    require(N >= 0, "N must be non-negative");
    const MultipletDescriptor rows{Family::hyd_sph, N, mode, std::nullopt};
    const MultipletDescriptor cols{Family::hyd_par, N, mode, std::nullopt};
    const double m = mode.mu();
    using std::sqrt;
    Eigen::MatrixXd M;
    switch (N) {
    case 0: M = Eigen::MatrixXd::Identity(1, 1); break;
    case 1: {
        const double s = 1.0 / sqrt(2.0);
        M = rows_of({{s, -s}, {s, s}});
        break;
    }
    case 2: {
        const double d = 3 + 2 * m;
        const double a = sqrt((1 + m) / (2 * d)), c = sqrt((2 + m) / (2 * d));
        M = rows_of({{a, -sqrt((2 + m) / d), a}, {1 / sqrt(2.0), 0.0, -1 / sqrt(2.0)}, {c, sqrt((1 + m) / d), c}});
        break;
    }
    default: return numeric_overlap_matrix(rows, cols, true).matrix;
    }
    return {rows, cols, M, true, true};
}

TransformMatrix sph_spheroidal_by_coefficients(int N, const AngularMode& mode, double f, double* residual)
{
    require(N >= 0, "N must be non-negative");
    require(std::isfinite(f) && f > 0.0, "f must be positive");
    const MultipletDescriptor rows{Family::hyd_sph, N, mode, std::nullopt};
    const MultipletDescriptor cols{Family::hyd_spheroidal, N, mode, f};
    const double mu = mode.mu();
    const auto sols = solve_spheroidal({mu, f, N});

    std::vector<BiPoly> col_polys, row_polys;
    for (const auto& s : sols) col_polys.push_back(spheroidal_bipoly(s.coeffs, f));
    for (int a = 0; a <= N; ++a) row_polys.push_back(spherical_bipoly(a, N - a, mu));

    std::map<std::pair<int, int>, int> index;
    for (const auto* set : {&col_polys, &row_polys})
        for (const auto& p : *set)
            for (const auto& [e, c] : p) index.emplace(e, 0);
    int k = 0;
    for (auto& kv : index) kv.second = k++;

    const int n = N + 1;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(k, n), R = Eigen::MatrixXd::Zero(k, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [e, c] : col_polys[j]) C(index[e], j) += c;
    for (int i = 0; i < n; ++i)
        for (const auto& [e, c] : row_polys[i]) R(index[e], i) += c;

    const Eigen::MatrixXd X = C.colPivHouseholderQr().solve(R);
    if (residual) *residual = (C * X - R).cwiseAbs().maxCoeff() / std::max(1.0, R.cwiseAbs().maxCoeff());
    return {rows, cols, X.transpose(), false, false};
}

TransformMatrix hydrogen_sph_spheroidal_matrix(int N, const AngularMode& mode, double f)
{
    if (N != 1) return sph_spheroidal_by_coefficients(N, mode, f);
    require(std::isfinite(f) && f > 0.0, "f must be positive");
    const double b = mode.mu() + 1.0;
    const auto sols = solve_spheroidal({mode.mu(), f, 1});
    const double A1 = sols[0].A, A2 = sols[1].A, d = A2 - A1;
    Eigen::MatrixXd M = rows_of({{2 * b / d * (A2 - A2 * A2 / (2 * b)), -2 * b / d * (A1 - A1 * A1 / (2 * b))},
                                 {A2 * A2 / (2 * b * d), -A1 * A1 / (2 * b * d)}});
    return {{Family::hyd_sph, 1, mode, std::nullopt}, {Family::hyd_spheroidal, 1, mode, f}, M, false, false};
}

Eigen::MatrixXd printed_sph_spheroidal_matrix_n1(const AngularMode& mode, double f)
{
    const double b = mode.mu() + 1.0;
    const auto sols = solve_spheroidal({mode.mu(), f, 1});
    const double A1 = sols[0].A, A2 = sols[1].A, d = A2 - A1;
    return rows_of({{2 * b / (f * d) * (A2 - A2 * A2 / (2 * b)), -2 * b / (f * d) * (A1 - A1 * A1 / (2 * b))},
                    {A2 * A2 / (2 * b * d), -A1 * A1 / (2 * b * d)}});
}

OverlapResult numeric_overlap_matrix(const MultipletDescriptor& rows, const MultipletDescriptor& cols, bool normalized)
{
    require(rows.N >= 0 && cols.N >= 0, "N must be non-negative");
    const auto rs = rows.states();
    const auto cs = cols.states();
    require(!rs.empty() && !cs.empty(), "empty multiplet");
    const int nr = static_cast<int>(rs.size()), nc = static_cast<int>(cs.size());
    const int npts = std::max(4 * (std::max(rows.N, cols.N) + 1) * (std::max(rows.N, cols.N) + 1), 4 * nc);
    const double rmax = std::max(r_scale(rows), r_scale(cols));

    for (int attempt = 0; attempt < 4; ++attempt) {
        const auto pts = sample_wedge_points(rows.mode, rmax, npts, 1 + attempt * 977);
        Eigen::MatrixXd C(npts, nc), R(npts, nr);
        for (int p = 0; p < npts; ++p) {
            for (int j = 0; j < nc; ++j) C(p, j) = state_value(cs[j], pts[p], normalized);
            for (int i = 0; i < nr; ++i) R(p, i) = state_value(rs[i], pts[p], normalized);
        }
        Eigen::VectorXd scale = C.colwise().norm().transpose();
        for (int j = 0; j < nc; ++j)
            if (scale[j] == 0.0) scale[j] = 1.0;
        const Eigen::MatrixXd Cs = C * scale.cwiseInverse().asDiagonal();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(Cs, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double cond = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : INFINITY;
        if (!(cond < 1e8)) continue;
        const Eigen::MatrixXd Xs = svd.solve(R);
        const Eigen::MatrixXd X = scale.cwiseInverse().asDiagonal() * Xs;
        const double res = (C * X - R).cwiseAbs().maxCoeff() / std::max(1e-300, R.cwiseAbs().maxCoeff());
        OverlapResult out{{rows, cols, X.transpose(), normalized, normalized}, npts, cond, res};
        return out;
    }
    throw NumericError("numeric overlap: sample design is ill-conditioned");
}

SignGauge align_signs(const Eigen::MatrixXd& numeric, const Eigen::MatrixXd& reference)
{
    require(numeric.rows() == reference.rows() && numeric.cols() == reference.cols(), "matrix shape mismatch");
    const int nr = static_cast<int>(numeric.rows()), nc = static_cast<int>(numeric.cols());
    require(nc <= 16, "too many columns for exhaustive sign alignment");
    SignGauge best;
    best.max_diff = INFINITY;
    int best_flips = 0;
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
        std::vector<int> cs(nc);
        Eigen::VectorXd csd(nc);
        for (int j = 0; j < nc; ++j) {
            cs[j] = (mask >> j) & 1u ? -1 : 1;
            csd[j] = cs[j];
        }
        Eigen::MatrixXd a = numeric * csd.asDiagonal();
        std::vector<int> rs(nr);
        double worst = 0.0;
        int flips = static_cast<int>(std::count(cs.begin(), cs.end(), -1));
        for (int i = 0; i < nr; ++i) {
            const double plus = (a.row(i) - reference.row(i)).cwiseAbs().maxCoeff();
            const double minus = (-a.row(i) - reference.row(i)).cwiseAbs().maxCoeff();
            rs[i] = minus < plus ? -1 : 1;
            if (rs[i] < 0) {
                a.row(i) *= -1.0;
                ++flips;
            }
            worst = std::max(worst, std::min(plus, minus));
        }
        if (worst < best.max_diff - 1e-15 || (worst <= best.max_diff + 1e-15 && flips < best_flips)) {
            best = {rs, cs, a, worst};
            best_flips = flips;
        }
    }
    return best;
}

double pointwise_expansion_error(const TransformMatrix& t, int points)
{
    const auto rs = t.rows.states();
    const auto cs = t.cols.states();
    const double rmax = std::max(r_scale(t.rows), r_scale(t.cols));
    const auto pts = sample_wedge_points(t.rows.mode, rmax, points, 4099);
    auto value = [&](const Eigenstate& s, const CoordinatePoint& p) {
        const double v = eval_eigenfunction(s, p);
        return t.normalized ? v / relative_norm(s) : v;
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        double scale = 0.0, err = 0.0;
        for (const auto& p : pts) {
            const double lhs = value(rs[i], p);
            double rhs = 0.0;
            for (std::size_t j = 0; j < cs.size(); ++j) rhs += t.m(i, j) * value(cs[j], p);
            scale = std::max(scale, std::abs(lhs));
            err = std::max(err, std::abs(lhs - rhs));
        }
        worst = std::max(worst, scale > 0.0 ? err / scale : err);
    }
    return worst;
}

ExpansionReport expansion_identity_check(const AngularMode& mode, int points)
{
    const double mu = mode.mu(), b = mu + 1.0, d = 2.0 * mu + 3.0;
    const Eigenstate s10 = make_state(Family::osc_sph, 1, 0, mode), s02 = make_state(Family::osc_sph, 0, 2, mode);
    const Eigenstate c10 = make_state(Family::osc_cyl, 1, 0, mode), c02 = make_state(Family::osc_cyl, 0, 2, mode);
    ExpansionReport rep;
    for (const auto& p : sample_wedge_points(mode, 3.0, points, 7)) {
        const double lhs_first = polynomial_part(s10, p), lhs_second = polynomial_part(s02, p);
        const double rho_term = polynomial_part(c10, p);        // 1 - rho^2/(mu+1)
        const double z_term = 0.5 * polynomial_part(c02, p);    // 2 z^2 - 1
        rep.first_identity_error = std::max(rep.first_identity_error, std::abs(lhs_first - (2 * b / d * rho_term - z_term / d)));
        rep.second_identity_published_error = std::max(rep.second_identity_published_error, std::abs(lhs_second - (rho_term / d + 2 * b / d * z_term)));
        rep.second_identity_corrected_error = std::max(rep.second_identity_corrected_error, std::abs(lhs_second - 0.5 * (rho_term + z_term)));
    }
    return rep;
}

}  // namespace wedge
