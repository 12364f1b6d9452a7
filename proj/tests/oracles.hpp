#pragma once

// Independent reference data for the tests: printed table rows, textbook
// recurrences, quadrature and brute-force determinants. Nothing here calls
// into the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

using Coeffs = std::vector<double>;

// M(-n, mu+1, rho^2) in powers of rho^2, rows n = 0..3.
inline Coeffs cyl_radial_rows(int n, double mu)
{
    const double a = mu + 1, b = mu + 2, c = mu + 3;
    switch (n) {
    case 0: return {1};
    case 1: return {1, -1 / a};
    case 2: return {1, -2 / a, 1 / (a * b)};
    case 3: return {1, -3 / a, 3 / (a * b), -1 / (a * b * c)};
    }
    return {};
}

// Hermite(n, z), rows 0..6.
inline Coeffs hermite_rows(int n)
{
    switch (n) {
    case 0: return {1};
    case 1: return {0, 2};
    case 2: return {-2, 0, 4};
    case 3: return {0, -12, 0, 8};
    case 4: return {12, 0, -48, 0, 16};
    case 5: return {0, 120, 0, -160, 0, 32};
    case 6: return {-120, 0, 720, 0, -480, 0, 64};
    }
    return {};
}

// M(-n, lambda + 3/2, r^2) in powers of r^2, rows 0..3.
inline Coeffs osc_sph_radial_rows(int n, double lambda)
{
    const double a = lambda + 1.5, b = lambda + 2.5, c = lambda + 3.5;
    switch (n) {
    case 0: return {1};
    case 1: return {1, -1 / a};
    case 2: return {1, -2 / a, 1 / (a * b)};
    case 3: return {1, -3 / a, 3 / (a * b), -1 / (a * b * c)};
    }
    return {};
}

// Parity part of 2F1(-n, n+2mu+1; mu+1; (1-z)/2), rows 0..6. Row 6 reads its
// z^2 coefficient as 45(2mu+7).
inline Coeffs polar_rows(int n, double mu)
{
    const double m1 = mu + 1, m2 = mu + 2, m3 = mu + 3;
    const double p3 = 2 * mu + 3, p5 = 2 * mu + 5, p7 = 2 * mu + 7, p9 = 2 * mu + 9, p11 = 2 * mu + 11;
    switch (n) {
    case 0: return {1};
    case 1: return {0, 1};
    case 2: return {-1 / (2 * m1), 0, p3 / (2 * m1)};
    case 3: return {0, -3 / (2 * m1), 0, p5 / (2 * m1)};
    case 4: {
        const double d = 4 * m1 * m2;
        return {3 / d, 0, -6 * p5 / d, 0, p5 * p7 / d};
    }
    case 5: {
        const double d = 4 * m1 * m2;
        return {0, 15 / d, 0, -10 * p7 / d, 0, p7 * p9 / d};
    }
    case 6: {
        const double d = 8 * m1 * m2 * m3;
        return {-15 / d, 0, 45 * p7 / d, 0, -15 * p7 * p9 / d, 0, p7 * p9 * p11 / d};
    }
    }
    return {};
}

// M(-n, 2 lambda + 2, t) with t = 2r, rows 0..3.
inline Coeffs coulomb_radial_rows(int n, double lambda)
{
    const double a = 2 * lambda + 2, b = 2 * lambda + 3, c = 2 * lambda + 4;
    switch (n) {
    case 0: return {1};
    case 1: return {1, -1 / a};
    case 2: return {1, -2 / a, 1 / (a * b)};
    case 3: return {1, -3 / a, 3 / (a * b), -1 / (a * b * c)};
    }
    return {};
}

// Gegenbauer-type recurrence p_{k+2} = (k-n)(k+n+2mu+1)/((k+1)(k+2)) p_k for the
// conjugated polar equation, normalized to p(1) = 1.
inline Coeffs polar_recurrence(int n, double mu)
{
    Coeffs c(n + 1, 0.0);
    c[n % 2] = 1.0;
    for (int k = n % 2; k + 2 <= n; k += 2) c[k + 2] = (k - n) * (k + n + 2 * mu + 1) / ((k + 1.0) * (k + 2.0)) * c[k];
    double at1 = 0.0;
    for (double v : c) at1 += v;
    for (double& v : c) v /= at1;
    return c;
}

inline double horner(const Coeffs& c, double x)
{
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

inline double max_diff(const Coeffs& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        const double x = k < a.size() ? a[k] : 0.0, y = k < b.size() ? b[k] : 0.0;
        m = std::max(m, std::abs(x - y));
    }
    return m;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n)
    {
        for (int i = 0; i < n; ++i) {
            double z = std::cos(pi * (i + 0.75) / (n + 0.5)), dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (z * p1 - p0) / (z * z - 1);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x.push_back(z);
            w.push_back(2.0 / ((1 - z * z) * dp * dp));
        }
    }
    double integrate(const std::function<double(double)>& f, double a, double b) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(0.5 * (b - a) * x[i] + 0.5 * (a + b));
        return 0.5 * (b - a) * s;
    }
};

// Cofactor expansion; fine for the small matrices used here.
inline double determinant(const std::vector<std::vector<double>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1.0;
    if (n == 1) return m[0][0];
    double d = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<double>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<double> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        d += ((j % 2) ? -1.0 : 1.0) * m[0][j] * determinant(minor);
    }
    return d;
}

}  // namespace oracle
