// oracles.hpp — Test-only reference implementations, kept independent of the
// library code paths they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hsdp/matrix.hpp"

namespace oracles {

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(x) = x^n + c[n-1] x^(n-1) + ... + c[0].
inline std::vector<double> char_poly(const hsdp::Matrix& a) {
    const Eigen::Index n = a.rows();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    hsdp::Matrix m = hsdp::Matrix::Zero(n, n);
    double ck = 1.0;
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = (a * (m + ck * hsdp::Matrix::Identity(n, n))).eval();
        ck = -m.trace().real() / static_cast<double>(k);
        c[static_cast<std::size_t>(n - k)] = ck;
    }
    return c;
}

inline double eval_poly(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

// All real roots of a polynomial known to have only real roots, by recursive
// root isolation: the roots of p' split the line into monotone intervals.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi) {
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-c[0] / c[1]};

    std::vector<double> dc(deg);
    for (std::size_t k = 1; k <= deg; ++k) dc[k - 1] = c[k] * static_cast<double>(k);
    std::vector<double> crit = real_roots(dc, lo, hi);
    crit.push_back(lo);
    crit.push_back(hi);
    std::sort(crit.begin(), crit.end());

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
        double a = crit[i], b = crit[i + 1];
        if (b - a < 1e-300) continue;
        double fa = eval_poly(c, a), fb = eval_poly(c, b);
        if (fa == 0.0) {
            if (roots.empty() || std::abs(roots.back() - a) > 1e-12) roots.push_back(a);
            continue;
        }
        if (fa * fb > 0.0) continue;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            const double fm = eval_poly(c, m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if (fa * fm < 0.0) {
                b = m;
                fb = fm;
            } else {
                a = m;
                fa = fm;
            }
        }
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

// Eigenvalues of a Hermitian matrix through the characteristic polynomial.
// Practical only for tiny dimensions; that is the point of the cross-check.
inline std::vector<double> eigenvalues_charpoly(const hsdp::Matrix& a) {
    const Eigen::Index n = a.rows();
    if (n > 6) throw std::invalid_argument("eigenvalues_charpoly: dimension too large");
    const std::vector<double> c = char_poly(a);
    // Gershgorin bound.
    double r = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) row += std::abs(a(i, j));
        r = std::max(r, row);
    }
    std::vector<double> roots = real_roots(c, -r - 1.0, r + 1.0);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Classical KL divergence sum q f(p/q) for f = x ln x.
inline double classical_kl(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) == 0.0) continue;
        s += p(i) * std::log(p(i) / q(i));
    }
    return s;
}

// Classical f-divergence sum q f(p/q) for a generic generator.
template <typename F>
double classical_f_div(const Eigen::VectorXd& p, const Eigen::VectorXd& q, F&& f) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (q(i) == 0.0) continue;
        s += q(i) * f(p(i) / q(i));
    }
    return s;
}

}  // namespace oracles
