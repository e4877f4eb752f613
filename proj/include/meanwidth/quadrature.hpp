// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "meanwidth/core.hpp"

namespace meanwidth {

// ---------------------------------------------------------------------------
// Gauss-Legendre panel rule
// ---------------------------------------------------------------------------

struct GaussRule {
    std::array<double, 15> nodes{};    // on (-1, 1)
    std::array<double, 15> weights{};
};

// Nodes/weights via Newton iteration on P_15; computed once.
inline const GaussRule& gauss15() {
    static const GaussRule rule = [] {
        GaussRule r;
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            // Chebyshev-based initial guess, then Newton on P_n.
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double p0 = 0.0, p1 = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            r.nodes[n - 1 - i] = x;
            r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

template <class F>
double gauss15_panel(F&& f, double a, double b) {
    const GaussRule& r = gauss15();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::array<double, 15> vals;
    for (int i = 0; i < 15; ++i) vals[i] = r.weights[i] * f(mid + half * r.nodes[i]);
    return half * pairwise_sum(std::span<const double>(vals.data(), vals.size()));
}

namespace detail {

template <class F>
double adaptive_rec(F&& f, double a, double b, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double left = gauss15_panel(f, a, m);
    double right = gauss15_panel(f, m, b);
    double err = std::abs(left + right - whole);
    if (err <= tol || depth >= 48) return left + right;
    return adaptive_rec(f, a, m, left, 0.5 * tol, depth + 1) +
           adaptive_rec(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

// Adaptive integration of f over [a, b] to absolute tolerance tol.
template <class F>
double integrate(F&& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    return detail::adaptive_rec(f, a, b, gauss15_panel(f, a, b), tol, 0);
}

// Same, but with mandatory subdivision at interior split points (kinks of the
// integrand: polygon vertex angles, weight discontinuities).
template <class F>
double integrate_with_splits(F&& f, double a, double b, std::vector<double> splits,
                             double tol) {
    if (!(b > a)) return 0.0;
    splits.erase(std::remove_if(splits.begin(), splits.end(),
                                [&](double s) { return !(s > a && s < b); }),
                 splits.end());
    std::sort(splits.begin(), splits.end());
    splits.push_back(b);
    std::vector<double> parts;
    parts.reserve(splits.size());
    double lo = a;
    double tol_part = tol / static_cast<double>(splits.size());
    for (double hi : splits) {
        if (hi > lo) parts.push_back(integrate(f, lo, hi, tol_part));
        lo = hi;
    }
    return pairwise_sum(parts);
}

// Uniform trapezoid rule on a full period [0, 2*pi); spectrally accurate for
// smooth periodic integrands. Doubles the grid until two consecutive answers
// agree to tol (mixed abs/rel), starting from n0 samples.
template <class F>
double periodic_integral(F&& f, double tol, int n0 = 64, int nmax = (1 << 21)) {
    int n = n0;
    auto eval = [&](int m) {
        std::vector<double> vals(static_cast<size_t>(m));
        double h = 2.0 * pi / m;
        for (int i = 0; i < m; ++i) vals[static_cast<size_t>(i)] = f(i * h);
        return pairwise_sum(vals) * h;
    };
    double prev = eval(n);
    while (n < nmax) {
        n *= 2;
        double cur = eval(n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// ---------------------------------------------------------------------------
// Scalar searches
// ---------------------------------------------------------------------------

// Maximizer of a quasiconcave function on [a, b] by golden-section search.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol = 1e-13) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// Root of a sign change: g(a) and g(b) must have opposite signs (g(a) > 0
// expected). Plain bisection; returns the midpoint of the final bracket.
template <class G>
double bisect_sign_change(G&& g, double a, double b, double xtol = 1e-13) {
    double ga = g(a);
    for (int i = 0; i < 200 && std::abs(b - a) > xtol; ++i) {
        double m = 0.5 * (a + b);
        double gm = g(m);
        if ((ga > 0.0) == (gm > 0.0)) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Largest s in [lo, hi] with pred(s) true, assuming pred is true at lo and
// false at hi (monotone transition). Relative tolerance on the bracket.
template <class P>
double bisect_threshold(P&& pred, double lo, double hi, double rel_tol = 1e-10) {
    for (int i = 0; i < 200 && (hi - lo) > rel_tol * hi; ++i) {
        double m = 0.5 * (lo + hi);
        if (pred(m))
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

}  // namespace meanwidth
