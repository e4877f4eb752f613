// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "meanwidth/body.hpp"
#include "meanwidth/core.hpp"
#include "meanwidth/quadrature.hpp"
#include "meanwidth/weight.hpp"

namespace meanwidth {

// ---------------------------------------------------------------------------
// Weighted cap integrals over the polar body.
//
// The quantity w_f(x) is the f-mass of the cap K° ∩ {y : <y,x> >= 1},
// normalized by 2/omega(S^1) = 1/pi. In polar coordinates the cap occupies an
// arc of angles; on that arc the radial integral of s^{1+e} is closed form,
// so each cap reduces to one adaptive angular integral. Polygonal polars with
// halfspace-piecewise (or constant) weights skip quadrature entirely: the cap
// is clipped exactly and weighed by sub-areas.
// ---------------------------------------------------------------------------

struct PolarDomain {
    std::function<double(double)> rho;      // outer radius at polar angle phi
    std::vector<double> kinks;              // corner angles of rho in [0, 2pi)
    std::optional<std::vector<Vec2>> poly;  // exact vertices when polygonal
};

// Domain of K° described through the support function of K (rho = 1/h_K).
inline PolarDomain polar_domain(const ConvexBody& body) {
    PolarDomain d;
    if (const Polygon* p = std::get_if<Polygon>(&body.shape)) {
        std::vector<Vec2> dual = polygon_polar_vertices(p->vertices);
        for (const Vec2& v : dual) d.kinks.push_back(wrap_angle(v.angle()));
        d.poly = dual;
        std::vector<Vec2> verts = p->vertices;
        d.rho = [verts](double phi) {
            return 1.0 / polygon_support(verts, unit_vector(phi));
        };
        return d;
    }
    ConvexBody copy = body;
    d.rho = [copy](double phi) { return 1.0 / support_theta(copy, phi); };
    return d;
}

// Domain of a body Q itself (used when the caller already holds the polar).
inline PolarDomain own_domain(const ConvexBody& q) {
    PolarDomain d;
    if (const Polygon* p = std::get_if<Polygon>(&q.shape)) {
        for (const Vec2& v : p->vertices) d.kinks.push_back(wrap_angle(v.angle()));
        d.poly = p->vertices;
        std::vector<Vec2> verts = p->vertices;
        d.rho = [verts](double phi) { return polygon_radial(verts, unit_vector(phi)); };
        return d;
    }
    ConvexBody copy = q;
    d.rho = [copy](double phi) { return body_radial(copy, unit_vector(phi)); };
    return d;
}

struct CapOptions {
    double tol = 1e-12;         // absolute tolerance per cap integral
    bool force_generic = false; // bypass exact polygon paths (for cross-checks)
};

namespace detail {

// integral of s^{1+e} ds over [s0, s1]
inline double radial_factor(double e, double s0, double s1) {
    if (!(s1 > s0)) return 0.0;
    if (std::abs(e + 2.0) < 1e-12) return std::log(s1 / s0);
    double q = e + 2.0;
    return (std::pow(s1, q) - std::pow(s0, q)) / q;
}

inline bool exact_weight(const Weight& w) {
    if (w.halfspace_values) return true;
    return w.power && w.power->first == 0.0;  // constant
}

inline double weighted_polygon_area(const std::vector<Vec2>& poly, const Weight& w) {
    if (poly.size() < 3) return 0.0;
    if (w.halfspace_values) {
        auto [top, bottom] = *w.halfspace_values;
        double a_top = polygon_area(clip_halfplane(poly, {0.0, 1.0}, 0.0));
        double a_bot = polygon_area(clip_halfplane(poly, {0.0, -1.0}, 0.0));
        return top * a_top + bottom * a_bot;
    }
    return w.power->second * polygon_area(poly);
}

// Split angles inside the open arc (lo, hi), where lo/hi may live outside
// [0, 2pi); every representative a + 2*pi*k is considered.
inline std::vector<double> splits_in_arc(const PolarDomain& d, const Weight& w,
                                         double lo, double hi) {
    std::vector<double> out;
    auto add = [&](double a) {
        for (int k = -2; k <= 2; ++k) {
            double cand = a + 2.0 * pi * k;
            if (cand > lo && cand < hi) out.push_back(cand);
        }
    };
    for (double a : d.kinks) add(a);
    for (double a : w.split_angles) add(a);
    return out;
}

}  // namespace detail

// f-mass of the cap Q ∩ {y : <y,x> >= 1}, including the 1/pi normalization.
inline double cap_mass(const PolarDomain& domain, const Weight& w, Vec2 x,
                       const CapOptions& opts = {}) {
    if (x.x == 0.0 && x.y == 0.0) throw input_error("cap apex must be nonzero");

    if (domain.poly && detail::exact_weight(w) && !opts.force_generic) {
        std::vector<Vec2> cap = clip_halfplane(*domain.poly, x, 1.0);
        return detail::weighted_polygon_area(cap, w) / pi;
    }

    double phi_x = x.angle();
    auto psi = [&](double phi) {
        double c = dot(unit_vector(phi), x);
        if (c <= 0.0) return 0.0;
        return c * domain.rho(phi);
    };
    // psi is quasiconcave on the half-circle facing x; the cap arc is its
    // superlevel set {psi > 1}.
    auto [phi_peak, psi_peak] = golden_max(psi, phi_x - 0.5 * pi, phi_x + 0.5 * pi);
    if (!(psi_peak > 1.0)) return 0.0;  // apex inside (or on) the body

    auto level = [&](double phi) { return psi(phi) - 1.0; };
    double lo = bisect_sign_change(level, phi_peak, phi_x - 0.5 * pi);
    double hi = bisect_sign_change(level, phi_peak, phi_x + 0.5 * pi);
    if (lo > hi) std::swap(lo, hi);

    double e = w.radial_exponent;
    auto integrand = [&](double phi) {
        double c = dot(unit_vector(phi), x);
        if (c <= 0.0) return 0.0;
        double s0 = 1.0 / c;
        double s1 = domain.rho(phi);
        if (!(s1 > s0)) return 0.0;
        return w.angular(phi) * detail::radial_factor(e, s0, s1);
    };
    double raw = integrate_with_splits(integrand, lo, hi,
                                       detail::splits_in_arc(domain, w, lo, hi),
                                       opts.tol * pi);
    return raw / pi;
}

// f-mass of the halfspace piece Q ∩ {y : <y,u> >= 0}: the supremum of w_f
// along the ray in direction u. Divergent radial integrals (power weights
// with beta >= 2 at n = 2) make every ray limit infinite.
inline double halfspace_mass(const PolarDomain& domain, const Weight& w, Vec2 u,
                             const CapOptions& opts = {}) {
    u = normalized(u);

    if (domain.poly && detail::exact_weight(w) && !opts.force_generic) {
        std::vector<Vec2> half = clip_halfplane(*domain.poly, u, 0.0);
        return detail::weighted_polygon_area(half, w) / pi;
    }

    double e = w.radial_exponent;
    if (e <= -2.0) {
        // f is not integrable at the origin; nonzero angular factor anywhere
        // on the halfspace makes the mass infinite.
        if (w.power && w.power->second == 0.0) return 0.0;
        return inf;
    }
    double phi_u = u.angle();
    auto integrand = [&](double phi) {
        double s1 = domain.rho(phi);
        return w.angular(phi) * detail::radial_factor(e, 0.0, s1);
    };
    double lo = phi_u - 0.5 * pi, hi = phi_u + 0.5 * pi;
    double raw = integrate_with_splits(integrand, lo, hi,
                                       detail::splits_in_arc(domain, w, lo, hi),
                                       opts.tol * pi);
    return raw / pi;
}

}  // namespace meanwidth
