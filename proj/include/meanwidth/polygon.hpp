// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "meanwidth/core.hpp"

namespace meanwidth {

// Planar convex polygon, vertices counterclockwise, origin strictly inside.
// Validation lives in body.hpp; the routines here assume nothing beyond a
// simple ccw vertex loop unless stated.

inline double polygon_area(const std::vector<Vec2>& v) {
    size_t n = v.size();
    if (n < 3) return 0.0;
    std::vector<double> terms(n);
    for (size_t i = 0; i < n; ++i) terms[i] = cross(v[i], v[(i + 1) % n]);
    return 0.5 * pairwise_sum(terms);
}

inline Vec2 polygon_centroid(const std::vector<Vec2>& v) {
    size_t n = v.size();
    double a6 = 0.0;
    Vec2 c{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        Vec2 p = v[i], q = v[(i + 1) % n];
        double w = cross(p, q);
        a6 += w;
        c = c + (p + q) * w;
    }
    return c / (3.0 * a6);
}

// Clip by the halfplane {p : <p, normal> >= offset} (Sutherland-Hodgman).
inline std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 normal,
                                        double offset) {
    std::vector<Vec2> out;
    size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 2);
    for (size_t i = 0; i < n; ++i) {
        Vec2 cur = poly[i];
        Vec2 nxt = poly[(i + 1) % n];
        double dc = dot(cur, normal) - offset;
        double dn = dot(nxt, normal) - offset;
        if (dc >= 0.0) out.push_back(cur);
        if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
            double s = dc / (dc - dn);
            out.push_back(cur + (nxt - cur) * s);
        }
    }
    return out;
}

inline double polygon_support(const std::vector<Vec2>& v, Vec2 u) {
    double best = -inf;
    for (const Vec2& p : v) best = std::max(best, dot(p, u));
    return best;
}

// Radial extent of the polygon from the origin in direction of unit v.
inline double polygon_radial(const std::vector<Vec2>& verts, Vec2 v) {
    size_t n = verts.size();
    double best = inf;
    for (size_t i = 0; i < n; ++i) {
        Vec2 p = verts[i], q = verts[(i + 1) % n];
        Vec2 e = q - p;
        Vec2 nrm{e.y, -e.x};  // outward for ccw loops
        double num = dot(p, nrm);
        double den = dot(v, nrm);
        if (den > 0.0) best = std::min(best, num / den);
    }
    return best;
}

// Vertices of the polar polygon: the facet {<p, n_e> = d_e} of K maps to the
// vertex n_e / d_e of K°; ccw order is preserved.
inline std::vector<Vec2> polygon_polar_vertices(const std::vector<Vec2>& verts) {
    size_t n = verts.size();
    std::vector<Vec2> dual;
    dual.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 p = verts[i], q = verts[(i + 1) % n];
        Vec2 e = q - p;
        Vec2 nrm{e.y, -e.x};
        double d = dot(p, nrm);
        if (!(d > 0.0)) throw domain_error("polar: origin not strictly inside polygon");
        dual.push_back(nrm / d);
    }
    return dual;
}

}  // namespace meanwidth
