// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "meanwidth/core.hpp"
#include "meanwidth/polygon.hpp"
#include "meanwidth/quadrature.hpp"

namespace meanwidth {

// ---------------------------------------------------------------------------
// Convex body variants.
//
// The numeric engine runs at n = 2; Ball carries a dimension so the closed
// forms (volume, polar) stay available for n >= 3. All bodies keep the origin
// strictly interior. Ball, Ellipse and TrigSupport are C2+ (boundary twice
// differentiable, curvature strictly positive); Polygon is not and is
// rejected by curvature-based operations.
// ---------------------------------------------------------------------------

struct Ball {
    double radius = 1.0;
    int dim = 2;
};

struct Ellipse {
    double a = 1.0;  // semi-axis along x
    double b = 1.0;  // semi-axis along y
};

struct Polygon {
    std::vector<Vec2> vertices;  // ccw, strictly convex, origin inside
};

// Support function h(theta) = c0 + sum_k ck cos(k theta) + sk sin(k theta).
struct TrigSupport {
    double c0 = 1.0;
    std::vector<double> cs;  // cs[k-1] multiplies cos(k theta)
    std::vector<double> ss;  // ss[k-1] multiplies sin(k theta)
};

struct ConvexBody {
    std::variant<Ball, Ellipse, Polygon, TrigSupport> shape;
    std::string spec;  // the spec string that produced this body, for reports
};

// Support value and first two derivatives along theta (outer normal angle).
struct SupportJet {
    double h = 0.0;
    double dh = 0.0;
    double ddh = 0.0;
    double curvature_radius() const { return h + ddh; }
};

namespace detail {

inline SupportJet ellipse_jet(const Ellipse& e, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    double a2 = e.a * e.a, b2 = e.b * e.b;
    double h2 = a2 * c * c + b2 * s * s;
    double h = std::sqrt(h2);
    double dh2 = 2.0 * (b2 - a2) * s * c;           // d(h^2)/dtheta
    double ddh2 = 2.0 * (b2 - a2) * (c * c - s * s);
    double dh = 0.5 * dh2 / h;
    double ddh = 0.5 * ddh2 / h - 0.25 * dh2 * dh2 / (h2 * h);
    return {h, dh, ddh};
}

inline SupportJet trig_jet(const TrigSupport& t, double theta) {
    SupportJet j{t.c0, 0.0, 0.0};
    for (size_t i = 0; i < std::max(t.cs.size(), t.ss.size()); ++i) {
        double k = static_cast<double>(i + 1);
        double ck = i < t.cs.size() ? t.cs[i] : 0.0;
        double sk = i < t.ss.size() ? t.ss[i] : 0.0;
        double ckt = std::cos(k * theta), skt = std::sin(k * theta);
        j.h += ck * ckt + sk * skt;
        j.dh += k * (-ck * skt + sk * ckt);
        j.ddh += -k * k * (ck * ckt + sk * skt);
    }
    return j;
}

inline void require_planar(const Ball& b, const char* op) {
    if (b.dim != 2)
        throw unsupported_variant(std::string(op) + ": only n=2 balls on the numeric path");
}

}  // namespace detail

inline bool is_smooth(const ConvexBody& body) {
    return !std::holds_alternative<Polygon>(body.shape);
}

inline int body_dim(const ConvexBody& body) {
    if (const Ball* b = std::get_if<Ball>(&body.shape)) return b->dim;
    return 2;
}

// h, h', h'' at normal angle theta; C2+ variants only.
inline SupportJet support_jet(const ConvexBody& body, double theta) {
    return std::visit(
        [&](const auto& s) -> SupportJet {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                detail::require_planar(s, "support_jet");
                return {s.radius, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return detail::ellipse_jet(s, theta);
            } else if constexpr (std::is_same_v<T, TrigSupport>) {
                return detail::trig_jet(s, theta);
            } else {
                throw unsupported_variant("support_jet: polygon has no curvature data");
            }
        },
        body.shape);
}

inline double support_theta(const ConvexBody& body, double theta) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                detail::require_planar(s, "support");
                return s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return detail::ellipse_jet(s, theta).h;
            } else if constexpr (std::is_same_v<T, TrigSupport>) {
                return detail::trig_jet(s, theta).h;
            } else {
                return polygon_support(s.vertices, unit_vector(theta));
            }
        },
        body.shape);
}

// h_K(u) = max over K of <x, u>.
inline double support(const ConvexBody& body, const Direction& u) {
    if (const Polygon* p = std::get_if<Polygon>(&body.shape))
        return polygon_support(p->vertices, u.v);
    return support_theta(body, u.angle());
}

// Radial function rho_K(v): largest s with s*v in K.
inline double body_radial(const ConvexBody& body, Vec2 v) {
    v = normalized(v);
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                detail::require_planar(s, "radial");
                return s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                double q = (v.x * v.x) / (s.a * s.a) + (v.y * v.y) / (s.b * s.b);
                return 1.0 / std::sqrt(q);
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return polygon_radial(s.vertices, v);
            } else {
                // rho(v) = min over normals theta of h(theta)/<v, u(theta)>;
                // the objective is quasiconvex on the half-circle facing v.
                double phi = v.angle();
                auto neg_obj = [&](double theta) {
                    double c = dot(v, unit_vector(theta));
                    return -detail::trig_jet(s, theta).h / c;
                };
                const double eps = 1e-7;
                auto [tm, fm] = golden_max(neg_obj, phi - 0.5 * pi + eps, phi + 0.5 * pi - eps);
                (void)tm;
                return -fm;
            }
        },
        body.shape);
}

// ---------------------------------------------------------------------------
// Boundary points and cone-measure densities
// ---------------------------------------------------------------------------

struct BoundaryPoint {
    Vec2 x;             // point on the boundary
    Vec2 normal;        // outer unit normal at x
    double support;     // <x, normal> > 0
    double curvature;   // Gauss curvature at x
    Vec2 polar_contact; // y(x) on the polar boundary, <x, y(x)> = 1
};

// Boundary point with outer normal u; requires a unique contact point (C2+).
inline BoundaryPoint boundary_point(const ConvexBody& body, const Direction& u) {
    if (!is_smooth(body))
        throw unsupported_variant("boundary_point: polygon faces have no unique contact");
    double theta = u.angle();
    SupportJet j = support_jet(body, theta);
    Vec2 uu = u.v, up = u.v.perp();
    BoundaryPoint bp;
    bp.x = j.h * uu + j.dh * up;
    bp.normal = uu;
    bp.support = j.h;
    double rc = j.curvature_radius();
    if (!(rc > 0.0)) throw domain_error("boundary_point: curvature radius not positive");
    bp.curvature = 1.0 / rc;
    bp.polar_contact = uu / j.h;
    if (std::abs(dot(bp.x, uu) - j.h) > 1e-10 * std::max(1.0, std::abs(j.h)))
        throw numeric_error("boundary_point: support identity violated");
    if (std::abs(dot(bp.x, bp.polar_contact) - 1.0) > 1e-10)
        throw numeric_error("boundary_point: polar contact identity violated");
    return bp;
}

// ---------------------------------------------------------------------------
// Volumes, polar bodies, centroid
// ---------------------------------------------------------------------------

inline double volume(const ConvexBody& body) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return unit_ball_volume(s.dim) * std::pow(s.radius, s.dim);
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return pi * s.a * s.b;
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return polygon_area(s.vertices);
            } else {
                // (1/2) * integral of h * (h + h'') dtheta
                auto f = [&](double th) {
                    SupportJet j = detail::trig_jet(s, th);
                    return j.h * j.curvature_radius();
                };
                return 0.5 * periodic_integral(f, 1e-13);
            }
        },
        body.shape);
}

inline ConvexBody polar(const ConvexBody& body) {
    return std::visit(
        [&](const auto& s) -> ConvexBody {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                if (!(s.radius > 0.0)) throw domain_error("polar: empty interior");
                return {Ball{1.0 / s.radius, s.dim}, ""};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {Ellipse{1.0 / s.a, 1.0 / s.b}, ""};
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return {Polygon{polygon_polar_vertices(s.vertices)}, ""};
            } else {
                throw unsupported_variant(
                    "polar: no closed form for trigonometric support bodies");
            }
        },
        body.shape);
}

// |K°| without materializing the polar: (1/2) * integral of h(v)^{-2} dphi.
inline double polar_volume(const ConvexBody& body) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return unit_ball_volume(s.dim) * std::pow(s.radius, -s.dim);
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return pi / (s.a * s.b);
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return polygon_area(polygon_polar_vertices(s.vertices));
            } else {
                auto f = [&](double phi) {
                    double h = detail::trig_jet(s, phi).h;
                    return 1.0 / (h * h);
                };
                return 0.5 * periodic_integral(f, 1e-13);
            }
        },
        body.shape);
}

inline Vec2 centroid(const ConvexBody& body) {
    return std::visit(
        [&](const auto& s) -> Vec2 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball> || std::is_same_v<T, Ellipse>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return polygon_centroid(s.vertices);
            } else {
                // c_i = (1/(3|K|)) * integral of x_i <x,N> dmu
                auto comp = [&](int i) {
                    return periodic_integral(
                        [&](double th) {
                            SupportJet j = detail::trig_jet(s, th);
                            Vec2 x = j.h * unit_vector(th) + j.dh * unit_vector(th).perp();
                            return (i == 0 ? x.x : x.y) * j.h * j.curvature_radius();
                        },
                        1e-13);
                };
                double vol = volume(ConvexBody{s, ""});
                return Vec2{comp(0), comp(1)} / (3.0 * vol);
            }
        },
        body.shape);
}

// Rough diameter bound used for centering warnings.
inline double body_scale(const ConvexBody& body) {
    double m = 0.0;
    for (int i = 0; i < 64; ++i)
        m = std::max(m, support_theta(body, 2.0 * pi * i / 64.0));
    return 2.0 * m;
}

// Warning text when the centroid is measurably off the origin; the cap and
// entropy identities are only claimed for centered bodies.
inline std::optional<std::string> centering_warning(const ConvexBody& body) {
    Vec2 c = centroid(body);
    double off = c.norm();
    if (off > 1e-6 * body_scale(body))
        return "centroid is off the origin by " + std::to_string(off) +
               "; entropy identities assume a centered body";
    return std::nullopt;
}

// Extremes (r, R) of the principal curvature radius over the boundary.
inline std::pair<double, double> principal_radii_extremes(const ConvexBody& body) {
    if (!is_smooth(body))
        throw unsupported_variant("principal_radii_extremes: body is not C2+");
    if (const Ball* b = std::get_if<Ball>(&body.shape)) {
        detail::require_planar(*b, "principal_radii_extremes");
        return {b->radius, b->radius};
    }
    const int n = 1 << 14;
    double lo = inf, hi = -inf;
    for (int i = 0; i < n; ++i) {
        double rc = support_jet(body, 2.0 * pi * i / n).curvature_radius();
        lo = std::min(lo, rc);
        hi = std::max(hi, rc);
    }
    if (!(lo > 0.0)) throw domain_error("principal_radii_extremes: body is not C2+");
    return {lo, hi};
}

// Cone-measure densities at the boundary point with outer normal u:
//   p = kappa / (<x,N>^n * n|K°|)   (cone measure of K° pulled to dK)
//   q = <x,N> / (n|K|)              (cone measure of K)
struct ConeDensities {
    double p = 0.0;
    double q = 0.0;
};

inline ConeDensities cone_densities(const ConvexBody& body, const Direction& u) {
    BoundaryPoint bp = boundary_point(body, u);
    double volK = volume(body);
    double volP = polar_volume(body);
    ConeDensities d;
    d.p = bp.curvature / (bp.support * bp.support * 2.0 * volP);
    d.q = bp.support / (2.0 * volK);
    return d;
}

// ---------------------------------------------------------------------------
// Factories with validation
// ---------------------------------------------------------------------------

inline ConvexBody make_ball(double r, int dim = 2) {
    if (!(r > 0.0)) throw input_error("ball: radius must be positive");
    if (dim < 2) throw input_error("ball: dimension must be >= 2");
    return {Ball{r, dim}, ""};
}

inline ConvexBody make_ellipse(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw input_error("ellipse: semi-axes must be positive");
    return {Ellipse{a, b}, ""};
}

inline ConvexBody make_polygon(std::vector<Vec2> verts) {
    if (verts.size() < 3) throw input_error("polygon: need at least 3 vertices");
    double area = polygon_area(verts);
    if (!(area > 0.0)) throw input_error("polygon: vertices must run counterclockwise");
    double scale2 = 0.0;
    for (const Vec2& v : verts) scale2 = std::max(scale2, v.norm2());
    size_t n = verts.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = verts[i], b = verts[(i + 1) % n], c = verts[(i + 2) % n];
        if (cross(b - a, c - b) <= 1e-12 * scale2)
            throw input_error("polygon: vertices must be strictly convex");
        Vec2 e = b - a;
        Vec2 nrm{e.y, -e.x};
        if (dot(a, nrm) <= 1e-12 * std::sqrt(scale2) * nrm.norm())
            throw domain_error("polygon: origin must be strictly inside");
    }
    return {Polygon{std::move(verts)}, ""};
}

inline ConvexBody make_trig(double c0, std::vector<double> cs, std::vector<double> ss) {
    TrigSupport t{c0, std::move(cs), std::move(ss)};
    const int n = 1 << 13;
    for (int i = 0; i < n; ++i) {
        SupportJet j = detail::trig_jet(t, 2.0 * pi * i / n);
        if (!(j.h > 0.0))
            throw domain_error("trig body: support function must be positive (origin interior)");
        if (!(j.curvature_radius() > 0.0))
            throw domain_error("trig body: h + h'' must stay positive (C2+)");
    }
    return {std::move(t), ""};
}

inline ConvexBody unit_square() {
    return make_polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
}

}  // namespace meanwidth
