// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meanwidth/body.hpp"
#include "meanwidth/core.hpp"

namespace meanwidth {

// ---------------------------------------------------------------------------
// Weight functions f on the polar body K°.
//
// Every weight used here factors as f(s*v) = s^radial_exponent * angular(phi)
// for unit v = v(phi): power laws, halfspace-piecewise weights, constants and
// the designed weights (which are constant along rays by construction). The
// cap integrals exploit this by integrating the radial factor in closed form.
// ---------------------------------------------------------------------------

struct Weight {
    std::function<double(double)> angular;   // factor on the unit circle
    double radial_exponent = 0.0;            // f(s v) = s^e * angular(phi)
    std::optional<double> homogeneity;       // declared degree alpha, when known
    std::optional<double> positivity;        // known lower bound c > 0 on K°
    std::vector<double> split_angles;        // angular discontinuities in [0, 2pi)
    // structure tags used by exact integration paths
    std::optional<std::pair<double, double>> halfspace_values;  // top, bottom
    std::optional<std::pair<double, double>> power;             // beta, amplitude
    std::string spec;

    double operator()(Vec2 xi) const {
        double s = xi.norm();
        double a = angular(xi.angle());
        if (radial_exponent == 0.0) return a;
        return std::pow(s, radial_exponent) * a;
    }
};

// f_beta(xi) = amplitude * ||xi||^{-beta}, homogeneous of degree -beta.
inline Weight power_weight(double beta, double amplitude = 1.0) {
    if (!(amplitude >= 0.0)) throw input_error("power weight: amplitude must be >= 0");
    Weight w;
    w.angular = [amplitude](double) { return amplitude; };
    w.radial_exponent = -beta;
    w.homogeneity = -beta;
    if (beta == 0.0 && amplitude > 0.0) w.positivity = amplitude;
    w.power = std::make_pair(beta, amplitude);
    w.spec = beta == 0.0 ? "const:" + std::to_string(amplitude)
                         : "power:beta=" + std::to_string(beta);
    return w;
}

inline Weight constant_weight(double c) { return power_weight(0.0, c); }

// top_value on {xi_2 >= 0}, bottom_value below.
inline Weight piecewise_halfspace_weight(double top_value, double bottom_value) {
    if (!(top_value >= 0.0 && bottom_value >= 0.0))
        throw input_error("piecewise weight: values must be >= 0");
    Weight w;
    w.angular = [top_value, bottom_value](double phi) {
        return std::sin(phi) >= 0.0 ? top_value : bottom_value;
    };
    w.radial_exponent = 0.0;
    w.split_angles = {0.0, pi};
    if (top_value > 0.0 && bottom_value > 0.0)
        w.positivity = std::min(top_value, bottom_value);
    w.halfspace_values = std::make_pair(top_value, bottom_value);
    w.spec = "piecewise:top=" + std::to_string(top_value) +
             ",bottom=" + std::to_string(bottom_value);
    return w;
}

// Largest ||xi|| over K°, used to turn power-law decay into a lower bound.
inline double polar_circumradius(const ConvexBody& body) {
    double hmin = inf;
    const int n = 1 << 12;
    for (int i = 0; i < n; ++i) hmin = std::min(hmin, support_theta(body, 2.0 * pi * i / n));
    return 1.0 / hmin;
}

// Lower bound for f on K° when one is derivable; the boundedness hypothesis
// f >= c > 0 becomes machine-checkable through this.
inline std::optional<double> weight_lower_bound(const Weight& w, double polar_circum) {
    if (w.positivity) return w.positivity;
    if (w.power) {
        auto [beta, amp] = *w.power;
        if (beta >= 0.0 && amp > 0.0) return amp * std::pow(polar_circum, -beta);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Designed weights: given a positive boundary density g on dK, build f on K°
// with f(y(x)) = [<x,N>^2 kappa^{-1/(n+1)} / g(x)]^{(n+1)/2}, extended as a
// constant along rays. The volume-expansion limit for this f integrates g.
//
// The point y(x) in dK° and x share their ray direction, so the angular
// factor at polar angle phi is just the formula above at the boundary point
// of K with normal angle phi.
// ---------------------------------------------------------------------------

inline Weight designed_weight(const ConvexBody& body,
                              std::function<double(const BoundaryPoint&)> target,
                              std::string spec_name = "designed") {
    if (!is_smooth(body)) throw unsupported_variant("designed weight: body must be C2+");
    auto angular = [body, target](double phi) {
        BoundaryPoint bp = boundary_point(body, Direction(phi));
        double g = target(bp);
        if (!(g > 0.0)) throw domain_error("designed weight: target density must be positive");
        double base = bp.support * bp.support * std::pow(bp.curvature, -1.0 / 3.0) / g;
        return std::pow(base, 1.5);
    };
    // validate positivity of g and record the weight's own lower bound
    double fmin = inf;
    const int n = 2048;
    for (int i = 0; i < n; ++i) fmin = std::min(fmin, angular(2.0 * pi * i / n));
    Weight w;
    w.angular = angular;
    w.radial_exponent = 0.0;
    w.homogeneity = 0.0;  // constant along rays
    w.positivity = fmin;
    w.spec = std::move(spec_name);
    return w;
}

// Designed weight whose limit integrand is the L_p-affine surface area
// integrand kappa^{p/(n+p)} / <x,N>^{n(p-1)/(n+p)}.
inline Weight designed_asp_weight(const ConvexBody& body, double p) {
    if (p == -2.0) throw pole_error("asp target: p = -n is a pole");
    auto g = [p](const BoundaryPoint& bp) {
        if (std::isinf(p)) return bp.curvature / (bp.support * bp.support);
        return std::pow(bp.curvature, p / (2.0 + p)) *
               std::pow(bp.support, -2.0 * (p - 1.0) / (2.0 + p));
    };
    return designed_weight(body, g, "designed:asp:p=" + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Entropy weights: the pair of designed weights whose limits produce the
// relative entropies of the cone measures, offset by 2n log(R/r) so the
// target densities stay strictly positive. For a ball r = R and the
// construction degenerates (identities hold as 0 = 0).
// ---------------------------------------------------------------------------

struct EntropyWeights {
    bool degenerate = false;
    std::optional<Weight> ent1;
    std::optional<Weight> ent2;
    double target1 = 0.0;  // integral of g1 over dK = n|K°|[D_KL(P||Q) + 2n log(R/r)]
    double target2 = 0.0;  // integral of g2 over dK = n|K|[2n log(R/r) - D_KL(Q||P)]
    double radii_ratio = 1.0;  // R/r
};

inline EntropyWeights entropy_weights(const ConvexBody& body) {
    if (!is_smooth(body)) throw unsupported_variant("entropy weights: body must be C2+");
    auto [r, R] = principal_radii_extremes(body);
    EntropyWeights out;
    out.radii_ratio = R / r;
    if (R - r <= 1e-9 * R) {
        out.degenerate = true;
        return out;
    }
    double volK = volume(body);
    double volP = polar_volume(body);
    double ratio4 = std::pow(R / r, 4.0);
    auto log_arg = [=](const BoundaryPoint& bp) {
        return ratio4 * volK * bp.curvature / (volP * std::pow(bp.support, 3.0));
    };
    auto g1 = [=](const BoundaryPoint& bp) {
        return bp.curvature / (bp.support * bp.support) * std::log(log_arg(bp));
    };
    auto g2 = [=](const BoundaryPoint& bp) { return bp.support * std::log(log_arg(bp)); };
    out.ent1 = designed_weight(body, g1, "designed:ent1");
    out.ent2 = designed_weight(body, g2, "designed:ent2");
    auto boundary_integral = [&](auto&& g) {
        return periodic_integral(
            [&](double th) {
                BoundaryPoint bp = boundary_point(body, Direction(th));
                return g(bp) / bp.curvature;  // dmu = (h + h'') dtheta
            },
            1e-12);
    };
    out.target1 = boundary_integral(g1);
    out.target2 = boundary_integral(g2);
    return out;
}

}  // namespace meanwidth
