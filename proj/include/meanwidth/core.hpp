// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace meanwidth {

inline constexpr double pi = std::numbers::pi;
inline constexpr double inf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Error taxonomy. Everything user-facing throws one of these; the CLI maps
// them to exit codes (validation -> 1, numeric -> 2, io -> 3).
// ---------------------------------------------------------------------------

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_variant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct pole_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a requested threshold t leaves K_f[t] unbounded; carries the
// offending direction angle.
struct threshold_error : std::runtime_error {
    double direction_angle;
    threshold_error(const std::string& msg, double angle)
        : std::runtime_error(msg), direction_angle(angle) {}
};

struct infinite_volume_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Plane vectors
// ---------------------------------------------------------------------------

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    double angle() const { return std::atan2(y, x); }
    // counterclockwise quarter turn
    constexpr Vec2 perp() const { return {-y, x}; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline Vec2 unit_vector(double phi) { return {std::cos(phi), std::sin(phi)}; }

// Unit direction on S^1; constructor enforces the normalization invariant.
struct Direction {
    Vec2 v;

    explicit Direction(Vec2 u) : v(u) {
        if (std::abs(u.norm() - 1.0) > 1e-12)
            throw input_error("direction is not a unit vector");
    }
    explicit Direction(double phi) : v(unit_vector(phi)) {}

    double angle() const { return v.angle(); }
};

inline Vec2 normalized(Vec2 v) {
    double n = v.norm();
    if (n == 0.0) throw input_error("cannot normalize the zero vector");
    return v / n;
}

// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double phi) {
    double w = std::fmod(phi, 2.0 * pi);
    if (w < 0.0) w += 2.0 * pi;
    return w;
}

// ---------------------------------------------------------------------------
// Shared numerics
// ---------------------------------------------------------------------------

// Volume of the n-dimensional Euclidean unit ball.
inline double unit_ball_volume(int n) {
    if (n < 0) throw input_error("unit_ball_volume: n must be >= 0");
    return std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

// Surface measure of S^{n-1} (omega(S^1) = 2*pi, omega(S^2) = 4*pi).
inline double sphere_surface(int n) {
    if (n < 1) throw input_error("sphere_surface: n must be >= 1");
    return n * unit_ball_volume(n);
}

// Fixed-tree pairwise sum: the result depends only on the element order,
// never on thread count, and carries an O(log n) rounding error bound.
inline double pairwise_sum(std::span<const double> xs) {
    size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    size_t half = n / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
    return pairwise_sum(std::span<const double>(xs));
}

}  // namespace meanwidth
