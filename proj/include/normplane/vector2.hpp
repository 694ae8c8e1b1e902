#pragma once

#include <cmath>
#include <string>

#include "normplane/errors.hpp"

namespace normplane {

// Point of the plane. Components are plain binary64; every operation in the
// library rejects NaN/infinity at its boundary.
struct Vector2 {
    double u = 0.0;
    double v = 0.0;

    constexpr Vector2() = default;
    constexpr Vector2(double u_, double v_) : u(u_), v(v_) {}

    [[nodiscard]] bool finite() const { return std::isfinite(u) && std::isfinite(v); }
    [[nodiscard]] bool is_zero() const { return u == 0.0 && v == 0.0; }

    friend constexpr Vector2 operator+(Vector2 a, Vector2 b) { return {a.u + b.u, a.v + b.v}; }
    friend constexpr Vector2 operator-(Vector2 a, Vector2 b) { return {a.u - b.u, a.v - b.v}; }
    friend constexpr Vector2 operator-(Vector2 a) { return {-a.u, -a.v}; }
    friend constexpr Vector2 operator*(double s, Vector2 a) { return {s * a.u, s * a.v}; }
    friend constexpr Vector2 operator*(Vector2 a, double s) { return s * a; }
    friend constexpr bool operator==(Vector2 a, Vector2 b) { return a.u == b.u && a.v == b.v; }
};

// z-component of the cross product; positive when b lies counterclockwise of a.
constexpr double cross(Vector2 a, Vector2 b) { return a.u * b.v - a.v * b.u; }

constexpr double dot(Vector2 a, Vector2 b) { return a.u * b.u + a.v * b.v; }

inline double euclidean_length(Vector2 a) { return std::hypot(a.u, a.v); }

inline void require_finite(Vector2 x, const char* where) {
    if (!x.finite()) {
        throw DomainError(std::string(where) + ": vector has non-finite components");
    }
}

inline std::string to_string(Vector2 x) {
    return "(" + std::to_string(x.u) + ", " + std::to_string(x.v) + ")";
}

}  // namespace normplane
