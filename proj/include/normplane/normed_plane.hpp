#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "normplane/errors.hpp"
#include "normplane/norm_spec.hpp"
#include "normplane/vector2.hpp"

namespace normplane {

struct ValidationFailure {
    std::string kind;  // "homogeneity" | "symmetry" | "triangle"
    Vector2 x;
    Vector2 y;       // triangle check only
    double lambda;   // homogeneity check only
    double lhs;
    double rhs;
};

struct ValidationReport {
    bool passed = true;
    int samples = 0;
    std::optional<ValidationFailure> first_failure;
};

namespace detail {

inline double lp_norm(double p, Vector2 x) {
    const double a = std::fabs(x.u);
    const double b = std::fabs(x.v);
    if (p == 1.0) return a + b;
    if (p == 2.0) return std::sqrt(a * a + b * b);
    const double m = std::max(a, b);
    if (m == 0.0) return 0.0;
    const double s = std::min(a, b) / m;
    if (p == 3.0) return m * std::cbrt(1.0 + s * s * s);
    if (p == 4.0) {
        const double s2 = s * s;
        return m * std::sqrt(std::sqrt(1.0 + s2 * s2));
    }
    return m * std::pow(1.0 + std::pow(s, p), 1.0 / p);
}

inline double linf_norm(Vector2 x) { return std::max(std::fabs(x.u), std::fabs(x.v)); }

// true if b is strictly counterclockwise of a in the order starting at `ref`
inline bool angle_less(Vector2 ref, Vector2 a, Vector2 b) {
    auto half = [&](Vector2 z) {
        const double c = cross(ref, z);
        return (c < 0.0 || (c == 0.0 && dot(ref, z) < 0.0)) ? 1 : 0;
    };
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0.0;
}

}  // namespace detail

// A validated two-dimensional normed plane. Construction checks every
// NormSpec invariant and throws ConfigError on violation; after that the
// norm is evaluated without further checks beyond finiteness of the input.
// All methods are const and safe for concurrent use.
class NormedPlane {
public:
    explicit NormedPlane(NormSpec spec, std::string label = "")
        : spec_(std::move(spec)), label_(std::move(label)) {
        if (label_.empty()) label_ = spec_.describe();
        validate_spec();
        if (spec_.family == NormFamily::Polygon) prepare_polygon();
    }

    [[nodiscard]] const NormSpec& spec() const { return spec_; }
    [[nodiscard]] const std::string& label() const { return label_; }

    [[nodiscard]] double norm(Vector2 x) const {
        require_finite(x, "norm");
        switch (spec_.family) {
            case NormFamily::Lp:
                return detail::lp_norm(spec_.p, x);
            case NormFamily::Linf:
                return detail::linf_norm(x);
            case NormFamily::LpLq:
                if (x.u * x.v >= 0.0) {
                    return std::isinf(spec_.p) ? detail::linf_norm(x)
                                               : detail::lp_norm(spec_.p, x);
                }
                return detail::lp_norm(spec_.q, x);
            case NormFamily::Polygon:
                return polygon_gauge(x);
        }
        return 0.0;
    }

    // Euclidean direction theta renormalized to the unit sphere of the plane.
    // 2pi-periodic, and unit_vector(theta + pi) == -unit_vector(theta).
    [[nodiscard]] Vector2 unit_vector(double theta) const {
        if (!std::isfinite(theta)) throw DomainError("unit_vector: theta must be finite");
        const Vector2 w{std::cos(theta), std::sin(theta)};
        const double n = norm(w);
        return {w.u / n, w.v / n};
    }

    // Randomized audit of the norm axioms. Deterministic for a fixed seed.
    [[nodiscard]] ValidationReport validate_norm(int samples, std::uint64_t seed = 0x5eed5eedULL) const {
        if (samples < 100) throw DomainError("validate_norm: samples must be >= 100");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        std::uniform_real_distribution<double> scale(-3.0, 3.0);
        ValidationReport report;
        report.samples = samples;
        for (int i = 0; i < samples; ++i) {
            const Vector2 x{coord(rng), coord(rng)};
            const Vector2 y{coord(rng), coord(rng)};
            const double lambda = scale(rng);
            const double nx = norm(x);
            const double ny = norm(y);

            const double hom_lhs = norm(lambda * x);
            const double hom_rhs = std::fabs(lambda) * nx;
            if (std::fabs(hom_lhs - hom_rhs) > 1e-10 * (1.0 + nx)) {
                report.passed = false;
                report.first_failure = ValidationFailure{"homogeneity", x, y, lambda, hom_lhs, hom_rhs};
                return report;
            }
            const double neg = norm(-x);
            if (neg != nx) {
                report.passed = false;
                report.first_failure = ValidationFailure{"symmetry", x, y, 0.0, neg, nx};
                return report;
            }
            const double tri_lhs = norm(x + y);
            const double tri_rhs = nx + ny;
            if (tri_lhs > tri_rhs + 1e-10) {
                report.passed = false;
                report.first_failure = ValidationFailure{"triangle", x, y, 0.0, tri_lhs, tri_rhs};
                return report;
            }
        }
        return report;
    }

private:
    void validate_spec() {
        switch (spec_.family) {
            case NormFamily::Lp:
                if (!(spec_.p >= 1.0 && spec_.p <= kMaxLpExponent)) {
                    throw ConfigError("lp: p must lie in [1, 64]; use linf for the sup norm");
                }
                break;
            case NormFamily::Linf:
                break;
            case NormFamily::LpLq: {
                const bool p_ok = std::isinf(spec_.p) ||
                                  (spec_.p >= 1.0 && spec_.p <= kMaxLpExponent);
                if (!p_ok) throw ConfigError("lplq: p must lie in [1, 64] or be infinite");
                if (!(spec_.q >= 1.0 && spec_.q <= kMaxLpExponent)) {
                    throw ConfigError("lplq: q must lie in [1, 64]");
                }
                if (!(spec_.q <= spec_.p)) throw ConfigError("lplq: requires q <= p");
                break;
            }
            case NormFamily::Polygon:
                break;  // checked in prepare_polygon
        }
    }

    void prepare_polygon() {
        const auto& vs = spec_.vertices;
        const std::size_t n = vs.size();
        if (n < 4) throw ConfigError("polygon: needs at least 4 vertices");
        for (const Vector2& v : vs) {
            if (!v.finite()) throw ConfigError("polygon: vertex has non-finite components");
            if (v.is_zero()) throw ConfigError("polygon: the origin cannot be a vertex");
        }
        // symmetric under negation
        for (const Vector2& v : vs) {
            const double scale = 1.0 + std::max(std::fabs(v.u), std::fabs(v.v));
            bool found = false;
            for (const Vector2& w : vs) {
                if (std::fabs(w.u + v.u) <= 1e-12 * scale && std::fabs(w.v + v.v) <= 1e-12 * scale) {
                    found = true;
                    break;
                }
            }
            if (!found) throw ConfigError("polygon: vertex set is not symmetric under negation");
        }
        // strictly convex, counterclockwise, origin strictly interior
        for (std::size_t i = 0; i < n; ++i) {
            const Vector2 a = vs[i];
            const Vector2 b = vs[(i + 1) % n];
            const Vector2 c = vs[(i + 2) % n];
            const Vector2 e1 = b - a;
            const Vector2 e2 = c - b;
            const double turn = cross(e1, e2);
            const double turn_scale = euclidean_length(e1) * euclidean_length(e2);
            if (!(turn > 1e-12 * turn_scale)) {
                throw ConfigError("polygon: vertices must be strictly convex in counterclockwise order");
            }
            const double wedge = cross(a, b);
            const double wedge_scale = euclidean_length(a) * euclidean_length(b);
            if (!(wedge > 1e-12 * wedge_scale)) {
                throw ConfigError("polygon: origin must be strictly interior");
            }
        }
        // counterclockwise order with the origin inside means the vertices are
        // already sorted by angle starting from vs[0]; keep them verbatim
        boundary_.assign(vs.begin(), vs.end());
    }

    // Minkowski functional: locate the boundary edge crossed by the ray from
    // the origin through x, then mu(x) = cross(x, b-a) / cross(a, b-a).
    [[nodiscard]] double polygon_gauge(Vector2 x) const {
        if (x.is_zero()) return 0.0;
        const std::size_t n = boundary_.size();
        const Vector2 ref = boundary_[0];
        // binary search for the last vertex not counterclockwise-after x
        std::size_t lo = 0;
        std::size_t hi = n;  // exclusive
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (detail::angle_less(ref, x, boundary_[mid])) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        const Vector2 a = boundary_[lo];
        const Vector2 b = boundary_[(lo + 1) % n];
        const Vector2 e = b - a;
        return cross(x, e) / cross(a, e);
    }

    NormSpec spec_;
    std::string label_;
    std::vector<Vector2> boundary_;
};

// Deterministic generator of valid random polygon specs: symmetric strictly
// convex hulls of seeded random points. Used by verification suites.
inline NormSpec random_polygon_spec(std::uint64_t seed, int half_vertices = 6) {
    if (half_vertices < 2) throw DomainError("random_polygon_spec: need at least 2 half vertices");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle_jitter(0.05, 0.95);
    std::uniform_real_distribution<double> radius(0.6, 1.4);

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles(static_cast<std::size_t>(half_vertices));
        for (auto& a : angles) a = angle_jitter(rng);
        std::sort(angles.begin(), angles.end());
        const double pi = std::acos(-1.0);
        std::vector<Vector2> pts;
        pts.reserve(static_cast<std::size_t>(2 * half_vertices));
        bool spaced = true;
        for (int i = 0; i < half_vertices; ++i) {
            const double th = angles[static_cast<std::size_t>(i)] * pi;
            if (i > 0 && th - angles[static_cast<std::size_t>(i - 1)] * pi < 0.05) spaced = false;
            const double r = radius(rng);
            pts.push_back({r * std::cos(th), r * std::sin(th)});
        }
        if (!spaced) continue;
        const std::size_t half = pts.size();
        for (std::size_t i = 0; i < half; ++i) pts.push_back(-pts[i]);

        // monotone-chain convex hull (strict turns only)
        std::sort(pts.begin(), pts.end(), [](Vector2 a, Vector2 b) {
            return a.u < b.u || (a.u == b.u && a.v < b.v);
        });
        std::vector<Vector2> hull;
        auto build = [&](auto begin, auto end) {
            const std::size_t base = hull.size();
            for (auto it = begin; it != end; ++it) {
                while (hull.size() >= base + 2 &&
                       cross(hull.back() - hull[hull.size() - 2], *it - hull.back()) <= 0.0) {
                    hull.pop_back();
                }
                hull.push_back(*it);
            }
            hull.pop_back();
        };
        build(pts.begin(), pts.end());
        build(pts.rbegin(), pts.rend());
        if (hull.size() < 4) continue;

        NormSpec candidate = NormSpec::polygon(hull);
        try {
            NormedPlane probe(candidate);
            return candidate;
        } catch (const ConfigError&) {
            continue;
        }
    }
    throw InternalConsistencyError("random_polygon_spec: failed to generate a valid polygon");
}

}  // namespace normplane
