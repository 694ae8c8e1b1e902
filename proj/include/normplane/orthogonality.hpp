#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "normplane/errors.hpp"
#include "normplane/normed_plane.hpp"
#include "normplane/vector2.hpp"

namespace normplane {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

// ||x+y|| - ||x-y||; zero exactly on isosceles-orthogonal pairs.
inline double iso_defect(const NormedPlane& plane, Vector2 x, Vector2 y) {
    return plane.norm(x + y) - plane.norm(x - y);
}

// ||x-y||^2 - ||x||^2 - ||y||^2; zero exactly on Pythagorean-orthogonal pairs.
inline double pyth_defect(const NormedPlane& plane, Vector2 x, Vector2 y) {
    const double d = plane.norm(x - y);
    const double nx = plane.norm(x);
    const double ny = plane.norm(y);
    return d * d - nx * nx - ny * ny;
}

enum class OrthoKind { Isosceles, Pythagorean };

inline double ortho_defect_tolerance(const NormedPlane& plane, Vector2 x, Vector2 y) {
    return 1e-10 * (1.0 + plane.norm(x) + plane.norm(y));
}

// A pair on (or numerically on) the orthogonality constraint manifold,
// together with the search parameters that produced it. rho is +infinity for
// the degenerate x = 0 family.
struct OrthoPair {
    Vector2 x;
    Vector2 y;
    double defect = 0.0;
    OrthoKind kind = OrthoKind::Isosceles;
    double theta_x = 0.0;
    double theta_y = 0.0;
    double rho = 0.0;
};

inline OrthoPair make_iso_pair(const NormedPlane& plane, Vector2 x, Vector2 y,
                               double theta_x, double theta_y, double rho) {
    if (x.is_zero() && y.is_zero()) {
        throw InternalConsistencyError("make_iso_pair: (x, y) = (0, 0) is not admitted");
    }
    OrthoPair pair{x, y, iso_defect(plane, x, y), OrthoKind::Isosceles, theta_x, theta_y, rho};
    if (std::fabs(pair.defect) > ortho_defect_tolerance(plane, x, y)) {
        throw InternalConsistencyError("make_iso_pair: pair violates the defect tolerance");
    }
    return pair;
}

namespace detail {

inline std::vector<Vector2> unit_table(const NormedPlane& plane, int scan) {
    std::vector<Vector2> table(static_cast<std::size_t>(scan));
    for (int i = 0; i < scan; ++i) {
        table[static_cast<std::size_t>(i)] = plane.unit_vector(kTwoPi * i / scan);
    }
    return table;
}

// Approximate zeros of a continuous function on [0, 2pi) from grid values:
// entries within zero_tol count directly (plateaus of polyhedral norms),
// strict sign changes are bisected via f until narrower than theta_tol.
template <typename F>
std::vector<double> roots_from_scan(const std::vector<double>& values, F&& f, double zero_tol,
                                    double theta_tol) {
    const int scan = static_cast<int>(values.size());
    std::vector<double> roots;
    for (int i = 0; i < scan; ++i) {
        const int j = (i + 1) % scan;
        const double fi = values[static_cast<std::size_t>(i)];
        const double fj = values[static_cast<std::size_t>(j)];
        if (std::fabs(fi) <= zero_tol) {
            roots.push_back(kTwoPi * i / scan);
            continue;
        }
        if (std::fabs(fj) <= zero_tol) continue;  // handled when the loop reaches j
        if ((fi > 0.0) == (fj > 0.0)) continue;
        double lo = kTwoPi * i / scan;
        double hi = lo + kTwoPi / scan;
        double flo = fi;
        while (hi - lo > theta_tol) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double root = 0.5 * (lo + hi);
        if (root >= kTwoPi) root -= kTwoPi;
        roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<double> dedupe_circular(std::vector<double> angles, double tol, double period) {
    if (angles.empty()) return angles;
    std::vector<double> out;
    for (double a : angles) {
        if (!out.empty() && a - out.back() <= tol) continue;
        out.push_back(a);
    }
    // wraparound duplicate: last ~ first + period
    if (out.size() > 1 && (out.front() + period) - out.back() <= tol) out.pop_back();
    return out;
}

// Root angles of the isosceles defect for y = rho * unit(theta), reduced to
// [0, pi). The defect is odd under theta -> theta + pi, so this is lossless.
// `units` may hold precomputed unit vectors for the scan grid.
inline std::vector<double> iso_root_angles(const NormedPlane& plane, Vector2 x, double rho,
                                           int scan, double theta_tol,
                                           const std::vector<Vector2>* units = nullptr) {
    const double zero_tol = 1e-12 * (1.0 + rho);
    auto defect = [&](double theta) { return iso_defect(plane, x, rho * plane.unit_vector(theta)); };
    std::vector<double> values(static_cast<std::size_t>(scan));
    if (units != nullptr && static_cast<int>(units->size()) == scan) {
        for (int i = 0; i < scan; ++i) {
            values[static_cast<std::size_t>(i)] =
                iso_defect(plane, x, rho * (*units)[static_cast<std::size_t>(i)]);
        }
    } else {
        for (int i = 0; i < scan; ++i) {
            values[static_cast<std::size_t>(i)] = defect(kTwoPi * i / scan);
        }
    }
    std::vector<double> roots = roots_from_scan(values, defect, zero_tol, theta_tol);
    for (double& r : roots) {
        if (r >= kPi) r -= kPi;
    }
    std::sort(roots.begin(), roots.end());
    return dedupe_circular(std::move(roots), 1e-9, kPi);
}

}  // namespace detail

// All y with ||y|| = rho and x orthogonal to y in the isosceles sense, found
// by a sign scan over `scan` directions plus bisection. The result is closed
// under y -> -y. rho = 0 yields the single solution y = 0.
inline std::vector<Vector2> find_iso_orthogonal(const NormedPlane& plane, Vector2 x, double rho,
                                                int scan = 720, double theta_tol = 1e-12) {
    require_finite(x, "find_iso_orthogonal");
    if (std::fabs(plane.norm(x) - 1.0) > 1e-10) {
        throw DomainError("find_iso_orthogonal: x must be a unit vector (within 1e-10)");
    }
    if (!(rho >= 0.0)) throw DomainError("find_iso_orthogonal: rho must be >= 0");
    if (rho == 0.0) return {Vector2{0.0, 0.0}};

    const std::vector<double> angles = detail::iso_root_angles(plane, x, rho, scan, theta_tol);
    if (angles.empty()) {
        // the defect changes sign between theta and theta + pi, so a norm
        // always admits solutions
        throw InternalConsistencyError("find_iso_orthogonal: no solution found for rho > 0");
    }
    std::vector<Vector2> result;
    result.reserve(2 * angles.size());
    for (double a : angles) {
        const Vector2 y = rho * plane.unit_vector(a);
        result.push_back(y);
        result.push_back(-y);
    }
    return result;
}

// Samples of the isosceles constraint manifold: for every direction theta_x
// on an n_theta grid of the full circle and every rho in rho_grid, the pairs
// (x, y) with ||x|| = 1, ||y|| = rho solved from the defect, plus the
// degenerate x = 0 family. Order is deterministic: theta_x major, then rho,
// then theta_y, with the x = 0 family appended last.
inline std::vector<OrthoPair> sample_constraint_manifold(const NormedPlane& plane, int n_theta,
                                                         std::vector<double> rho_grid,
                                                         int scan = 720) {
    if (n_theta < 90) throw DomainError("sample_constraint_manifold: n_theta must be >= 90");
    if (rho_grid.empty()) throw DomainError("sample_constraint_manifold: rho grid is empty");
    std::sort(rho_grid.begin(), rho_grid.end());
    rho_grid.erase(std::unique(rho_grid.begin(), rho_grid.end()), rho_grid.end());
    if (!(rho_grid.front() == 0.0)) {
        throw DomainError("sample_constraint_manifold: rho grid must include 0");
    }
    if (!(rho_grid.back() > 1.0)) {
        throw DomainError("sample_constraint_manifold: rho grid must include values > 1");
    }
    for (double r : rho_grid) {
        if (!std::isfinite(r) || r < 0.0) {
            throw DomainError("sample_constraint_manifold: rho values must be finite and >= 0");
        }
    }

    const std::vector<Vector2> units = detail::unit_table(plane, scan);
    std::vector<OrthoPair> samples;
    samples.reserve(static_cast<std::size_t>(n_theta) * (2 * rho_grid.size() + 1));
    for (int i = 0; i < n_theta; ++i) {
        const double theta_x = kTwoPi * i / n_theta;
        const Vector2 x = plane.unit_vector(theta_x);
        for (double rho : rho_grid) {
            if (rho == 0.0) {
                samples.push_back(make_iso_pair(plane, x, {0.0, 0.0}, theta_x, 0.0, 0.0));
                continue;
            }
            for (double theta_y : detail::iso_root_angles(plane, x, rho, scan, 1e-12, &units)) {
                const Vector2 y = rho * plane.unit_vector(theta_y);
                samples.push_back(make_iso_pair(plane, x, y, theta_x, theta_y, rho));
                samples.push_back(make_iso_pair(plane, x, -y, theta_x, theta_y + kPi, rho));
            }
        }
    }
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_theta; ++i) {
        const double theta = kTwoPi * i / n_theta;
        samples.push_back(make_iso_pair(plane, {0.0, 0.0}, plane.unit_vector(theta), theta, theta, inf));
    }
    return samples;
}

}  // namespace normplane
