#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <vector>

namespace normplane::detail {

struct GridBest {
    double value = -std::numeric_limits<double>::infinity();
    long index = -1;
};

// Deterministic argmax over [0, n): the first index attaining the maximum
// wins. Large scans are split into chunks evaluated on worker threads and
// merged in chunk order, so the result is independent of the thread count.
template <typename F>
GridBest grid_argmax(long n, const F& eval) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned chunks = static_cast<unsigned>(std::min<long>(hw, 8));
    auto scan_range = [&eval](long lo, long hi) {
        GridBest best;
        for (long i = lo; i < hi; ++i) {
            const double v = eval(i);
            if (v > best.value) {
                best.value = v;
                best.index = i;
            }
        }
        return best;
    };
    if (chunks == 1 || n < 1 << 14) return scan_range(0, n);

    std::vector<GridBest> partial(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        const long lo = n * c / chunks;
        const long hi = n * (c + 1) / chunks;
        workers.emplace_back([&partial, &scan_range, c, lo, hi] { partial[c] = scan_range(lo, hi); });
    }
    for (auto& w : workers) w.join();
    GridBest best;
    for (const GridBest& p : partial) {
        if (p.value > best.value) best = p;
    }
    return best;
}

// Golden-section maximization on [lo, hi]; keeps the best point seen, so the
// result never falls below the incoming incumbent even off unimodal brackets.
template <typename F>
void golden_max(const F& f, double lo, double hi, double tol, double& best_x, double& best_f) {
    constexpr double invphi = 0.6180339887498948482;
    auto consider = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    consider(c, fc);
    consider(d, fd);
    while (hi - lo > tol) {
        if (fc < fd) {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
            consider(d, fd);
        } else {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
            consider(c, fc);
        }
    }
}

// Compass/pattern refinement over up to 3 coordinates. Probes every nonzero
// direction in {-1,0,1}^dims so diagonal ridges do not stall the search.
// Coordinates are clamped to [lo, hi]; pass -inf/+inf for unbounded ones.
template <typename F>
void compass_max(const F& f, int dims, std::array<double, 3>& x, std::array<double, 3> lo,
                 std::array<double, 3> hi, double h0, double tol, double& best_f) {
    double h = h0;
    while (h > tol) {
        bool improved = false;
        std::array<int, 3> step{0, 0, 0};
        // enumerate {-1,0,1}^dims deterministically
        const int total = static_cast<int>(std::pow(3.0, dims));
        for (int code = 0; code < total; ++code) {
            int rest = code;
            bool all_zero = true;
            for (int d = 0; d < dims; ++d) {
                step[static_cast<std::size_t>(d)] = rest % 3 - 1;
                rest /= 3;
                if (step[static_cast<std::size_t>(d)] != 0) all_zero = false;
            }
            if (all_zero) continue;
            std::array<double, 3> trial = x;
            for (int d = 0; d < dims; ++d) {
                const auto di = static_cast<std::size_t>(d);
                trial[di] = std::clamp(trial[di] + step[di] * h, lo[di], hi[di]);
            }
            if (trial == x) continue;
            const double ft = f(trial);
            if (ft > best_f) {
                best_f = ft;
                x = trial;
                improved = true;
            }
        }
        if (!improved) h *= 0.5;
    }
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

}  // namespace normplane::detail
