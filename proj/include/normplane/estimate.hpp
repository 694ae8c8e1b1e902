#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "normplane/vector2.hpp"

namespace normplane {

// A witness-backed supremum/infimum estimate. For supremum-type constants the
// value is the objective evaluated at the stored witness, hence a certified
// lower bound of the true constant; for the modulus of convexity (an
// infimum) it is an upper bound.
struct ConstantEstimate {
    std::string constant;
    double value = 0.0;
    double parameter = std::numeric_limits<double>::quiet_NaN();  // t, eps, tau, eta; NaN if none
    Vector2 witness_x;
    Vector2 witness_y;
    double theta_x = 0.0;
    double theta_y = 0.0;
    double rho = 0.0;
    int grid = 0;
    double refine_tol = 0.0;
    bool boundary_flag = false;
};

struct SweepTable {
    std::string constant_name;
    std::vector<double> t_grid;
    std::vector<ConstantEstimate> values;
};

enum class ConstantKind {
    L,
    Gamma,
    Cnj,
    CnjFromL,
    CnjPrime,
    CnjDoublePrime,
    James,
    Delta,
    Rho,
    Rho1FromDelta,
};

inline std::string constant_name(ConstantKind kind) {
    switch (kind) {
        case ConstantKind::L: return "L";
        case ConstantKind::Gamma: return "gamma";
        case ConstantKind::Cnj: return "cnj";
        case ConstantKind::CnjFromL: return "cnj-from-L";
        case ConstantKind::CnjPrime: return "cnj-prime";
        case ConstantKind::CnjDoublePrime: return "cnj-double-prime";
        case ConstantKind::James: return "james";
        case ConstantKind::Delta: return "delta";
        case ConstantKind::Rho: return "rho";
        case ConstantKind::Rho1FromDelta: return "rho1-from-delta";
    }
    return "?";
}

inline std::optional<ConstantKind> parse_constant_name(const std::string& name) {
    if (name == "L" || name == "l") return ConstantKind::L;
    if (name == "gamma") return ConstantKind::Gamma;
    if (name == "cnj") return ConstantKind::Cnj;
    if (name == "cnj-from-L" || name == "cnj-from-l" || name == "cnj_from_L") return ConstantKind::CnjFromL;
    if (name == "cnj-prime" || name == "cnj'") return ConstantKind::CnjPrime;
    if (name == "cnj-double-prime" || name == "cnj''") return ConstantKind::CnjDoublePrime;
    if (name == "james" || name == "J") return ConstantKind::James;
    if (name == "delta") return ConstantKind::Delta;
    if (name == "rho") return ConstantKind::Rho;
    if (name == "rho1-from-delta") return ConstantKind::Rho1FromDelta;
    return std::nullopt;
}

// Domain of the scalar parameter, when the constant has one: t in [0,1] for
// L and gamma, eps in [0,2] for delta, tau >= 0 for rho.
inline bool constant_has_parameter(ConstantKind kind) {
    return kind == ConstantKind::L || kind == ConstantKind::Gamma || kind == ConstantKind::Delta ||
           kind == ConstantKind::Rho;
}

}  // namespace normplane
