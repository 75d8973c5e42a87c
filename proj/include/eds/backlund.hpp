#pragma once

#include "eds/numeric.hpp"
#include "eds/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace eds {

// y_x = F, y_t = G over solutions of a PDE; `potential` is the residual of
// the equation satisfied by y once u is eliminated.
struct BacklundSystem {
    std::string name;
    ScalarExpr F;
    ScalarExpr G;
    std::optional<ScalarExpr> potential;
};

struct Compatibility {
    ScalarExpr cross;       // D_t F - D_x G
    ScalarExpr multiplier;  // coefficient of the PDE residual
    ScalarExpr remainder;   // cross - multiplier * pde
    Truth remainder_zero = Truth::yes;
};

// `pde` must be linear in u_t with constant u_t coefficient, as produced by eliminate().
Compatibility compatibility_residual(const BacklundSystem& b, const ScalarExpr& pde, const AssumptionSet& a,
                                     const Chart& chart, const std::string& primary = "u");

struct PotentialCheckOptions {
    std::map<std::string, Rational> params;
    int trials = 20;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::string primary = "u";
    std::string potential = "y";
};

// Samples y_x > 0, y_xx, y_xxx, sets u = y_x^(1/(n+1)) with its x-derivatives
// by the chain rule, takes y_t from G and evaluates the potential residual.
NumericReport verify_potential_equation(const BacklundSystem& b, const Chart& chart, const PotentialCheckOptions& o);

}  // namespace eds
