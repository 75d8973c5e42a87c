#pragma once

#include "eds/scalar.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace eds {

struct EvalPoint {
    std::map<std::string, double> coords;
    std::map<std::string, Rational> params;
    std::string str() const;
};

// Auxiliary coordinates missing from p.coords are computed from their
// definitions. Fractional powers need positive bases (DomainError otherwise).
double eval(const ScalarExpr& e, const EvalPoint& p, const Chart& chart);
// Sum of absolute term values, the scale for relative residuals.
double eval_magnitude(const ScalarExpr& e, const EvalPoint& p, const Chart& chart);

struct Sampler {
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    // Rational k/1000 with k uniform in [500, 1500].
    double coordinate();
    Rational parameter();  // from {-2, -1, 1, ..., 6}
    std::mt19937_64 rng;
};

// Draws a point covering every free parameter and coordinate of the given
// expressions. Parameters listed in `fixed` keep their values; the rest come
// from {-2, -1, 1, ..., 6}, redrawn until every disequality holds.
EvalPoint sample_point(const std::vector<ScalarExpr>& exprs, const AssumptionSet& a, const Chart& chart,
                       Sampler& s, const std::map<std::string, Rational>& fixed = {});

struct NumericReport {
    bool passed = true;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    double worst = 0;  // worst relative residual
    std::string worst_sample;
};

constexpr double kAbsoluteFloor = 1e-12;

NumericReport random_identity_check(const ScalarExpr& lhs, const ScalarExpr& rhs, const AssumptionSet& a,
                                    const Chart& chart, int trials, std::uint64_t seed, double tol,
                                    const std::map<std::string, Rational>& fixed = {});

}  // namespace eds
