#pragma once

#include "eds/form.hpp"

#include <map>
#include <string>
#include <vector>

namespace eds {

// Element of the fraction field of ScalarExpr. Single-term denominators are
// folded into the numerator, so den != 1 only for sums.
struct Fraction {
    ScalarExpr num;
    ScalarExpr den = ScalarExpr(1);

    Fraction() = default;
    Fraction(const ScalarExpr& n) : num(n) {}
    Fraction(const ScalarExpr& n, const ScalarExpr& d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den == ScalarExpr(1); }
    std::string str() const;

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num, den); }
};

Truth is_zero(const Fraction& f, const AssumptionSet& a, const Chart& chart);

using FormVector = std::map<Basis, ScalarExpr, BasisLess>;
using FractionVector = std::map<Basis, Fraction, BasisLess>;

// Row reduction of a spanning set of coefficient vectors over the fraction
// field, tracking how each reduced row combines the inputs. Pivot columns are
// taken in the given column order; monomial pivots are preferred.
class SpanReducer {
public:
    SpanReducer(const std::vector<FormVector>& rows, std::vector<Basis> column_order, const AssumptionSet& a,
                const Chart& chart);

    struct Result {
        std::vector<Fraction> coefficients;  // one per input row
        FractionVector residual;             // nonzero (or undecided) leftovers
        Truth residual_zero = Truth::yes;
    };
    Result reduce(const FormVector& target) const;

    const std::vector<Basis>& pivot_columns() const { return pivot_cols_; }
    std::size_t rank() const { return pivot_rows_.size(); }

private:
    const AssumptionSet& assumptions_;
    const Chart& chart_;
    std::size_t input_count_;
    std::vector<Basis> columns_;
    std::vector<FractionVector> pivot_rows_;
    std::vector<std::vector<Fraction>> pivot_combos_;
    std::vector<Basis> pivot_cols_;
};

// Writes fractions over a common denominator: returns numerators and the
// denominator (product of the distinct non-trivial denominators).
std::pair<std::vector<ScalarExpr>, ScalarExpr> common_denominator(const std::vector<Fraction>& fs);

}  // namespace eds
