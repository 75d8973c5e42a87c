#include "eds/linsolve.hpp"

#include "eds/error.hpp"

#include <algorithm>

namespace eds {

Fraction::Fraction(const ScalarExpr& n, const ScalarExpr& d) : num(n), den(d) {
    if (den.is_zero()) throw DomainError("fraction with zero denominator");
    if (num.is_zero()) {
        den = ScalarExpr(1);
    } else if (den.is_single_term()) {
        num = num * den.inverse();
        den = ScalarExpr(1);
    } else if (num == den) {
        num = ScalarExpr(1);
        den = ScalarExpr(1);
    } else if (num == -den) {
        num = ScalarExpr(-1);
        den = ScalarExpr(1);
    }
}

std::string Fraction::str() const {
    if (is_polynomial()) return num.str();
    return num.factor_str() + "/(" + den.str() + ")";
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (den == o.den) return Fraction(num + o.num, den);
    return Fraction(num * o.den + o.num * den, den * o.den);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return *this + (-o);
}

Fraction Fraction::operator*(const Fraction& o) const {
    if (is_zero() || o.is_zero()) return Fraction();
    if (den == o.num && o.den == ScalarExpr(1)) return Fraction(num);
    if (o.den == num && den == ScalarExpr(1)) return Fraction(o.num);
    return Fraction(num * o.num, den * o.den);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw DomainError("division by zero fraction");
    return *this * Fraction(o.den, o.num);
}

Truth is_zero(const Fraction& f, const AssumptionSet& a, const Chart& chart) {
    return is_zero(f.num, a, chart);
}

SpanReducer::SpanReducer(const std::vector<FormVector>& rows, std::vector<Basis> column_order, const AssumptionSet& a,
                         const Chart& chart)
    : assumptions_(a), chart_(chart), input_count_(rows.size()), columns_(std::move(column_order)) {
    std::vector<FractionVector> work;
    std::vector<std::vector<Fraction>> combos;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        FractionVector v;
        for (auto& [b, c] : rows[i])
            if (!c.is_zero()) v[b] = Fraction(c);
        work.push_back(v);
        std::vector<Fraction> combo(rows.size());
        combo[i] = Fraction(ScalarExpr(1));
        combos.push_back(combo);
    }
    std::vector<bool> used(work.size(), false);
    std::vector<int> pivot_index;

    for (auto& col : columns_) {
        int pick = -1;
        std::size_t best_cost = 0;
        std::vector<std::string> undecided;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (used[r]) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            Truth t = is_zero(it->second, assumptions_, chart_);
            if (t == Truth::yes) {
                work[r].erase(it);
                continue;
            }
            if (t == Truth::ambiguous) {
                undecided.push_back(it->second.str());
                continue;
            }
            std::size_t cost = it->second.num.terms().size() + (it->second.is_polynomial() ? 0 : 100);
            if (pick < 0 || cost < best_cost) {
                pick = static_cast<int>(r);
                best_cost = cost;
            }
        }
        if (pick < 0) {
            if (!undecided.empty())
                throw CaseSplitError("undecided pivot in column " + basis_str(col), undecided);
            continue;
        }
        used[pick] = true;
        Fraction p = work[pick][col];
        for (auto& [b, c] : work[pick]) c = c / p;
        for (auto& c : combos[pick]) c = c / p;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (static_cast<int>(r) == pick) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            Fraction f = it->second;
            for (auto& [b, c] : work[pick]) {
                Fraction nv = work[r][b] - f * c;
                if (nv.is_zero()) {
                    work[r].erase(b);
                } else {
                    work[r][b] = nv;
                }
            }
            for (std::size_t k = 0; k < combos[r].size(); ++k) combos[r][k] = combos[r][k] - f * combos[pick][k];
        }
        pivot_index.push_back(pick);
        pivot_cols_.push_back(col);
    }
    // Every elimination ran over all rows, so the pivot rows are fully reduced.
    for (int idx : pivot_index) {
        pivot_rows_.push_back(work[idx]);
        pivot_combos_.push_back(combos[idx]);
    }
}

SpanReducer::Result SpanReducer::reduce(const FormVector& target) const {
    Result res;
    res.coefficients.assign(input_count_, Fraction());
    FractionVector t;
    for (auto& [b, c] : target)
        if (!c.is_zero()) t[b] = Fraction(c);
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i) {
        auto it = t.find(pivot_cols_[i]);
        if (it == t.end()) continue;
        Fraction f = it->second;
        for (auto& [b, c] : pivot_rows_[i]) {
            Fraction nv = t[b] - f * c;
            if (nv.is_zero()) {
                t.erase(b);
            } else {
                t[b] = nv;
            }
        }
        for (std::size_t k = 0; k < input_count_; ++k)
            res.coefficients[k] = res.coefficients[k] + f * pivot_combos_[i][k];
    }
    res.residual_zero = Truth::yes;
    for (auto& [b, c] : t) {
        Truth z = is_zero(c, assumptions_, chart_);
        if (z == Truth::yes) continue;
        res.residual[b] = c;
        if (z == Truth::no) {
            res.residual_zero = Truth::no;
        } else if (res.residual_zero == Truth::yes) {
            res.residual_zero = Truth::ambiguous;
        }
    }
    return res;
}

std::pair<std::vector<ScalarExpr>, ScalarExpr> common_denominator(const std::vector<Fraction>& fs) {
    std::vector<ScalarExpr> dens;
    for (auto& f : fs) {
        if (f.is_polynomial()) continue;
        if (std::find(dens.begin(), dens.end(), f.den) == dens.end()) dens.push_back(f.den);
    }
    ScalarExpr total(1);
    for (auto& d : dens) total = total * d;
    std::vector<ScalarExpr> nums;
    for (auto& f : fs) {
        if (f.is_polynomial()) {
            nums.push_back(f.num * total);
            continue;
        }
        ScalarExpr rest(1);
        for (auto& d : dens)
            if (!(d == f.den)) rest = rest * d;
        nums.push_back(f.num * rest);
    }
    return {nums, total};
}

}  // namespace eds
