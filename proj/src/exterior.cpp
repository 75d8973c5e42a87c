#include "eds/exterior.hpp"

#include "eds/error.hpp"

#include <algorithm>

namespace eds {

int ExteriorSystem::min_generator_degree() const {
    int m = kMaxFormDegree + 1;
    for (auto& g : generators) m = std::min(m, g.form.degree());
    return m;
}

DifferentialForm IdealCertificate::expansion_residual(const ExteriorSystem& sys) const {
    DifferentialForm r = target * denominator;
    for (std::size_t i = 0; i < multipliers.size() && i < sys.generators.size(); ++i) {
        if (multipliers[i].is_zero()) continue;
        r = r - wedge(multipliers[i], sys.generators[i].form);
    }
    return r;
}

Truth IdealCertificate::verify(const ExteriorSystem& sys) const {
    return is_zero(expansion_residual(sys), sys.assumptions, sys.chart);
}

namespace {

FormVector to_vector(const DifferentialForm& f) {
    FormVector v;
    for (auto& [b, c] : f.components()) v.emplace(b, c);
    return v;
}

}  // namespace

Reduction ideal_reduce(const DifferentialForm& target, const ExteriorSystem& sys) {
    Reduction out;
    out.certificate.target = target;
    for (auto& g : sys.generators) out.certificate.multipliers.push_back(DifferentialForm(std::max(0, target.degree() - g.form.degree())));
    if (target.is_zero()) {
        out.in_ideal = Truth::yes;
        return out;
    }
    if (target.degree() < sys.min_generator_degree()) {
        out.in_ideal = Truth::no;
        for (auto& [b, c] : target.components()) out.residual[b] = Fraction(c);
        return out;
    }

    std::vector<std::string> diffs = sys.chart.differentials();
    std::vector<Basis> columns = basis_monomials(diffs, target.degree());
    std::reverse(columns.begin(), columns.end());

    std::size_t previous_rows = static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j <= diffs.size(); ++j) {
        std::vector<std::string> prefix(diffs.begin(), diffs.begin() + j);
        std::vector<std::pair<std::size_t, Basis>> labels;
        std::vector<FormVector> rows;
        for (std::size_t i = 0; i < sys.generators.size(); ++i) {
            int k = target.degree() - sys.generators[i].form.degree();
            if (k < 0) continue;
            for (auto& mono : basis_monomials(prefix, k)) {
                DifferentialForm m = DifferentialForm::monomial(ScalarExpr(1), mono);
                DifferentialForm row = wedge(m, sys.generators[i].form);
                labels.push_back({i, mono});
                rows.push_back(to_vector(row));
            }
        }
        if (rows.size() == previous_rows && j != diffs.size()) continue;
        previous_rows = rows.size();

        SpanReducer reducer(rows, columns, sys.assumptions, sys.chart);
        auto res = reducer.reduce(to_vector(target));
        if (res.residual_zero == Truth::ambiguous && j == diffs.size()) {
            std::vector<std::string> items;
            for (auto& [b, c] : res.residual) items.push_back(basis_str(b) + ": " + c.str());
            throw CaseSplitError("ideal membership undecided for " + target.str(), items);
        }
        if (res.residual_zero == Truth::yes) {
            auto [nums, den] = common_denominator(res.coefficients);
            for (std::size_t r = 0; r < labels.size(); ++r) {
                if (nums[r].is_zero()) continue;
                auto& [i, mono] = labels[r];
                out.certificate.multipliers[i] += DifferentialForm::monomial(nums[r], mono);
            }
            out.certificate.denominator = den;
            out.in_ideal = Truth::yes;
            return out;
        }
        if (j == diffs.size()) {
            out.in_ideal = Truth::no;
            out.residual = res.residual;
        }
    }
    return out;
}

std::vector<ClosureResult> check_closed(const ExteriorSystem& sys) {
    std::vector<ClosureResult> out;
    for (auto& g : sys.generators) {
        DifferentialForm dg = d(g.form, sys.chart);
        out.push_back({g.name, dg, ideal_reduce(dg, sys)});
    }
    return out;
}

JetSubstitution JetSubstitution::standard(const Chart& chart) {
    JetSubstitution s;
    for (auto& c : chart.base()) {
        if (c == "x") {
            s.images[c] = {ScalarExpr(1), ScalarExpr()};
        } else if (c == "t") {
            s.images[c] = {ScalarExpr(), ScalarExpr(1)};
        } else {
            s.images[c] = {ScalarExpr::coord(Chart::jet_name(c, "x")), ScalarExpr::coord(Chart::jet_name(c, "t"))};
        }
    }
    return s;
}

ScalarExpr pullback_2form(const DifferentialForm& f, const JetSubstitution& s) {
    if (f.is_zero()) return ScalarExpr();
    if (f.degree() != 2) throw Error("sectioning needs 2-forms, got degree " + std::to_string(f.degree()));
    ScalarExpr r;
    for (auto& [b, c] : f.components()) {
        auto ia = s.images.find(b[0]);
        auto ib = s.images.find(b[1]);
        if (ia == s.images.end() || ib == s.images.end())
            throw Error("section has no image for d" + (ia == s.images.end() ? b[0] : b[1]));
        auto& [ax, at] = ia->second;
        auto& [bx, bt] = ib->second;
        r += c * (ax * bt - at * bx);
    }
    return r;
}

std::vector<ScalarExpr> section(const ExteriorSystem& sys, const JetSubstitution& s) {
    std::vector<ScalarExpr> out;
    for (auto& g : sys.generators) out.push_back(pullback_2form(g.form, s));
    return out;
}

namespace {

// Coordinates of e that are `var` itself or one of its jets, with the jet
// multi-index ("" for var).
std::vector<std::pair<std::string, std::string>> occurrences(const ScalarExpr& e, const std::string& var,
                                                             const Chart& chart) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& c : e.coordinates()) {
        if (c == var) {
            out.push_back({c, ""});
        } else if (auto j = chart.jet(c); j && j->base == var) {
            out.push_back({c, j->multi});
        }
    }
    return out;
}

}  // namespace

ScalarExpr substitute_definitions(const ScalarExpr& e, const std::vector<Definition>& defs, const Chart& chart) {
    ScalarExpr r = e;
    for (int pass = 0; pass < 8; ++pass) {
        bool changed = false;
        for (auto& def : defs) {
            for (auto& [coord, multi] : occurrences(r, def.var, chart)) {
                ScalarExpr value = multi.empty() ? def.value : total_diff(def.value, multi, chart);
                r = substitute(r, coord, value);
                changed = true;
            }
        }
        if (!changed) return r;
    }
    throw Error("definitions are not triangular");
}

std::vector<Definition> solve_definitions(const std::vector<ScalarExpr>& residuals, const Chart& chart,
                                          const std::string& primary) {
    std::vector<Definition> defs;
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
        ScalarExpr r = substitute_definitions(residuals[i], defs, chart);
        bool solved = false;
        for (auto& v : chart.fibre()) {
            if (v == primary) continue;
            bool defined = false;
            for (auto& d : defs) defined = defined || d.var == v;
            if (defined) continue;
            auto occ = occurrences(r, v, chart);
            if (occ.size() != 1 || !occ[0].second.empty()) continue;
            ScalarExpr rest, coeff;
            bool linear = true;
            for (auto& [pm, c] : r.terms()) {
                auto it = pm.find(v);
                if (it == pm.end()) {
                    rest += ScalarExpr::term(pm, c);
                } else if (it->second == ParamRational(1) && pm.size() == 1) {
                    coeff += ScalarExpr(c);
                } else {
                    linear = false;
                }
            }
            if (!linear || coeff.is_zero() || !coeff.is_constant()) continue;
            defs.push_back({v, (-rest).scaled(ParamRational(1) / coeff.constant())});
            solved = true;
            break;
        }
        if (!solved) throw Error("residual " + std::to_string(i + 1) + " cannot be solved for a fibre coordinate: " + r.str());
    }
    return defs;
}

ScalarExpr eliminate(const std::vector<ScalarExpr>& residuals, const std::vector<Definition>& defs, const Chart& chart,
                     const std::string& primary) {
    if (residuals.empty()) return ScalarExpr();
    ScalarExpr r = substitute_definitions(residuals.back(), defs, chart);
    PowerMap ut;
    ut[Chart::jet_name(primary, "t")] = 1;
    auto it = r.terms().find(ut);
    if (it != r.terms().end() && it->second.is_constant()) r = r.scaled(ParamRational(1) / it->second);
    return r;
}

}  // namespace eds
