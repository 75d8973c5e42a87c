#include "eds/prolong.hpp"

#include "eds/error.hpp"

#include <algorithm>
#include <set>

namespace eds {

std::string lie_form_str(const LieForm& f) {
    if (f.empty()) return "0";
    std::string out;
    for (auto& [b, e] : f) {
        if (!out.empty()) out += " + ";
        out += "(" + e.str() + ")*" + basis_str(b);
    }
    return out;
}

namespace {

FormVector to_vector(const DifferentialForm& f) {
    FormVector v;
    for (auto& [b, c] : f.components()) v.emplace(b, c);
    return v;
}

// Spanning rows of the degree-2 part of the ideal.
struct IdealSpan {
    std::vector<FormVector> rows;
    std::vector<std::size_t> owner;
    std::vector<bool> scalar_multiplier;
    std::vector<Basis> columns;
};

IdealSpan degree2_span(const ExteriorSystem& sys) {
    IdealSpan s;
    auto diffs = sys.chart.differentials();
    s.columns = basis_monomials(diffs, 2);
    std::reverse(s.columns.begin(), s.columns.end());
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        int k = 2 - sys.generators[i].form.degree();
        if (k < 0) continue;
        for (auto& mono : basis_monomials(diffs, k)) {
            DifferentialForm row = wedge(DifferentialForm::monomial(ScalarExpr(1), mono), sys.generators[i].form);
            s.rows.push_back(to_vector(row));
            s.owner.push_back(i);
            s.scalar_multiplier.push_back(k == 0);
        }
    }
    return s;
}

DifferentialForm two_form_slot() {
    return DifferentialForm(2);
}

}  // namespace

std::map<LieSymbol, DifferentialForm> curvature(const Connection& conn, const ExteriorSystem& sys,
                                                const RelationTable& table) {
    std::map<LieSymbol, DifferentialForm> out;
    auto slot = [&](const LieSymbol& s) -> DifferentialForm& {
        return out.try_emplace(s, two_form_slot()).first->second;
    };
    DifferentialForm dx = DifferentialForm::differential("x");
    DifferentialForm dt = DifferentialForm::differential("t");
    for (auto& [s, c] : conn.A.terms()) slot(s) += wedge(d(DifferentialForm::scalar(c), sys.chart), dx);
    for (auto& [s, c] : conn.B.terms()) slot(s) += wedge(d(DifferentialForm::scalar(c), sys.chart), dt);
    LieExpr k = bracket(conn.A, conn.B, table);
    for (auto& [s, c] : k.terms()) slot(s) += DifferentialForm::monomial(c, {"x", "t"});
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) {
            it = out.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

std::string render_lambda(const std::map<LieSymbol, Fraction>& l) {
    LieExpr poly;
    bool polynomial = true;
    for (auto& [s, f] : l) {
        polynomial = polynomial && f.is_polynomial();
        poly += LieExpr::symbol(s, f.num);
    }
    if (polynomial) return poly.str();
    std::string out;
    for (auto& [s, f] : l) {
        std::string t = f.is_polynomial() ? LieExpr::symbol(s, f.num).str() : "(" + f.str() + ")*" + s.str();
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

CurvatureResult curvature_residual(const Connection& conn, const ExteriorSystem& sys, const RelationTable& table) {
    IdealSpan span = degree2_span(sys);
    SpanReducer reducer(span.rows, span.columns, sys.assumptions, sys.chart);
    CurvatureResult res;
    res.lambdas.resize(sys.generators.size());
    std::map<Basis, std::vector<std::pair<LieSymbol, Fraction>>, BasisLess> leftovers;
    for (auto& [s, form] : curvature(conn, sys, table)) {
        auto r = reducer.reduce(to_vector(form));
        if (r.residual_zero == Truth::no) {
            res.zero = Truth::no;
        } else if (r.residual_zero == Truth::ambiguous && res.zero == Truth::yes) {
            res.zero = Truth::ambiguous;
        }
        for (std::size_t k = 0; k < r.coefficients.size(); ++k) {
            if (!span.scalar_multiplier[k] || r.coefficients[k].is_zero()) continue;
            auto& slot = res.lambdas[span.owner[k]][s];
            slot = slot + r.coefficients[k];
        }
        for (auto& [b, f] : r.residual) leftovers[b].push_back({s, f});
    }
    for (auto& [b, items] : leftovers) {
        std::vector<Fraction> fs;
        for (auto& it : items) fs.push_back(it.second);
        auto [nums, den] = common_denominator(fs);
        LieExpr e;
        for (std::size_t i = 0; i < items.size(); ++i) e += LieExpr::symbol(items[i].first, nums[i]);
        e = simplify(e, sys.assumptions, sys.chart);
        if (!e.is_zero()) res.residual[b] = e;
    }
    return res;
}

bool PdeFormReport::all_satisfied() const {
    for (auto& e : equations)
        if (e.satisfied != Truth::yes) return false;
    return true;
}

namespace {

// Coefficient of sym in an expression linear in sym.
ScalarExpr linear_coefficient(const ScalarExpr& e, const std::string& sym) {
    ScalarExpr out;
    for (auto& [pm, c] : e.terms()) {
        auto it = pm.find(sym);
        if (it == pm.end()) continue;
        if (!(it->second == ParamRational(1))) throw Error("component equation is not linear in " + sym);
        PowerMap rest = pm;
        rest.erase(sym);
        out += ScalarExpr::term(rest, c);
    }
    return out;
}

LieExpr partial(const LieExpr& e, const std::string& c, const Chart& chart) {
    return e.map_coefficients([&](const ScalarExpr& f) { return diff(f, c, chart); });
}

}  // namespace

PdeFormReport pde_form_check(const Connection& conn, const ExteriorSystem& sys, const RelationTable& table) {
    IdealSpan span = degree2_span(sys);
    SpanReducer reducer(span.rows, span.columns, sys.assumptions, sys.chart);
    std::map<std::string, LieExpr> values;
    DifferentialForm generic(2);
    for (auto& c : sys.chart.differentials()) {
        if (c != "x") {
            generic += DifferentialForm::monomial(ScalarExpr::coord("A_" + c), {c, "x"});
            values["A_" + c] = partial(conn.A, c, sys.chart);
        }
        if (c != "t") {
            generic += DifferentialForm::monomial(ScalarExpr::coord("B_" + c), {c, "t"});
            values["B_" + c] = partial(conn.B, c, sys.chart);
        }
    }
    generic += DifferentialForm::monomial(ScalarExpr::coord("K"), {"x", "t"});
    values["K"] = bracket(conn.A, conn.B, table);

    PdeFormReport rep;
    auto r = reducer.reduce(to_vector(generic));
    for (auto& [b, f] : r.residual) {
        ComponentEquation eq;
        eq.equation = f.num.str() + " = 0";
        LieExpr v;
        for (auto& [sym, val] : values) {
            ScalarExpr k = linear_coefficient(f.num, sym);
            if (!k.is_zero()) v += val * k;
        }
        eq.residual = simplify(v, sys.assumptions, sys.chart);
        eq.satisfied = is_zero(eq.residual, sys.assumptions, sys.chart);
        rep.equations.push_back(eq);
    }
    return rep;
}

std::vector<Constraint> extract_constraints(const Connection& conn, const ExteriorSystem& sys,
                                            const RelationTable& table, const AssumptionSet& a,
                                            const std::string& coordinate) {
    ExteriorSystem s = sys;
    s.assumptions = sys.assumptions.merged(a);
    const AssumptionSet& all = s.assumptions;
    CurvatureResult res = curvature_residual(conn, s, table);

    struct Item {
        std::string basis;
        PowerMap rest;
        LieSymbol sym;
        ParamRational coeff;
    };
    std::vector<Item> items;
    std::vector<ParamRational> exps;
    for (auto& [b, e] : res.residual) {
        LieExpr resolved = resolve(e, table).apply(all);
        for (auto& [sym, c] : resolved.terms()) {
            for (auto& [pm, k] : c.terms()) {
                PowerMap rest = pm;
                auto it = rest.find(coordinate);
                exps.push_back(it == rest.end() ? ParamRational() : it->second);
                if (it != rest.end()) rest.erase(it);
                items.push_back({basis_str(b), rest, sym, k});
            }
        }
    }
    auto [reps, index] = cluster_exponents(exps, all);

    struct Key {
        std::string basis;
        PowerMap rest;
        int cluster;
        bool operator<(const Key& o) const {
            if (basis != o.basis) return basis < o.basis;
            if (rest != o.rest) return rest < o.rest;
            return cluster < o.cluster;
        }
    };
    std::map<Key, LieExpr> groups;
    for (std::size_t i = 0; i < items.size(); ++i)
        groups[{items[i].basis, items[i].rest, index[i]}] += LieExpr::symbol(items[i].sym, ScalarExpr(items[i].coeff));

    std::vector<std::pair<Key, LieExpr>> ordered;
    for (auto& [k, e] : groups) {
        LieExpr r = simplify(e, all, s.chart);
        if (!r.is_zero()) ordered.push_back({k, r});
    }
    std::stable_sort(ordered.begin(), ordered.end(), [&](auto& x, auto& y) {
        if (x.first.basis != y.first.basis) return x.first.basis < y.first.basis;
        if (x.first.rest != y.first.rest) return x.first.rest < y.first.rest;
        return exponent_order(reps[x.first.cluster], reps[y.first.cluster]);
    });

    std::vector<Constraint> out;
    for (auto& [k, e] : ordered) {
        PowerMap pm = k.rest;
        if (!reps[k.cluster].is_zero()) pm[coordinate] = reps[k.cluster];
        std::string label = pm.empty() ? "1" : render_term(pm, ParamRational(1));
        if (res.residual.size() > 1) label = k.basis + " " + label;
        out.push_back({label, e});
    }
    return out;
}

std::string render(const Constraint& c) {
    return c.exponent + ": " + c.relation.str() + " = 0";
}

namespace {

bool proportional(const LieExpr& f, const LieExpr& e, const AssumptionSet& a, const Chart& chart) {
    if (f.is_zero() || e.is_zero()) return f.is_zero() && e.is_zero();
    const auto& [s, ce] = *e.terms().begin();
    ScalarExpr cf = f.coefficient(s);
    if (cf.is_zero() || !cf.is_constant() || !ce.is_constant()) return false;
    ParamRational ratio = cf.constant() / ce.constant();
    if (!a.provably_nonzero(ratio)) return false;
    return is_zero(f - e * ScalarExpr(ratio), a, chart) == Truth::yes;
}

}  // namespace

ConstraintMatch compare_constraints(const std::vector<LieExpr>& found, const std::vector<LieExpr>& expected,
                                    const RelationTable& table, const AssumptionSet& a, const Chart& chart) {
    std::vector<LieExpr> f, e;
    for (auto& x : found) f.push_back(simplify(resolve(x, table), a, chart));
    for (auto& x : expected) e.push_back(simplify(resolve(x, table), a, chart));
    std::vector<bool> used(f.size(), false);
    ConstraintMatch m;
    for (std::size_t i = 0; i < e.size(); ++i) {
        bool hit = false;
        for (std::size_t j = 0; j < f.size() && !hit; ++j) {
            if (used[j] || !proportional(f[j], e[i], a, chart)) continue;
            used[j] = true;
            hit = true;
        }
        if (!hit) m.unmatched_expected.push_back(e[i].str() + " = 0");
    }
    for (std::size_t j = 0; j < f.size(); ++j)
        if (!used[j]) m.unmatched_found.push_back(f[j].str() + " = 0");
    return m;
}

bool CaseReport::verified() const {
    for (auto& c : standing)
        if (c.satisfied != Truth::yes) return false;
    for (auto& c : constraints)
        if (c.satisfied != Truth::yes) return false;
    return jacobi.consistent() && jacobi.undecidable.empty();
}

CaseReport verify_case(const std::vector<LieExpr>& constraints, const RelationTable& base, const Realization& r,
                       const AssumptionSet& a, const Chart& chart) {
    CaseReport rep;
    RealizedTable rt = apply_realization(base, r, a, chart);
    rep.standing = rt.checks;
    for (auto& c : constraints) {
        RelationCheck chk;
        chk.label = c.str() + " = 0";
        chk.residual = simplify(apply_realization(c, r, rt.table), a, chart);
        chk.satisfied = is_zero(chk.residual, a, chart);
        if (chk.satisfied == Truth::no && chk.residual.has_formal_brackets()) chk.satisfied = Truth::ambiguous;
        rep.constraints.push_back(chk);
    }
    rep.final_table = rt.table;
    // Audit the algebra the case actually uses: generators named by the
    // realized relations or by the realization images.
    std::set<std::string, bool (*)(const std::string&, const std::string&)> used(natural_less);
    auto collect = [&](const std::set<std::string>& gs) {
        for (auto& g : gs)
            if (!r.count(g)) used.insert(g);
    };
    for (auto& [k, v] : rt.table.entries()) {
        collect(k.first.generators());
        collect(k.second.generators());
        collect(v.generators());
    }
    for (auto& [g, img] : r) collect(img.generators());
    rep.jacobi = jacobi_audit(rt.table, {used.begin(), used.end()}, a, chart);
    return rep;
}

}  // namespace eds
