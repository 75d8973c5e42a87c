#include "eds/backlund.hpp"

#include "eds/error.hpp"

#include <algorithm>
#include <cmath>

namespace eds {

namespace {

ScalarExpr coefficient_of(const ScalarExpr& e, const std::string& v, ScalarExpr* rest) {
    ScalarExpr out;
    for (auto& [pm, c] : e.terms()) {
        auto it = pm.find(v);
        if (it == pm.end()) {
            if (rest) *rest += ScalarExpr::term(pm, c);
            continue;
        }
        if (!(it->second == ParamRational(1))) throw UnsupportedError("expression is not linear in " + v);
        PowerMap r = pm;
        r.erase(v);
        out += ScalarExpr::term(r, c);
    }
    return out;
}

}  // namespace

Compatibility compatibility_residual(const BacklundSystem& b, const ScalarExpr& pde, const AssumptionSet& a,
                                     const Chart& chart, const std::string& primary) {
    Compatibility out;
    out.cross = (total_diff(b.F, 't', chart) - total_diff(b.G, 'x', chart)).apply(a);
    std::string ut = Chart::jet_name(primary, "t");
    for (auto& c : out.cross.coordinates())
        if (auto j = chart.jet(c); j && c != ut && j->multi.find('t') != std::string::npos)
            throw UnsupportedError("cross derivative involves " + c + " beyond the evolution variable");
    ScalarExpr p = pde.apply(a);
    ScalarExpr lead = coefficient_of(p, ut, nullptr);
    if (!lead.is_constant() || lead.is_zero()) throw UnsupportedError("PDE residual must have constant " + ut + " coefficient");
    out.multiplier = coefficient_of(out.cross, ut, nullptr).scaled(ParamRational(1) / lead.constant());
    out.remainder = (out.cross - out.multiplier * p).apply(a);
    out.remainder_zero = is_zero(out.remainder, a, chart);
    return out;
}

NumericReport verify_potential_equation(const BacklundSystem& b, const Chart& chart, const PotentialCheckOptions& o) {
    if (!b.potential) throw Error("system " + b.name + " has no potential equation");
    auto n_it = o.params.find("n");
    if (n_it == o.params.end()) throw Error("potential check needs a value for n");
    if (n_it->second + 1 == 0) throw DomainError("n + 1 must be nonzero");

    AssumptionSet fixed;
    for (auto& [k, v] : o.params) fixed.add_substitution(k, ParamRational(v));
    std::string yx = Chart::jet_name(o.potential, "x");
    std::string yt = Chart::jet_name(o.potential, "t");
    ScalarExpr U = ScalarExpr::coord(yx, ParamRational(Rational(1) / (n_it->second + 1)));
    ScalarExpr Ux = total_diff(U, 'x', chart);
    ScalarExpr Uxx = total_diff(Ux, 'x', chart);
    ScalarExpr F = b.F.apply(fixed);
    if (F != ScalarExpr::coord(o.primary, ParamRational(n_it->second + 1)))
        throw Error("the potential equation inverts F = " + o.primary + "^(n + 1); with these values F = " + F.str());
    ScalarExpr G = b.G.apply(fixed);
    ScalarExpr pot = b.potential->apply(fixed);
    for (auto& e : {G, pot})
        if (!e.params().empty()) throw Error("unassigned parameter in " + e.str());

    NumericReport rep;
    rep.seed = o.seed;
    rep.tol = o.tol;
    Sampler s(o.seed);
    for (int i = 0; i < o.trials; ++i) {
        EvalPoint jets;
        jets.coords[yx] = s.coordinate();
        jets.coords[Chart::jet_name(o.potential, "xx")] = s.coordinate();
        jets.coords[Chart::jet_name(o.potential, "xxx")] = s.coordinate();
        EvalPoint up;
        up.coords[o.primary] = eval(U, jets, chart);
        up.coords[Chart::jet_name(o.primary, "x")] = eval(Ux, jets, chart);
        up.coords[Chart::jet_name(o.primary, "xx")] = eval(Uxx, jets, chart);
        EvalPoint full = jets;
        full.coords[yt] = eval(G, up, chart);
        double r = std::fabs(eval(pot, full, chart));
        double scale = eval_magnitude(pot, full, chart);
        double rel = scale > 0 ? r / scale : r;
        ++rep.trials;
        if (rel >= rep.worst) {
            rep.worst = rel;
            rep.worst_sample = full.str();
        }
        if (r > std::max(o.tol * scale, kAbsoluteFloor)) rep.passed = false;
    }
    return rep;
}

}  // namespace eds
