#include "eds/numeric.hpp"

#include "eds/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eds {

std::string EvalPoint::str() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (auto& [k, v] : params) {
        os << (first ? "" : ", ") << k << "=" << to_string(v);
        first = false;
    }
    for (auto& [k, v] : coords) {
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

namespace {

double coordinate_value(const std::string& c, const EvalPoint& p, const Chart& chart) {
    if (auto it = p.coords.find(c); it != p.coords.end()) return it->second;
    if (auto def = chart.aux_def(c)) {
        double v = 0;
        for (auto& [base, k] : def->terms) v += k.eval_exact(p.params).get_d() * coordinate_value(base, p, chart);
        return v;
    }
    throw DomainError("no value for coordinate " + c);
}

double power(double base, const Rational& e, const std::string& name) {
    if (e.get_den() == 1) return std::pow(base, e.get_num().get_d());
    if (base < 0) throw DomainError("fractional power of negative " + name);
    if (base == 0) {
        if (e > 0) return 0;
        throw DomainError("negative power of zero " + name);
    }
    return std::exp(e.get_d() * std::log(base));
}

template <typename Combine>
double fold_terms(const ScalarExpr& e, const EvalPoint& p, const Chart& chart, Combine combine) {
    double acc = 0;
    for (auto& [pm, c] : e.terms()) {
        double v = c.eval_exact(p.params).get_d();
        for (auto& [name, exp] : pm) {
            Rational q = exp.eval_exact(p.params);
            double b = coordinate_value(name, p, chart);
            if (b == 0 && q < 0) throw DomainError("negative power of zero " + name);
            v *= power(b, q, name);
        }
        acc = combine(acc, v);
    }
    return acc;
}

}  // namespace

double eval(const ScalarExpr& e, const EvalPoint& p, const Chart& chart) {
    return fold_terms(e, p, chart, [](double a, double v) { return a + v; });
}

double eval_magnitude(const ScalarExpr& e, const EvalPoint& p, const Chart& chart) {
    return fold_terms(e, p, chart, [](double a, double v) { return a + std::fabs(v); });
}

double Sampler::coordinate() {
    std::uniform_int_distribution<int> d(500, 1500);
    return d(rng) / 1000.0;
}

Rational Sampler::parameter() {
    static const int values[] = {-2, -1, 1, 2, 3, 4, 5, 6};
    std::uniform_int_distribution<int> d(0, 7);
    return Rational(values[d(rng)]);
}

EvalPoint sample_point(const std::vector<ScalarExpr>& exprs, const AssumptionSet& a, const Chart& chart,
                       Sampler& s, const std::map<std::string, Rational>& fixed) {
    std::set<std::string> params, coords;
    for (auto& e : exprs) {
        auto ps = e.params();
        params.insert(ps.begin(), ps.end());
        auto cs = e.coordinates();
        coords.insert(cs.begin(), cs.end());
    }
    for (auto& d : a.disequalities()) {
        auto ps = d.params();
        params.insert(ps.begin(), ps.end());
    }
    for (auto& c : std::set<std::string>(coords))
        if (auto def = chart.aux_def(c))
            for (auto& [base, k] : def->terms) {
                coords.insert(base);
                auto ps = k.params();
                params.insert(ps.begin(), ps.end());
            }
    std::vector<std::string> free;
    for (auto& p : params) {
        bool substituted = false;
        for (auto& [name, v] : a.substitutions()) substituted = substituted || name == p;
        if (!substituted && !fixed.count(p)) free.push_back(p);
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        EvalPoint pt;
        pt.params = fixed;
        for (auto& p : free) pt.params[p] = s.parameter();
        bool ok = true;
        for (auto it = a.substitutions().rbegin(); it != a.substitutions().rend(); ++it) {
            try {
                pt.params[it->first] = it->second.eval_exact(pt.params);
            } catch (const std::domain_error&) {
                ok = false;
            }
        }
        for (auto& d : a.disequalities()) {
            if (!ok) break;
            try {
                ok = d.eval_exact(pt.params) != 0;
            } catch (const std::domain_error&) {
                ok = false;
            }
        }
        if (!ok) continue;
        for (auto& c : coords)
            if (!chart.is_aux(c)) pt.coords[c] = s.coordinate();
        return pt;
    }
    throw DomainError("no parameter sample satisfies the assumptions");
}

NumericReport random_identity_check(const ScalarExpr& lhs, const ScalarExpr& rhs, const AssumptionSet& a,
                                    const Chart& chart, int trials, std::uint64_t seed, double tol,
                                    const std::map<std::string, Rational>& fixed) {
    NumericReport rep;
    rep.seed = seed;
    rep.tol = tol;
    Sampler s(seed);
    ScalarExpr l = lhs.apply(a), r = rhs.apply(a);
    int attempts = 0;
    while (rep.trials < trials) {
        if (++attempts > trials * 100) throw DomainError("too many samples outside the domain");
        EvalPoint pt = sample_point({l, r}, a, chart, s, fixed);
        double lv, rv, scale;
        try {
            lv = eval(l, pt, chart);
            rv = eval(r, pt, chart);
            scale = std::max(eval_magnitude(l, pt, chart), eval_magnitude(r, pt, chart));
        } catch (const DomainError&) {
            continue;
        }
        ++rep.trials;
        double diff = std::fabs(lv - rv);
        double rel = scale > 0 ? diff / scale : diff;
        if (rel >= rep.worst) {
            rep.worst = rel;
            rep.worst_sample = pt.str();
        }
        if (diff > std::max(tol * scale, kAbsoluteFloor)) rep.passed = false;
    }
    return rep;
}

}  // namespace eds
