#include "eds/scalar.hpp"

#include "eds/error.hpp"

#include <algorithm>

namespace eds {

// ---------------------------------------------------------------- Chart

void Chart::add_base(const std::string& name) {
    if (is_coordinate(name)) throw Error("coordinate " + name + " declared twice");
    base_.push_back(name);
}

void Chart::add_aux(AuxDefinition def) {
    if (is_coordinate(def.name)) throw Error("coordinate " + def.name + " declared twice");
    for (auto& [c, k] : def.terms)
        if (!is_base(c)) throw Error("auxiliary coordinate " + def.name + " refers to non-base " + c);
    aux_.push_back(std::move(def));
}

void Chart::add_potential(const std::string& name) {
    if (is_coordinate(name)) throw Error("coordinate " + name + " declared twice");
    potentials_.push_back(name);
}

namespace {

int differential_rank(const std::string& n) {
    static const char* order[] = {"x", "t", "u", "p", "q", "v", "y"};
    for (int i = 0; i < 7; ++i)
        if (n == order[i]) return i;
    return 7;
}

}  // namespace

bool differential_less(const std::string& a, const std::string& b) {
    int ra = differential_rank(a), rb = differential_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

std::vector<std::string> Chart::differentials() const {
    std::vector<std::string> d = base_;
    std::stable_sort(d.begin(), d.end(), differential_less);
    return d;
}

std::vector<std::string> Chart::fibre() const {
    std::vector<std::string> f;
    for (auto& b : differentials())
        if (!is_independent(b)) f.push_back(b);
    return f;
}

bool Chart::is_base(const std::string& n) const {
    return std::find(base_.begin(), base_.end(), n) != base_.end();
}

bool Chart::is_aux(const std::string& n) const {
    return aux_def(n) != nullptr;
}

bool Chart::is_potential(const std::string& n) const {
    return std::find(potentials_.begin(), potentials_.end(), n) != potentials_.end();
}

const AuxDefinition* Chart::aux_def(const std::string& n) const {
    for (auto& a : aux_)
        if (a.name == n) return &a;
    return nullptr;
}

std::string Chart::sort_multi(const std::string& multi) {
    auto nx = std::count(multi.begin(), multi.end(), 'x');
    return std::string(nx, 'x') + std::string(multi.size() - nx, 't');
}

std::string Chart::jet_name(const std::string& base, const std::string& multi) {
    return base + "_" + sort_multi(multi);
}

std::optional<JetInfo> Chart::jet(const std::string& n) const {
    auto pos = n.rfind('_');
    if (pos == std::string::npos || pos + 1 >= n.size()) return std::nullopt;
    std::string base = n.substr(0, pos), multi = n.substr(pos + 1);
    if (!(is_base(base) && !is_independent(base)) && !is_potential(base)) return std::nullopt;
    for (char ch : multi)
        if (ch != 'x' && ch != 't') return std::nullopt;
    if (multi != sort_multi(multi)) return std::nullopt;
    if (static_cast<int>(multi.size()) > kMaxJetOrder)
        throw JetOrderError("jet " + n + " exceeds order " + std::to_string(kMaxJetOrder), n);
    return JetInfo{base, multi};
}

bool Chart::is_coordinate(const std::string& n) const {
    return is_base(n) || is_aux(n) || is_potential(n) || jet(n).has_value();
}

// ---------------------------------------------------------------- ScalarExpr

ScalarExpr::ScalarExpr(const ParamRational& c) {
    if (!c.is_zero()) terms_[PowerMap()] = c;
}

ScalarExpr ScalarExpr::coord(const std::string& name, const ParamRational& exp) {
    PowerMap m;
    m[name] = exp;
    return term(m, 1);
}

ScalarExpr ScalarExpr::param(const std::string& name) {
    return ScalarExpr(ParamRational::param(name));
}

ScalarExpr ScalarExpr::term(const PowerMap& powers, const ParamRational& coeff) {
    return from_terms({{powers, coeff}});
}

ScalarExpr ScalarExpr::from_terms(const std::vector<std::pair<PowerMap, ParamRational>>& ts) {
    ScalarExpr r;
    for (auto& [pm, c] : ts) {
        if (c.is_zero()) continue;
        PowerMap clean;
        for (auto& [name, e] : pm)
            if (!e.is_zero()) clean.emplace(name, e);
        auto it = r.terms_.find(clean);
        if (it == r.terms_.end()) {
            r.terms_.emplace(std::move(clean), c);
        } else {
            it->second += c;
        }
    }
    r.normalize();
    return r;
}

namespace {

bool has_fraction_exponent(const PowerMap& pm) {
    for (auto& [n, e] : pm)
        if (!e.den().is_constant()) return true;
    return false;
}

bool same_powers(const PowerMap& a, const PowerMap& b) {
    if (a.size() != b.size()) return false;
    auto i = a.begin();
    auto j = b.begin();
    for (; i != a.end(); ++i, ++j)
        if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
}

}  // namespace

void ScalarExpr::normalize() {
    // Keys equal as rational functions but stored differently are merged.
    bool any_fraction = false;
    for (auto& [pm, c] : terms_)
        if (has_fraction_exponent(pm)) any_fraction = true;
    if (any_fraction && terms_.size() > 1) {
        std::vector<std::pair<PowerMap, ParamRational>> ts(terms_.begin(), terms_.end());
        std::vector<bool> dead(ts.size(), false);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (dead[i]) continue;
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                if (dead[j]) continue;
                if (!has_fraction_exponent(ts[i].first) && !has_fraction_exponent(ts[j].first)) continue;
                if (same_powers(ts[i].first, ts[j].first)) {
                    ts[i].second += ts[j].second;
                    dead[j] = true;
                }
            }
        }
        terms_.clear();
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!dead[i]) terms_.emplace(ts[i].first, ts[i].second);
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

bool ScalarExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ParamRational ScalarExpr::constant() const {
    auto it = terms_.find(PowerMap());
    return it == terms_.end() ? ParamRational() : it->second;
}

std::set<std::string> ScalarExpr::coordinates() const {
    std::set<std::string> out;
    for (auto& [pm, c] : terms_)
        for (auto& [n, e] : pm) out.insert(n);
    return out;
}

std::set<std::string> ScalarExpr::params() const {
    std::set<std::string> out;
    for (auto& [pm, c] : terms_) {
        auto p = c.params();
        out.insert(p.begin(), p.end());
        for (auto& [n, e] : pm) {
            auto q = e.params();
            out.insert(q.begin(), q.end());
        }
    }
    return out;
}

ParamRational ScalarExpr::exponent_of(const std::string& c) const {
    if (terms_.size() != 1) throw std::logic_error("exponent_of on a sum");
    auto& pm = terms_.begin()->first;
    auto it = pm.find(c);
    return it == pm.end() ? ParamRational() : it->second;
}

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return o;
    std::vector<std::pair<PowerMap, ParamRational>> ts(terms_.begin(), terms_.end());
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(ts);
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const {
    return *this + (-o);
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr r = *this;
    for (auto& [pm, c] : r.terms_) c = -c;
    return r;
}

namespace {

PowerMap multiply_powers(const PowerMap& a, const PowerMap& b) {
    PowerMap r = a;
    for (auto& [n, e] : b) {
        auto it = r.find(n);
        if (it == r.end()) {
            r.emplace(n, e);
        } else {
            it->second += e;
        }
    }
    return r;
}

}  // namespace

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
    if (terms_.empty() || o.terms_.empty()) return ScalarExpr();
    std::vector<std::pair<PowerMap, ParamRational>> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (auto& [p1, c1] : terms_)
        for (auto& [p2, c2] : o.terms_) ts.push_back({multiply_powers(p1, p2), c1 * c2});
    return from_terms(ts);
}

ScalarExpr ScalarExpr::scaled(const ParamRational& k) const {
    if (k.is_zero()) return ScalarExpr();
    ScalarExpr r = *this;
    for (auto& [pm, c] : r.terms_) c = c * k;
    return r;
}

ScalarExpr ScalarExpr::pow(const ParamRational& e) const {
    if (e.is_zero()) return ScalarExpr(1);
    if (terms_.empty()) {
        if (e.is_constant() && e.to_rational() > 0) return ScalarExpr();
        throw DomainError("zero raised to exponent " + e.str());
    }
    if (terms_.size() == 1) {
        auto& [pm, c] = *terms_.begin();
        ParamRational coeff;
        if (c == ParamRational(1)) {
            coeff = 1;
        } else if (e.is_integer()) {
            coeff = c.pow(e.to_rational().get_num().get_si());
        } else {
            throw UnsupportedError("cannot raise coefficient " + c.str() + " to exponent " + e.str());
        }
        PowerMap r;
        for (auto& [n, x] : pm) r.emplace(n, x * e);
        return term(r, coeff);
    }
    if (!e.is_integer() || e.to_rational() < 0)
        throw UnsupportedError("cannot raise a sum to exponent " + e.str());
    long k = e.to_rational().get_num().get_si();
    ScalarExpr r(1);
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
}

ScalarExpr ScalarExpr::inverse() const {
    if (terms_.size() != 1) throw UnsupportedError("inverse of a sum: " + str());
    auto& [pm, c] = *terms_.begin();
    PowerMap r;
    for (auto& [n, x] : pm) r.emplace(n, -x);
    return term(r, ParamRational(1) / c);
}

ScalarExpr ScalarExpr::apply(const AssumptionSet& a) const {
    if (a.substitutions().empty()) return *this;
    std::vector<std::pair<PowerMap, ParamRational>> ts;
    for (auto& [pm, c] : terms_) {
        PowerMap r;
        for (auto& [n, e] : pm) r.emplace(n, a.apply(e));
        ts.push_back({r, a.apply(c)});
    }
    return from_terms(ts);
}

ScalarExpr ScalarExpr::substitute_param(const std::string& name, const ParamRational& value) const {
    std::vector<std::pair<PowerMap, ParamRational>> ts;
    for (auto& [pm, c] : terms_) {
        PowerMap r;
        for (auto& [n, e] : pm) r.emplace(n, e.substitute(name, value));
        ts.push_back({r, c.substitute(name, value)});
    }
    return from_terms(ts);
}

bool ScalarExpr::operator==(const ScalarExpr& o) const {
    return (*this - o).is_zero();
}

std::string render_term(const PowerMap& powers, const ParamRational& coeff) {
    std::string factors;
    for (auto& [n, e] : powers) {
        if (!factors.empty()) factors += "*";
        factors += n;
        if (!(e == ParamRational(1))) factors += "^(" + e.str() + ")";
    }
    if (factors.empty()) return coeff.str();
    if (coeff == ParamRational(1)) return factors;
    if (coeff == ParamRational(-1)) return "-" + factors;
    const Poly& num = coeff.num();
    bool simple_den = coeff.den().is_constant() && coeff.den().constant() == 1;
    if (coeff.is_constant()) return coeff.str() + "*" + factors;
    if (simple_den && num.size() == 1) return num.str() + "*" + factors;
    return "(" + coeff.str() + ")*" + factors;
}

std::string ScalarExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [pm, c] : terms_) {
        std::string t = render_term(pm, c);
        if (first) {
            s = t;
        } else if (t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
        first = false;
    }
    return s;
}

std::string ScalarExpr::factor_str() const {
    std::string s = str();
    if (terms_.size() <= 1 && s.find(' ') == std::string::npos && s[0] != '-') return s;
    return "(" + s + ")";
}

// ---------------------------------------------------------------- calculus

ScalarExpr diff(const ScalarExpr& e, const std::string& c, const Chart& chart) {
    std::vector<std::pair<PowerMap, ParamRational>> out;
    for (auto& [pm, coeff] : e.terms()) {
        for (auto& [name, exp] : pm) {
            ParamRational factor;
            if (name == c) {
                factor = 1;
            } else if (const AuxDefinition* a = chart.aux_def(name)) {
                for (auto& [b, k] : a->terms)
                    if (b == c) factor = k;
            }
            if (factor.is_zero()) continue;
            PowerMap r = pm;
            ParamRational ne = exp - ParamRational(1);
            if (ne.is_zero()) {
                r.erase(name);
            } else {
                r[name] = ne;
            }
            out.push_back({r, coeff * exp * factor});
        }
    }
    return ScalarExpr::from_terms(out);
}

ScalarExpr total_diff(const ScalarExpr& e, char direction, const Chart& chart) {
    std::string dir(1, direction);
    std::set<std::string> coords;
    for (auto& c : e.coordinates()) {
        if (const AuxDefinition* a = chart.aux_def(c)) {
            for (auto& [b, k] : a->terms) coords.insert(b);
        } else {
            coords.insert(c);
        }
    }
    ScalarExpr r;
    for (auto& c : coords) {
        ScalarExpr dc;
        if (c == dir) {
            dc = ScalarExpr(1);
        } else if (Chart::is_independent(c)) {
            continue;
        } else if (auto j = chart.jet(c)) {
            std::string multi = Chart::sort_multi(j->multi + dir);
            if (static_cast<int>(multi.size()) > kMaxJetOrder)
                throw JetOrderError("total derivative of " + c + " exceeds jet order " +
                                        std::to_string(kMaxJetOrder),
                                    c);
            dc = ScalarExpr::coord(Chart::jet_name(j->base, multi));
        } else if (chart.is_base(c) || chart.is_potential(c)) {
            dc = ScalarExpr::coord(Chart::jet_name(c, dir));
        } else {
            throw Error("total derivative: unknown coordinate " + c);
        }
        ScalarExpr pd = diff(e, c, chart);
        if (!pd.is_zero()) r += pd * dc;
    }
    return r;
}

ScalarExpr total_diff(const ScalarExpr& e, const std::string& multi, const Chart& chart) {
    ScalarExpr r = e;
    for (char ch : multi) r = total_diff(r, ch, chart);
    return r;
}

ScalarExpr subst(const ScalarExpr& e, const std::string& target, const ScalarExpr& replacement) {
    if (!replacement.is_single_term())
        throw UnsupportedError("substitution for " + target + " by a sum: " + replacement.str());
    if (replacement.coordinates().count(target))
        throw UnsupportedError("substitution for " + target + " refers to " + target);
    ScalarExpr r;
    for (auto& [pm, c] : e.terms()) {
        auto it = pm.find(target);
        if (it == pm.end()) {
            r += ScalarExpr::term(pm, c);
            continue;
        }
        PowerMap rest = pm;
        rest.erase(target);
        r += ScalarExpr::term(rest, c) * replacement.pow(it->second);
    }
    return r;
}

ScalarExpr substitute(const ScalarExpr& e, const std::string& target, const ScalarExpr& value) {
    ScalarExpr r;
    for (auto& [pm, c] : e.terms()) {
        auto it = pm.find(target);
        if (it == pm.end()) {
            r += ScalarExpr::term(pm, c);
            continue;
        }
        if (!it->second.is_integer() || it->second.to_rational() < 0)
            throw UnsupportedError("polynomial substitution for " + target + " with exponent " + it->second.str());
        PowerMap rest = pm;
        rest.erase(target);
        r += ScalarExpr::term(rest, c) * value.pow(it->second);
    }
    return r;
}

ScalarExpr aux_canonical(const ScalarExpr& e, const Chart& chart, bool* complete) {
    if (complete) *complete = true;
    ScalarExpr r = e;
    for (auto& a : chart.aux()) {
        if (!r.coordinates().count(a.name)) continue;
        if (a.terms.empty()) continue;
        const std::string& pivot = a.terms.front().first;
        ParamRational k = a.terms.front().second;
        bool ok = true;
        for (auto& [pm, c] : r.terms()) {
            auto it = pm.find(pivot);
            if (it != pm.end() && (!it->second.is_integer() || it->second.to_rational() < 0)) ok = false;
        }
        if (!ok) {
            if (complete) *complete = false;
            continue;
        }
        ScalarExpr value = ScalarExpr::coord(a.name);
        for (std::size_t i = 1; i < a.terms.size(); ++i)
            value -= ScalarExpr::coord(a.terms[i].first).scaled(a.terms[i].second);
        value = value.scaled(ParamRational(1) / k);
        r = substitute(r, pivot, value);
    }
    return r;
}

namespace {

bool provably_distinct(const PowerMap& a, const PowerMap& b, const AssumptionSet& as) {
    std::set<std::string> names;
    for (auto& [n, e] : a) names.insert(n);
    for (auto& [n, e] : b) names.insert(n);
    for (auto& n : names) {
        auto ia = a.find(n);
        auto ib = b.find(n);
        ParamRational ea = ia == a.end() ? ParamRational() : ia->second;
        ParamRational eb = ib == b.end() ? ParamRational() : ib->second;
        if (as.provably_nonzero(ea - eb)) return true;
    }
    return false;
}

Truth decide_zero(const ScalarExpr& e, const AssumptionSet& a) {
    if (e.is_zero()) return Truth::yes;
    auto& ts = e.terms();
    for (auto i = ts.begin(); i != ts.end(); ++i) {
        if (!a.provably_nonzero(i->second)) continue;
        bool distinct = true;
        for (auto j = ts.begin(); j != ts.end() && distinct; ++j)
            if (j != i && !provably_distinct(i->first, j->first, a)) distinct = false;
        if (distinct) return Truth::no;
    }
    return Truth::ambiguous;
}

}  // namespace

Truth is_zero(const ScalarExpr& e, const AssumptionSet& a, const Chart& chart) {
    ScalarExpr r = e.apply(a);
    if (r.is_zero()) return Truth::yes;
    bool complete = true;
    ScalarExpr c = aux_canonical(r, chart, &complete);
    if (c.is_zero()) return Truth::yes;
    Truth t = decide_zero(c, a);
    if (t == Truth::no && !complete) return Truth::ambiguous;
    return t;
}

Truth is_zero(const ScalarExpr& e, const AssumptionSet& a) {
    return decide_zero(e.apply(a), a);
}

std::pair<std::vector<ParamRational>, std::vector<int>> cluster_exponents(const std::vector<ParamRational>& exps,
                                                                          const AssumptionSet& a) {
    std::vector<ParamRational> reps;
    std::vector<int> index;
    std::vector<std::string> undecided;
    for (auto& raw : exps) {
        ParamRational e = a.apply(raw);
        int found = -1;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            Truth t = a.is_zero(e - reps[k]);
            if (t == Truth::yes) {
                found = static_cast<int>(k);
                break;
            }
            if (t == Truth::ambiguous) {
                std::string d = (e - reps[k]).str();
                if (std::find(undecided.begin(), undecided.end(), d) == undecided.end()) undecided.push_back(d);
            }
        }
        if (found < 0) {
            reps.push_back(e);
            found = static_cast<int>(reps.size()) - 1;
        }
        index.push_back(found);
    }
    if (!undecided.empty()) {
        std::string msg = "undecided exponent differences:";
        for (auto& d : undecided) msg += " [" + d + "]";
        throw CaseSplitError(msg, undecided);
    }
    return {reps, index};
}

bool exponent_order(const ParamRational& a, const ParamRational& b) {
    bool ca = a.is_constant(), cb = b.is_constant();
    if (ca != cb) return ca;
    if (ca) return a.to_rational() < b.to_rational();
    int da = a.num().leading().first.degree();
    int db = b.num().leading().first.degree();
    std::string sa = a.str(), sb = b.str();
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (da != db) return da < db;
    return sa < sb;
}

std::vector<std::pair<ParamRational, ScalarExpr>> group_by_power(const ScalarExpr& e, const std::string& c,
                                                                 const AssumptionSet& a) {
    ScalarExpr r = e.apply(a);
    std::vector<ParamRational> exps;
    std::vector<std::pair<PowerMap, ParamRational>> ts(r.terms().begin(), r.terms().end());
    for (auto& [pm, coeff] : ts) {
        auto it = pm.find(c);
        exps.push_back(it == pm.end() ? ParamRational() : it->second);
    }
    auto [reps, index] = cluster_exponents(exps, a);
    std::vector<std::pair<ParamRational, ScalarExpr>> groups;
    for (auto& rep : reps) groups.push_back({rep, ScalarExpr()});
    for (std::size_t i = 0; i < ts.size(); ++i) {
        PowerMap rest = ts[i].first;
        rest.erase(c);
        groups[index[i]].second += ScalarExpr::term(rest, ts[i].second);
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](auto& x, auto& y) { return exponent_order(x.first, y.first); });
    return groups;
}

}  // namespace eds
