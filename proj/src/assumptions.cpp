#include "eds/assumptions.hpp"

#include "eds/error.hpp"

namespace eds {

const char* to_string(Truth t) {
    switch (t) {
        case Truth::yes: return "yes";
        case Truth::no: return "no";
        default: return "ambiguous";
    }
}

void AssumptionSet::add_substitution(const std::string& param, const ParamRational& value) {
    ParamRational v = apply(value);
    if (v == apply(ParamRational::param(param))) return;  // already implied
    if (v.params().count(param)) throw Error("equality for " + param + " is circular");
    for (auto& [name, val] : subs_) val = val.substitute(param, v);
    subs_.push_back({param, v});
}

void AssumptionSet::add_equality(const ParamRational& expr) {
    ParamRational e = apply(expr);
    if (e.is_zero()) return;
    const Poly& p = e.num();
    auto vars = p.vars();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (p.degree_in(*it) != 1) continue;
        Poly c = p.coefficient(*it, 1);
        if (!c.is_constant()) continue;
        Poly rest = p - p.coefficient(*it, 1) * Poly::var(*it);
        add_substitution(*it, ParamRational(-rest) / ParamRational(c));
        return;
    }
    throw Error("cannot solve equality " + e.str() + " = 0 for a parameter");
}

void AssumptionSet::add_disequality(const ParamRational& expr) {
    diseqs_.push_back(expr);
}

AssumptionSet AssumptionSet::merged(const AssumptionSet& other) const {
    AssumptionSet r = *this;
    // Fresh substitutions first so that overlapping ones reduce to identities
    // instead of re-solving an equality for a different parameter.
    std::vector<std::pair<std::string, ParamRational>> overlapping;
    for (auto& [name, val] : other.subs_) {
        if (r.apply(ParamRational::param(name)) == ParamRational::param(name))
            r.add_substitution(name, val);
        else
            overlapping.push_back({name, val});
    }
    for (auto& [name, val] : overlapping) r.add_equality(r.apply(ParamRational::param(name)) - val);
    for (auto& d : other.diseqs_) r.diseqs_.push_back(d);
    r.nonzero_.insert(other.nonzero_.begin(), other.nonzero_.end());
    r.integer_.insert(other.integer_.begin(), other.integer_.end());
    return r;
}

ParamRational AssumptionSet::apply(const ParamRational& r) const {
    ParamRational out = r;
    for (auto& [name, val] : subs_) out = out.substitute(name, val);
    return out;
}

bool AssumptionSet::provably_nonzero(const ParamRational& r) const {
    ParamRational e = apply(r);
    if (e.is_zero()) return false;
    if (e.is_constant()) return true;
    Poly p = e.num();

    std::vector<Poly> factors;
    for (auto& name : nonzero_)
        if (apply(ParamRational::param(name)) == ParamRational::param(name)) factors.push_back(Poly::var(name));
    for (auto& d : diseqs_) {
        ParamRational a = apply(d);
        if (a.is_zero()) continue;
        if (!a.num().is_constant()) factors.push_back(a.num());
    }
    bool changed = true;
    while (changed && !p.is_constant()) {
        changed = false;
        for (auto& f : factors) {
            if (auto q = Poly::divide_exact(p, f)) {
                p = *q;
                changed = true;
                if (p.is_constant()) break;
            }
        }
    }
    if (p.is_constant()) return true;

    auto vars = p.vars();
    if (vars.size() == 1 && integer_.count(*vars.begin()) && p.degree_in(*vars.begin()) == 1) {
        const std::string& v = *vars.begin();
        Rational a = p.coefficient(v, 1).constant();
        Rational b = p.coefficient(v, 0).constant();
        Rational root = -b / a;
        if (root.get_den() != 1) return true;
    }
    return false;
}

Truth AssumptionSet::is_zero(const ParamRational& r) const {
    ParamRational e = apply(r);
    if (e.is_zero()) return Truth::yes;
    if (provably_nonzero(e)) return Truth::no;
    return Truth::ambiguous;
}

void AssumptionSet::check_consistent() const {
    for (auto& d : diseqs_)
        if (apply(d).is_zero()) throw Error("assumptions are inconsistent: " + d.str() + " != 0 fails");
    for (auto& name : nonzero_)
        if (apply(ParamRational::param(name)).is_zero())
            throw Error("assumptions are inconsistent: " + name + " is flagged nonzero");
}

std::vector<std::string> AssumptionSet::describe() const {
    std::vector<std::string> out;
    for (auto& [name, val] : subs_) out.push_back(name + " = " + val.str());
    for (auto& d : diseqs_) out.push_back(d.str() + " != 0");
    for (auto& n : nonzero_) out.push_back(n + " nonzero");
    for (auto& n : integer_) out.push_back(n + " integer");
    return out;
}

}  // namespace eds
