#include "eds/lie.hpp"

#include "eds/error.hpp"

#include <algorithm>
#include <cctype>

namespace eds {

namespace {

constexpr int kMaxResolveDepth = 64;

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

LieSymbol LieSymbol::gen(const std::string& name) {
    LieSymbol s;
    s.name_ = name;
    return s;
}

LieSymbol LieSymbol::bracket(const LieSymbol& a, const LieSymbol& b) {
    LieSymbol s;
    s.args_ = {a, b};
    return s;
}

std::set<std::string> LieSymbol::generators() const {
    if (is_generator()) return {name_};
    auto l = left().generators();
    auto r = right().generators();
    l.insert(r.begin(), r.end());
    return l;
}

bool LieSymbol::operator<(const LieSymbol& o) const {
    if (is_generator() != o.is_generator()) return is_generator();
    if (is_generator()) {
        if (name_ == o.name_) return false;
        return natural_less(name_, o.name_);
    }
    if (left() != o.left()) return left() < o.left();
    return right() < o.right();
}

std::string LieSymbol::str() const {
    if (is_generator()) return name_;
    return "[" + left().str() + ", " + right().str() + "]";
}

LieExpr LieExpr::symbol(const LieSymbol& s, const ScalarExpr& coeff) {
    LieExpr e;
    e.add(s, coeff);
    return e;
}

LieExpr LieExpr::gen(const std::string& name, const ScalarExpr& coeff) {
    return symbol(LieSymbol::gen(name), coeff);
}

void LieExpr::add(const LieSymbol& s, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool LieExpr::has_formal_brackets() const {
    for (auto& [s, c] : terms_)
        if (!s.is_generator()) return true;
    return false;
}

std::set<std::string> LieExpr::generators() const {
    std::set<std::string> out;
    for (auto& [s, c] : terms_) {
        auto g = s.generators();
        out.insert(g.begin(), g.end());
    }
    return out;
}

ScalarExpr LieExpr::coefficient(const LieSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? ScalarExpr() : it->second;
}

LieExpr LieExpr::operator+(const LieExpr& o) const {
    LieExpr r = *this;
    for (auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

LieExpr LieExpr::operator-(const LieExpr& o) const {
    return *this + (-o);
}

LieExpr LieExpr::operator-() const {
    LieExpr r;
    for (auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
}

LieExpr LieExpr::operator*(const ScalarExpr& f) const {
    LieExpr r;
    for (auto& [s, c] : terms_) r.add(s, c * f);
    return r;
}

LieExpr LieExpr::map_coefficients(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
    LieExpr r;
    for (auto& [s, c] : terms_) r.add(s, f(c));
    return r;
}

LieExpr LieExpr::apply(const AssumptionSet& a) const {
    return map_coefficients([&](const ScalarExpr& c) { return c.apply(a); });
}

namespace {

bool has_top_level_space(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ' ' && depth == 0) return true;
    }
    return false;
}

}  // namespace

std::string LieExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [s, c] : terms_) {
        std::string coeff;
        bool negative = false;
        if (c == ScalarExpr(1)) {
        } else if (c == ScalarExpr(-1)) {
            negative = true;
        } else if (c.is_single_term()) {
            auto& [pm, k] = *c.terms().begin();
            if (!k.is_zero() && k.is_constant() && k.to_rational() < 0) {
                negative = true;
                coeff = render_term(pm, -k);
            } else {
                coeff = c.str();
            }
            if (has_top_level_space(coeff)) {
                coeff = "(" + coeff + ")";
            } else if (!negative && coeff[0] == '-') {
                negative = true;
                coeff = coeff.substr(1);
            }
            if (coeff == "1") coeff.clear();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff.empty() ? s.str() : coeff + "*" + s.str();
        first = false;
    }
    return out;
}

Truth is_zero(const LieExpr& e, const AssumptionSet& a, const Chart& chart) {
    Truth out = Truth::yes;
    for (auto& [s, c] : e.terms()) {
        Truth z = is_zero(c, a, chart);
        if (z == Truth::no) return Truth::no;
        if (z == Truth::ambiguous) out = Truth::ambiguous;
    }
    return out;
}

LieExpr simplify(const LieExpr& e, const AssumptionSet& a, const Chart& chart) {
    LieExpr r, applied = e.apply(a);
    for (auto& [s, c] : applied.terms())
        if (is_zero(c, a, chart) != Truth::yes) r += LieExpr::symbol(s, c);
    return r;
}

void RelationTable::set(const LieSymbol& a, const LieSymbol& b, const LieExpr& value) {
    if (a == b) throw Error("bracket of " + a.str() + " with itself is always zero");
    if (b < a) {
        set(b, a, -value);
        return;
    }
    if (value.terms().count(LieSymbol::bracket(a, b)))
        throw Error("relation for " + LieSymbol::bracket(a, b).str() + " refers to itself");
    for (auto& g : a.generators()) gens_.insert(g);
    for (auto& g : b.generators()) gens_.insert(g);
    for (auto& g : value.generators()) gens_.insert(g);
    entries_[{a, b}] = value;
}

std::optional<LieExpr> RelationTable::lookup(const LieSymbol& a, const LieSymbol& b) const {
    if (a == b) return LieExpr();
    bool swap = b < a;
    const LieSymbol& lo = swap ? b : a;
    const LieSymbol& hi = swap ? a : b;
    auto it = entries_.find({lo, hi});
    if (it != entries_.end()) return swap ? -it->second : it->second;
    if (closed_ && lo.is_generator() && hi.is_generator() && gens_.count(lo.name()) && gens_.count(hi.name()))
        return LieExpr();
    return std::nullopt;
}

std::vector<std::string> RelationTable::generators() const {
    return {gens_.begin(), gens_.end()};
}

std::vector<std::string> RelationTable::render() const {
    std::vector<std::string> out;
    for (auto& [k, v] : entries_) out.push_back(LieSymbol::bracket(k.first, k.second).str() + " = " + v.str());
    return out;
}

namespace {

LieExpr resolve_at(const LieExpr& e, const RelationTable& t, int depth);

LieExpr bracket_symbols(const LieSymbol& a, const LieSymbol& b, const RelationTable& t, int depth) {
    if (depth > kMaxResolveDepth) throw Error("bracket relations do not terminate near " + LieSymbol::bracket(a, b).str());
    if (a == b) return LieExpr();
    if (auto v = t.lookup(a, b)) return resolve_at(*v, t, depth + 1);
    if (b < a) return -LieExpr::symbol(LieSymbol::bracket(b, a));
    return LieExpr::symbol(LieSymbol::bracket(a, b));
}

LieExpr bracket_at(const LieExpr& a, const LieExpr& b, const RelationTable& t, int depth) {
    LieExpr out;
    for (auto& [sa, ca] : a.terms())
        for (auto& [sb, cb] : b.terms()) {
            if (sa == sb) continue;
            out += bracket_symbols(sa, sb, t, depth) * (ca * cb);
        }
    return out;
}

LieExpr resolve_symbol(const LieSymbol& s, const RelationTable& t, int depth) {
    if (s.is_generator()) return LieExpr::symbol(s);
    LieExpr l = resolve_symbol(s.left(), t, depth + 1);
    LieExpr r = resolve_symbol(s.right(), t, depth + 1);
    return bracket_at(l, r, t, depth + 1);
}

LieExpr resolve_at(const LieExpr& e, const RelationTable& t, int depth) {
    if (!e.has_formal_brackets()) return e;
    LieExpr out;
    for (auto& [s, c] : e.terms()) out += resolve_symbol(s, t, depth) * c;
    return out;
}

}  // namespace

LieExpr bracket(const LieExpr& a, const LieExpr& b, const RelationTable& t) {
    return bracket_at(resolve_at(a, t, 0), resolve_at(b, t, 0), t, 0);
}

LieExpr resolve(const LieExpr& e, const RelationTable& t) {
    return resolve_at(e, t, 0);
}

JacobiReport jacobi_audit(const RelationTable& t, const std::vector<std::string>& gens, const AssumptionSet& a,
                          const Chart& chart) {
    JacobiReport rep;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            for (std::size_t k = j + 1; k < gens.size(); ++k) {
                LieExpr x = LieExpr::gen(gens[i]), y = LieExpr::gen(gens[j]), z = LieExpr::gen(gens[k]);
                LieExpr yz = bracket(y, z, t), zx = bracket(z, x, t), xy = bracket(x, y, t);
                std::vector<std::string> triple{gens[i], gens[j], gens[k]};
                bool inner_formal = yz.has_formal_brackets() || zx.has_formal_brackets() || xy.has_formal_brackets();
                LieExpr sum = simplify(bracket(x, yz, t) + bracket(y, zx, t) + bracket(z, xy, t), a, chart);
                Truth zero = is_zero(sum, a, chart);
                if (zero == Truth::yes) continue;
                if (inner_formal || sum.has_formal_brackets() || zero == Truth::ambiguous) {
                    rep.undecidable.push_back({triple, sum});
                } else {
                    rep.violations.push_back({triple, sum});
                }
            }
    return rep;
}

Realization realization_closure(const Realization& r) {
    Realization out;
    std::set<std::string> visiting;
    std::function<LieExpr(const std::string&)> image = [&](const std::string& g) -> LieExpr {
        if (auto it = out.find(g); it != out.end()) return it->second;
        auto it = r.find(g);
        if (it == r.end() || it->second == LieExpr::gen(g)) return LieExpr::gen(g);
        if (visiting.count(g)) throw Error("realization is cyclic through " + g);
        visiting.insert(g);
        LieExpr img;
        for (auto& [s, c] : it->second.terms()) {
            if (!s.is_generator()) throw UnsupportedError("realization images must be combinations of generators: " + g);
            img += image(s.name()) * c;
        }
        visiting.erase(g);
        out[g] = img;
        return img;
    };
    for (auto& [g, v] : r) out[g] = image(g);
    return out;
}

namespace {

LieExpr image_of(const LieSymbol& s, const Realization& rc, const RelationTable& t) {
    if (s.is_generator()) {
        auto it = rc.find(s.name());
        return it == rc.end() ? LieExpr::symbol(s) : it->second;
    }
    return bracket(image_of(s.left(), rc, t), image_of(s.right(), rc, t), t);
}

LieExpr substitute_closed(const LieExpr& e, const Realization& rc, const RelationTable& t) {
    LieExpr out;
    for (auto& [s, c] : e.terms()) out += image_of(s, rc, t) * c;
    return resolve(out, t);
}

bool touches(const LieSymbol& s, const Realization& rc) {
    for (auto& g : s.generators()) {
        auto it = rc.find(g);
        if (it != rc.end() && !(it->second == LieExpr::gen(g))) return true;
    }
    return false;
}

}  // namespace

LieExpr apply_realization(const LieExpr& e, const Realization& r, const RelationTable& t) {
    return substitute_closed(e, realization_closure(r), t);
}

RealizedTable apply_realization(const RelationTable& t, const Realization& r, const AssumptionSet& a,
                                const Chart& chart) {
    Realization rc = realization_closure(r);
    RealizedTable out;
    out.table.set_closed(t.closed());
    for (auto& g : t.generators()) {
        auto it = rc.find(g);
        if (it == rc.end() || it->second == LieExpr::gen(g)) out.table.add_generator(g);
    }

    RelationTable empty;
    std::vector<std::pair<std::pair<LieSymbol, LieSymbol>, LieExpr>> staged;
    for (auto& [k, v] : t.entries()) {
        if (touches(k.first, rc) || touches(k.second, rc)) continue;
        LieExpr val = simplify(substitute_closed(v, rc, empty), a, chart);
        staged.push_back({k, val});
        out.table.set(k.first, k.second, val);
    }
    for (auto& [k, v] : staged) out.table.set(k.first, k.second, simplify(resolve(v, out.table), a, chart));

    for (auto& [k, v] : t.entries()) {
        if (!touches(k.first, rc) && !touches(k.second, rc)) continue;
        LieExpr lhs = bracket(image_of(k.first, rc, out.table), image_of(k.second, rc, out.table), out.table);
        LieExpr rhs = substitute_closed(v, rc, out.table);
        RelationCheck chk;
        chk.label = LieSymbol::bracket(k.first, k.second).str() + " = " + v.str();
        chk.residual = simplify(lhs - rhs, a, chart);
        chk.satisfied = is_zero(chk.residual, a, chart);
        if (chk.satisfied == Truth::no && chk.residual.has_formal_brackets()) chk.satisfied = Truth::ambiguous;
        out.checks.push_back(chk);
    }
    return out;
}

}  // namespace eds
