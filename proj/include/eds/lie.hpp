#pragma once

#include "eds/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eds {

// A generator name or a formal bracket of two symbols.
class LieSymbol {
public:
    LieSymbol() = default;
    static LieSymbol gen(const std::string& name);
    static LieSymbol bracket(const LieSymbol& a, const LieSymbol& b);

    bool is_generator() const { return args_.empty(); }
    const std::string& name() const { return name_; }
    const LieSymbol& left() const { return args_.at(0); }
    const LieSymbol& right() const { return args_.at(1); }
    std::set<std::string> generators() const;

    bool operator<(const LieSymbol& o) const;
    bool operator==(const LieSymbol& o) const { return name_ == o.name_ && args_ == o.args_; }
    bool operator!=(const LieSymbol& o) const { return !(*this == o); }
    std::string str() const;

private:
    std::string name_;
    std::vector<LieSymbol> args_;
};

bool natural_less(const std::string& a, const std::string& b);

class LieExpr {
public:
    LieExpr() = default;
    static LieExpr symbol(const LieSymbol& s, const ScalarExpr& coeff = ScalarExpr(1));
    static LieExpr gen(const std::string& name, const ScalarExpr& coeff = ScalarExpr(1));

    const std::map<LieSymbol, ScalarExpr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }  // structural
    bool has_formal_brackets() const;
    std::set<std::string> generators() const;
    ScalarExpr coefficient(const LieSymbol& s) const;

    LieExpr operator+(const LieExpr& o) const;
    LieExpr operator-(const LieExpr& o) const;
    LieExpr operator-() const;
    LieExpr operator*(const ScalarExpr& f) const;
    LieExpr& operator+=(const LieExpr& o) { return *this = *this + o; }
    LieExpr map_coefficients(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;
    LieExpr apply(const AssumptionSet& a) const;

    bool operator==(const LieExpr& o) const { return (*this - o).is_zero(); }
    std::string str() const;

private:
    void add(const LieSymbol& s, const ScalarExpr& c);
    std::map<LieSymbol, ScalarExpr> terms_;
};

Truth is_zero(const LieExpr& e, const AssumptionSet& a, const Chart& chart);
// Applies the assumptions and drops terms whose coefficient provably vanishes.
LieExpr simplify(const LieExpr& e, const AssumptionSet& a, const Chart& chart);

// Partial bracket table. Entries are stored on ordered pairs (a < b) with the
// sign carried by the lookup. A closed table treats every pair of its
// generators without an entry as zero.
class RelationTable {
public:
    void set(const LieSymbol& a, const LieSymbol& b, const LieExpr& value);
    void set(const std::string& a, const std::string& b, const LieExpr& value) {
        set(LieSymbol::gen(a), LieSymbol::gen(b), value);
    }
    std::optional<LieExpr> lookup(const LieSymbol& a, const LieSymbol& b) const;
    void add_generator(const std::string& g) { gens_.insert(g); }
    void set_closed(bool c) { closed_ = c; }
    bool closed() const { return closed_; }

    const std::map<std::pair<LieSymbol, LieSymbol>, LieExpr>& entries() const { return entries_; }
    // Declared generators plus every generator referenced by an entry.
    std::vector<std::string> generators() const;
    std::vector<std::string> render() const;

private:
    std::map<std::pair<LieSymbol, LieSymbol>, LieExpr> entries_;
    std::set<std::string, bool (*)(const std::string&, const std::string&)> gens_{natural_less};
    bool closed_ = false;
};

LieExpr bracket(const LieExpr& a, const LieExpr& b, const RelationTable& t);
// Rewrites every formal bracket through the table where an entry exists.
LieExpr resolve(const LieExpr& e, const RelationTable& t);

struct JacobiFinding {
    std::vector<std::string> triple;
    LieExpr residual;
};

struct JacobiReport {
    std::vector<JacobiFinding> violations;
    std::vector<JacobiFinding> undecidable;
    bool consistent() const { return violations.empty(); }
};

JacobiReport jacobi_audit(const RelationTable& t, const std::vector<std::string>& gens, const AssumptionSet& a,
                          const Chart& chart);

using Realization = std::map<std::string, LieExpr>;

// Fully substituted image of every mapped generator; throws on cycles.
Realization realization_closure(const Realization& r);

LieExpr apply_realization(const LieExpr& e, const Realization& r, const RelationTable& t);

struct RelationCheck {
    std::string label;  // "[Xi, Xj] = value"
    LieExpr residual;
    Truth satisfied = Truth::yes;
};

struct RealizedTable {
    RelationTable table;
    std::vector<RelationCheck> checks;  // relations whose keys were substituted away
};

RealizedTable apply_realization(const RelationTable& t, const Realization& r, const AssumptionSet& a,
                                const Chart& chart);

}  // namespace eds
