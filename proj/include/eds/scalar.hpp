#pragma once

#include "eds/assumptions.hpp"
#include "eds/param_rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eds {

struct JetInfo {
    std::string base;
    std::string multi;  // x's before t's, e.g. "xxt"
    int order() const { return static_cast<int>(multi.size()); }
};

// Auxiliary coordinate bound to a linear combination of base coordinates,
// e.g. xi = u - q.
struct AuxDefinition {
    std::string name;
    std::vector<std::pair<std::string, ParamRational>> terms;
};

constexpr int kMaxJetOrder = 3;

// Fixed coordinate set of a system: base coordinates (x and t are the
// independent ones), auxiliary coordinates, pseudopotentials (y: only their
// jets are used), and jets of base/pseudopotential coordinates named
// base_multi.
class Chart {
public:
    void add_base(const std::string& name);
    void add_aux(AuxDefinition def);
    void add_potential(const std::string& name);

    const std::vector<std::string>& base() const { return base_; }
    // Base coordinates in differential order x < t < u < p < q < v < y < others.
    std::vector<std::string> differentials() const;
    std::vector<std::string> fibre() const;  // base without x, t
    const std::vector<AuxDefinition>& aux() const { return aux_; }
    const std::vector<std::string>& potentials() const { return potentials_; }

    bool is_base(const std::string& n) const;
    bool is_aux(const std::string& n) const;
    bool is_potential(const std::string& n) const;
    static bool is_independent(const std::string& n) { return n == "x" || n == "t"; }
    const AuxDefinition* aux_def(const std::string& n) const;
    std::optional<JetInfo> jet(const std::string& n) const;
    bool is_coordinate(const std::string& n) const;

    static std::string jet_name(const std::string& base, const std::string& multi);
    static std::string sort_multi(const std::string& multi);

private:
    std::vector<std::string> base_;
    std::vector<AuxDefinition> aux_;
    std::vector<std::string> potentials_;
};

// Order used for differentials in wedge monomials.
bool differential_less(const std::string& a, const std::string& b);

using PowerMap = std::map<std::string, ParamRational>;

// Finite sum of coeff * prod(coord^exponent) with parameter-rational
// coefficients and exponents. Terms with mathematically equal exponent maps
// are merged; zero coefficients and zero exponents are dropped.
class ScalarExpr {
public:
    ScalarExpr() = default;
    ScalarExpr(const ParamRational& c);
    ScalarExpr(long c) : ScalarExpr(ParamRational(c)) {}
    static ScalarExpr coord(const std::string& name, const ParamRational& exp = 1);
    static ScalarExpr param(const std::string& name);
    static ScalarExpr term(const PowerMap& powers, const ParamRational& coeff);
    static ScalarExpr from_terms(const std::vector<std::pair<PowerMap, ParamRational>>& ts);

    const std::map<PowerMap, ParamRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }  // structural
    bool is_constant() const;
    ParamRational constant() const;  // coefficient of the empty power map
    bool is_single_term() const { return terms_.size() == 1; }
    std::set<std::string> coordinates() const;
    std::set<std::string> params() const;
    ParamRational exponent_of(const std::string& c) const;  // single-term only

    ScalarExpr operator+(const ScalarExpr& o) const;
    ScalarExpr operator-(const ScalarExpr& o) const;
    ScalarExpr operator*(const ScalarExpr& o) const;
    ScalarExpr operator-() const;
    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
    ScalarExpr scaled(const ParamRational& c) const;
    // Single terms take any exponent (coefficient must then be 1 or the
    // exponent an integer); sums only nonnegative integer exponents.
    ScalarExpr pow(const ParamRational& e) const;
    ScalarExpr inverse() const;  // single-term only

    ScalarExpr apply(const AssumptionSet& a) const;
    ScalarExpr substitute_param(const std::string& name, const ParamRational& value) const;

    bool operator==(const ScalarExpr& o) const;  // exact normal-form equality
    bool operator!=(const ScalarExpr& o) const { return !(*this == o); }
    bool operator<(const ScalarExpr& o) const { return terms_ < o.terms_; }

    std::string str() const;
    // Safe as a factor in a product.
    std::string factor_str() const;

private:
    void normalize();
    std::map<PowerMap, ParamRational> terms_;
};

std::string render_term(const PowerMap& powers, const ParamRational& coeff);

ScalarExpr diff(const ScalarExpr& e, const std::string& c, const Chart& chart);
ScalarExpr total_diff(const ScalarExpr& e, char direction, const Chart& chart);
ScalarExpr total_diff(const ScalarExpr& e, const std::string& multi, const Chart& chart);
// Replace target^e by replacement^e; replacement must be a single term.
ScalarExpr subst(const ScalarExpr& e, const std::string& target, const ScalarExpr& replacement);
// Polynomial substitution: target may only carry nonnegative integer exponents.
ScalarExpr substitute(const ScalarExpr& e, const std::string& target, const ScalarExpr& value);

// Rewrites auxiliary coordinates' defining base coordinates in terms of the
// auxiliary coordinate where possible, giving a representation in which
// distinct power products are independent. Used only by zero tests.
ScalarExpr aux_canonical(const ScalarExpr& e, const Chart& chart, bool* complete = nullptr);

Truth is_zero(const ScalarExpr& e, const AssumptionSet& a, const Chart& chart);
Truth is_zero(const ScalarExpr& e, const AssumptionSet& a);

// Groups equal exponents of coordinate c. Exponent equalities that cannot be
// decided under a raise CaseSplitError listing the differences.
std::vector<std::pair<ParamRational, ScalarExpr>> group_by_power(const ScalarExpr& e, const std::string& c,
                                                                 const AssumptionSet& a);
// Display order for exponents: constants ascending, then symbolic ones.
bool exponent_order(const ParamRational& a, const ParamRational& b);
// Index of the cluster for each exponent, with representative exponents.
std::pair<std::vector<ParamRational>, std::vector<int>> cluster_exponents(const std::vector<ParamRational>& exps,
                                                                          const AssumptionSet& a);

}  // namespace eds
