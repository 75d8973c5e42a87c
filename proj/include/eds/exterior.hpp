#pragma once

#include "eds/form.hpp"
#include "eds/linsolve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eds {

struct Parameter {
    std::string name;
    bool nonzero = false;
    bool integer = false;
};

struct NamedForm {
    std::string name;
    DifferentialForm form;
};

struct ExteriorSystem {
    std::string name;
    std::vector<Parameter> params;
    AssumptionSet assumptions;
    Chart chart;
    std::vector<NamedForm> generators;

    int min_generator_degree() const;
};

// target * denominator = sum_i multipliers[i] ^ generators[i]
struct IdealCertificate {
    DifferentialForm target;
    std::vector<DifferentialForm> multipliers;
    ScalarExpr denominator = ScalarExpr(1);

    DifferentialForm expansion_residual(const ExteriorSystem& sys) const;
    Truth verify(const ExteriorSystem& sys) const;
};

struct Reduction {
    Truth in_ideal = Truth::no;  // ambiguous never escapes: a CaseSplitError is thrown instead
    IdealCertificate certificate;
    FractionVector residual;  // irreducible leftover when not in the ideal
};

Reduction ideal_reduce(const DifferentialForm& target, const ExteriorSystem& sys);

struct ClosureResult {
    std::string generator;
    DifferentialForm derivative;
    Reduction reduction;
};

std::vector<ClosureResult> check_closed(const ExteriorSystem& sys);

// Images of the base differentials on a transversal section:
// dc -> (dx coefficient, dt coefficient).
struct JetSubstitution {
    std::map<std::string, std::pair<ScalarExpr, ScalarExpr>> images;
    static JetSubstitution standard(const Chart& chart);
};

// Pullback of a 2-form; throws if it leaves a component outside dx^dt.
ScalarExpr pullback_2form(const DifferentialForm& f, const JetSubstitution& s);
std::vector<ScalarExpr> section(const ExteriorSystem& sys, const JetSubstitution& s);

struct Definition {
    std::string var;
    ScalarExpr value;
};

// Solves residuals[0..k-2] in turn for fibre coordinates other than `primary`
// that appear linearly with constant coefficient. Throws when the residuals
// are not triangular in this sense.
std::vector<Definition> solve_definitions(const std::vector<ScalarExpr>& residuals, const Chart& chart,
                                          const std::string& primary);
// Substitutes the definitions (and their total derivatives for jets) into
// every residual, returning the last one, normalized so that its u_t
// coefficient is 1 when that coefficient is a constant.
ScalarExpr eliminate(const std::vector<ScalarExpr>& residuals, const std::vector<Definition>& defs,
                     const Chart& chart, const std::string& primary);
ScalarExpr substitute_definitions(const ScalarExpr& e, const std::vector<Definition>& defs, const Chart& chart);

}  // namespace eds
