#pragma once

#include "eds/exterior.hpp"
#include "eds/lie.hpp"

#include <map>
#include <string>
#include <vector>

namespace eds {

// eta = A dx + B dt with Lie-valued profiles over the system's chart.
struct Connection {
    std::string name;
    LieExpr A;
    LieExpr B;
};

using LieForm = std::map<Basis, LieExpr, BasisLess>;

std::string lie_form_str(const LieForm& f);

// dA^dx + dB^dt + [A,B] dx^dt, split by Lie basis symbol.
std::map<LieSymbol, DifferentialForm> curvature(const Connection& conn, const ExteriorSystem& sys,
                                                const RelationTable& table);

struct CurvatureResult {
    Truth zero = Truth::yes;
    std::vector<std::map<LieSymbol, Fraction>> lambdas;  // one per generator of the system
    LieForm residual;  // numerators over a common denominator per component
};

std::string render_lambda(const std::map<LieSymbol, Fraction>& l);

CurvatureResult curvature_residual(const Connection& conn, const ExteriorSystem& sys, const RelationTable& table);

struct ComponentEquation {
    std::string equation;  // e.g. "A_u + B_q = 0"
    LieExpr residual;      // value on the connection
    Truth satisfied = Truth::yes;
};

struct PdeFormReport {
    std::vector<ComponentEquation> equations;
    bool all_satisfied() const;
};

// Derives the component equations of the prolongation condition from a
// generic connection (symbols A_c, B_c, K = [A,B]) and evaluates them on conn.
PdeFormReport pde_form_check(const Connection& conn, const ExteriorSystem& sys, const RelationTable& table);

struct Constraint {
    std::string exponent;  // power product the relation multiplies, e.g. "u^(n + 1)"
    LieExpr relation;      // relation = 0
};

std::vector<Constraint> extract_constraints(const Connection& conn, const ExteriorSystem& sys,
                                            const RelationTable& table, const AssumptionSet& a,
                                            const std::string& coordinate = "u");

std::string render(const Constraint& c);

struct ConstraintMatch {
    std::vector<std::string> unmatched_expected;
    std::vector<std::string> unmatched_found;
    bool equivalent() const { return unmatched_expected.empty() && unmatched_found.empty(); }
};

// Equality of two relation lists up to nonzero scalar factors, after
// resolving both through the table.
ConstraintMatch compare_constraints(const std::vector<LieExpr>& found, const std::vector<LieExpr>& expected,
                                    const RelationTable& table, const AssumptionSet& a, const Chart& chart);

struct CaseReport {
    std::vector<RelationCheck> standing;     // table relations touched by the realization
    std::vector<RelationCheck> constraints;  // each supplied relation after realization
    RelationTable final_table;
    JacobiReport jacobi;
    bool verified() const;
};

CaseReport verify_case(const std::vector<LieExpr>& constraints, const RelationTable& base, const Realization& r,
                       const AssumptionSet& a, const Chart& chart);

}  // namespace eds
