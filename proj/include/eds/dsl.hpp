#pragma once

#include "eds/backlund.hpp"
#include "eds/conserve.hpp"
#include "eds/prolong.hpp"

#include <string>
#include <vector>

namespace eds {

struct NamedRealization {
    std::string name;
    Realization map;
};

struct NamedCase {
    std::string name;
    AssumptionSet assumptions;
};

struct NamedTable {
    std::string name;
    RelationTable table;
};

struct NamedConstraints {
    std::string name;
    std::vector<LieExpr> relations;  // each relation = 0
};

struct SystemFile {
    ExteriorSystem system;
    std::vector<std::string> param_values;  // params whose value came from their declaration line
    std::vector<std::string> lie_generators;
    RelationTable table;  // `bracket` lines
    std::vector<Connection> connections;
    std::vector<NamedRealization> realizations;
    std::vector<ConservationCandidate> conservation;
    std::vector<BacklundSystem> backlund;
    std::vector<NamedCase> cases;
    std::vector<NamedTable> tables;
    std::vector<NamedConstraints> constraints;

    const Connection& connection(const std::string& name) const;
    const NamedRealization& realization(const std::string& name) const;
    const ConservationCandidate& candidate(const std::string& name) const;
    const BacklundSystem& backlund_system(const std::string& name) const;
    const NamedCase& assumption_case(const std::string& name) const;
    const NamedTable& named_table(const std::string& name) const;
    const NamedConstraints& constraint_set(const std::string& name) const;
};

SystemFile parse_system(const std::string& source);
SystemFile load_system(const std::string& path);

// Parses `lhs = rhs` or `lhs != rhs` over the file's parameters into a.
void parse_relation(const SystemFile& f, const std::string& text, AssumptionSet& a);
// Parses a scalar, form or Lie expression in the file's scope.
ScalarExpr parse_scalar(const SystemFile& f, const std::string& text);
DifferentialForm parse_form(const SystemFile& f, const std::string& text);
LieExpr parse_lie(const SystemFile& f, const std::string& text);

std::string render_form(const DifferentialForm& f);
std::string render_system(const SystemFile& f);

}  // namespace eds
