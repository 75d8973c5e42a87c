#include "eds/report.hpp"

#include "eds/error.hpp"

#include <sstream>

namespace eds {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::failed: return "failed";
        default: return "ambiguous";
    }
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::verified: return 0;
        case Verdict::failed: return 1;
        default: return 3;
    }
}

void Report::downgrade(Verdict v) {
    if (v == Verdict::failed || (v == Verdict::ambiguous && verdict == Verdict::verified)) verdict = v;
}

Json Report::to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["system"] = system;
    j["verdict"] = to_string(verdict);
    j["seed"] = seed ? Json(*seed) : Json();
    j["certificates"] = certificates;
    j["constraints"] = constraints;
    j["violations"] = violations;
    j["checks"] = checks;
    j["numeric"] = numeric;
    j["undecided"] = undecided;
    j["results"] = results;
    return j;
}

std::string Report::machine() const { return to_json().dump(2) + "\n"; }

std::string Report::human() const {
    std::ostringstream o;
    o << "edsv " << kToolVersion << "  " << command << "  " << system << "\n";
    for (auto& l : lines) o << "  " << l << "\n";
    if (!undecided.empty()) {
        o << "  undecided:";
        for (auto& u : undecided) o << " [" << u << "]";
        o << "\n";
    }
    o << "verdict: " << to_string(verdict) << "\n";
    return o.str();
}

Report usage_error(const std::string& command, const std::string& message) {
    Report r;
    r.command = command;
    r.verdict = Verdict::failed;
    r.results["error"] = message;
    r.lines.push_back("error: " + message);
    return r;
}

namespace {

Verdict from_truth(Truth t) {
    switch (t) {
        case Truth::yes: return Verdict::verified;
        case Truth::no: return Verdict::failed;
        default: return Verdict::ambiguous;
    }
}

Json check_json(const RelationCheck& c) {
    Json j;
    j["label"] = c.label;
    j["residual"] = c.residual.str();
    j["satisfied"] = to_string(c.satisfied);
    return j;
}

Json finding_json(const JacobiFinding& f) {
    Json j;
    j["triple"] = f.triple;
    j["residual"] = f.residual.str();
    return j;
}

std::string triple_str(const std::vector<std::string>& t) {
    std::string s;
    for (auto& x : t) s += (s.empty() ? "" : ", ") + x;
    return "(" + s + ")";
}

ExteriorSystem with_assumptions(const SystemFile& f, const RunOptions& o) {
    ExteriorSystem sys = f.system;
    AssumptionSet extra;
    for (auto& rel : o.assume) parse_relation(f, rel, extra);
    sys.assumptions = sys.assumptions.merged(extra);
    if (!o.assume_case.empty()) sys.assumptions = sys.assumptions.merged(f.assumption_case(o.assume_case).assumptions);
    sys.assumptions.check_consistent();
    return sys;
}

void run_close(const ExteriorSystem& sys, Report& r) {
    for (auto& c : check_closed(sys)) {
        const IdealCertificate& cert = c.reduction.certificate;
        Json j;
        j["generator"] = c.generator;
        j["derivative"] = render_form(c.derivative);
        j["in_ideal"] = to_string(c.reduction.in_ideal);
        j["denominator"] = cert.denominator.str();
        Json ms = Json::array();
        std::string rhs;
        for (size_t i = 0; i < cert.multipliers.size(); ++i) {
            ms.push_back(render_form(cert.multipliers[i]));
            if (cert.multipliers[i].is_zero()) continue;
            rhs += (rhs.empty() ? "" : " + ") + std::string("(") + render_form(cert.multipliers[i]) + ") /\\ " +
                   sys.generators[i].name;
        }
        j["multipliers"] = ms;
        std::string lhs = "d(" + c.generator + ")";
        if (c.reduction.in_ideal == Truth::yes) {
            Truth v = cert.verify(sys);
            j["expansion_residual"] = render_form(cert.expansion_residual(sys));
            j["verified"] = to_string(v);
            if (!(cert.denominator == ScalarExpr(1))) lhs = cert.denominator.factor_str() + "*" + lhs;
            r.lines.push_back(lhs + " = " + (rhs.empty() ? "0" : rhs) + "  [" + to_string(v) + "]");
            r.downgrade(from_truth(v));
        } else {
            Json res = Json::object();
            for (auto& [b, fr] : c.reduction.residual) res[basis_str(b)] = fr.str();
            j["residual"] = res;
            j["verified"] = to_string(Truth::no);
            r.lines.push_back(lhs + " = " + render_form(c.derivative) + " is not in the ideal");
            r.downgrade(Verdict::failed);
        }
        r.certificates.push_back(j);
    }
}

void run_section(const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    auto residuals = section(sys, JetSubstitution::standard(sys.chart));
    Json rs = Json::array();
    for (size_t i = 0; i < residuals.size(); ++i) {
        residuals[i] = residuals[i].apply(sys.assumptions);
        rs.push_back(residuals[i].str());
        r.lines.push_back("S*" + sys.generators[i].name + " = (" + residuals[i].str() + ") dx /\\ dt");
    }
    r.results["residuals"] = rs;
    if (!o.eliminate) return;
    auto defs = solve_definitions(residuals, sys.chart, o.primary);
    Json ds = Json::array();
    for (auto& d : defs) {
        Json j;
        j["var"] = d.var;
        j["value"] = d.value.str();
        ds.push_back(j);
        r.lines.push_back(d.var + " = " + d.value.str());
    }
    ScalarExpr pde = eliminate(residuals, defs, sys.chart, o.primary).apply(sys.assumptions);
    r.results["definitions"] = ds;
    r.results["pde"] = pde.str();
    r.lines.push_back("pde: " + pde.str() + " = 0");
}

const RelationTable& pick_table(const SystemFile& f, const std::string& name) {
    if (name.empty() || name == "standing") return f.table;
    return f.named_table(name).table;
}

void run_prolong_connection(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    const Connection& conn = f.connection(o.connection);
    const RelationTable& table = pick_table(f, o.table);
    CurvatureResult cr = curvature_residual(conn, sys, table);
    Json ls = Json::array();
    for (size_t i = 0; i < cr.lambdas.size(); ++i) {
        std::string l = render_lambda(cr.lambdas[i]);
        ls.push_back(l);
        r.lines.push_back("lambda" + std::to_string(i + 1) + " = " + l);
    }
    Json res = Json::object();
    for (auto& [b, e] : cr.residual) res[basis_str(b)] = e.str();
    r.results["connection"] = conn.name;
    r.results["lambdas"] = ls;
    r.results["residual"] = res;
    r.results["curvature_zero"] = to_string(cr.zero);
    r.lines.push_back("curvature residual mod ideal: " + lie_form_str(cr.residual));

    PdeFormReport pf = pde_form_check(conn, sys, table);
    Json eqs = Json::array();
    for (auto& e : pf.equations) {
        Json j;
        j["equation"] = e.equation;
        j["residual"] = e.residual.str();
        j["satisfied"] = to_string(e.satisfied);
        eqs.push_back(j);
        r.lines.push_back("component " + e.equation + ": " + to_string(e.satisfied));
    }
    r.results["component_equations"] = eqs;
    bool agree = pf.all_satisfied() == (cr.zero == Truth::yes);
    r.results["component_check_agrees"] = agree;
    if (!agree) r.lines.push_back("component equations disagree with the curvature residual");
    r.downgrade(from_truth(cr.zero));
    if (!agree) r.downgrade(Verdict::failed);
}

void run_prolong_extract(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    if (o.assume_case.empty()) throw Error("--extract needs --assume-case NAME");
    const Connection& conn = f.connection(o.connection.empty() ? "family" : o.connection);
    const RelationTable& table = pick_table(f, o.table);
    const AssumptionSet& a = sys.assumptions;
    r.results["connection"] = conn.name;
    r.results["case"] = o.assume_case;
    auto cs = extract_constraints(conn, sys, table, a, o.primary);
    std::vector<LieExpr> found;
    for (auto& c : cs) {
        Json j;
        j["exponent"] = c.exponent;
        j["relation"] = c.relation.str();
        r.constraints.push_back(j);
        r.lines.push_back(render(c));
        found.push_back(c.relation);
    }
    if (o.expect.empty()) return;
    ConstraintMatch m = compare_constraints(found, f.constraint_set(o.expect).relations, table, a, sys.chart);
    r.results["expected"] = o.expect;
    r.results["unmatched_expected"] = m.unmatched_expected;
    r.results["unmatched_found"] = m.unmatched_found;
    for (auto& x : m.unmatched_expected) r.lines.push_back("expected but not found: " + x + " = 0");
    for (auto& x : m.unmatched_found) r.lines.push_back("found but not expected: " + x + " = 0");
    r.lines.push_back(std::string("matches ") + o.expect + ": " + (m.equivalent() ? "yes" : "no"));
    if (!m.equivalent()) r.downgrade(Verdict::failed);
}

void run_prolong_realize(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    const AssumptionSet& a = sys.assumptions;
    std::vector<LieExpr> rels;
    if (!o.expect.empty()) rels = f.constraint_set(o.expect).relations;
    CaseReport cr = verify_case(rels, pick_table(f, o.table), f.realization(o.realize).map, a, sys.chart);
    r.results["realization"] = o.realize;
    auto add_checks = [&](const std::vector<RelationCheck>& v, const std::string& kind) {
        for (auto& c : v) {
            Json j = check_json(c);
            j["kind"] = kind;
            r.checks.push_back(j);
            r.lines.push_back(kind + " " + c.label + ": " + to_string(c.satisfied) +
                              (c.satisfied == Truth::yes ? "" : "  residual " + c.residual.str()));
            r.downgrade(from_truth(c.satisfied));
        }
    };
    add_checks(cr.standing, "standing");
    add_checks(cr.constraints, "constraint");
    r.results["final_table"] = cr.final_table.render();
    for (auto& l : cr.final_table.render()) r.lines.push_back("table " + l);
    for (auto& v : cr.jacobi.violations) {
        r.violations.push_back(finding_json(v));
        r.lines.push_back("Jacobi violation " + triple_str(v.triple) + ": " + v.residual.str());
        r.downgrade(Verdict::failed);
    }
    Json und = Json::array();
    for (auto& v : cr.jacobi.undecidable) {
        und.push_back(finding_json(v));
        r.downgrade(Verdict::ambiguous);
    }
    r.results["jacobi_undecidable"] = und;
}

void run_conserve(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    const ConservationCandidate& c = f.candidate(o.candidate);
    DifferentialForm theta = build_theta(c.g, sys);
    r.results["candidate"] = c.name;
    r.results["theta"] = render_form(theta);
    r.lines.push_back("theta = " + render_form(theta));
    auto record = [&](const std::string& label, const FormCheck& fc) {
        Json j;
        j["label"] = label;
        j["residual"] = render_form(fc.residual);
        j["satisfied"] = to_string(fc.holds);
        r.checks.push_back(j);
        r.lines.push_back(label + ": " + to_string(fc.holds) +
                          (fc.holds == Truth::yes ? "" : "  residual " + render_form(fc.residual)));
        r.downgrade(from_truth(fc.holds));
    };
    record("d(theta) = 0", check_exact(theta, sys));
    if (!c.omega) return;
    r.results["omega"] = render_form(*c.omega);
    record("d(omega) - theta = 0", check_potential(*c.omega, theta, sys));
    ExteriorSystem ext = extend_with_potential(sys, *c.omega);
    DifferentialForm gauged = *c.omega + DifferentialForm::differential("v");
    record("d(omega + dv) - theta = 0", check_potential(gauged, theta, ext));
    for (auto& cl : check_closed(ext)) {
        Truth t = cl.reduction.in_ideal;
        if (t == Truth::yes) t = cl.reduction.certificate.verify(ext);
        Json j;
        j["label"] = "extended closure d(" + cl.generator + ")";
        j["residual"] = t == Truth::yes ? "0" : render_form(cl.derivative);
        j["satisfied"] = to_string(t);
        Json ms = Json::array();
        for (auto& m : cl.reduction.certificate.multipliers) ms.push_back(render_form(m));
        j["multipliers"] = ms;
        r.checks.push_back(j);
        r.lines.push_back("extended closure d(" + cl.generator + "): " + to_string(t));
        r.downgrade(from_truth(t));
    }
}

void run_backlund(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    const BacklundSystem& b = f.backlund_system(o.backlund);
    r.results["backlund"] = b.name;
    auto residuals = section(sys, JetSubstitution::standard(sys.chart));
    for (auto& e : residuals) e = e.apply(sys.assumptions);
    auto defs = solve_definitions(residuals, sys.chart, o.primary);
    ScalarExpr pde = eliminate(residuals, defs, sys.chart, o.primary).apply(sys.assumptions);
    Compatibility c = compatibility_residual(b, pde, sys.assumptions, sys.chart, o.primary);
    r.results["pde"] = pde.str();
    r.results["multiplier"] = c.multiplier.str();
    r.results["remainder"] = c.remainder.str();
    r.results["remainder_zero"] = to_string(c.remainder_zero);
    r.lines.push_back("pde: " + pde.str() + " = 0");
    r.lines.push_back("D_t F - D_x G = (" + c.multiplier.str() + ") * pde + remainder");
    r.lines.push_back("remainder: " + c.remainder.str() + "  [" + to_string(c.remainder_zero) + "]");
    r.downgrade(from_truth(c.remainder_zero));
    if (!o.run_numeric) return;
    PotentialCheckOptions po;
    po.params = o.numeric;
    po.trials = o.trials;
    po.seed = o.seed;
    po.tol = o.tol;
    po.primary = o.primary;
    if (!sys.chart.potentials().empty()) po.potential = sys.chart.potentials().front();
    NumericReport nr = verify_potential_equation(b, sys.chart, po);
    r.seed = o.seed;
    Json n;
    n["check"] = "potential equation";
    Json ps = Json::object();
    for (auto& [k, v] : o.numeric) ps[k] = to_string(v);
    n["params"] = ps;
    n["passed"] = nr.passed;
    n["trials"] = nr.trials;
    n["tol"] = nr.tol;
    n["worst_relative_residual"] = nr.worst;
    n["worst_sample"] = nr.worst_sample;
    r.numeric = n;
    std::ostringstream w;
    w << nr.worst;
    r.lines.push_back("potential equation, " + std::to_string(nr.trials) + " trials (seed " + std::to_string(o.seed) +
                      "): " + (nr.passed ? "passed" : "failed") + ", worst relative residual " + w.str());
    if (!nr.passed) r.downgrade(Verdict::failed);
}

void run_audit(const SystemFile& f, const ExteriorSystem& sys, const RunOptions& o, Report& r) {
    if (o.table.empty()) throw Error("audit needs --table NAME");
    const RelationTable& t = pick_table(f, o.table);
    r.results["table"] = o.table;
    r.results["entries"] = t.render();
    JacobiReport j = jacobi_audit(t, t.generators(), sys.assumptions, sys.chart);
    for (auto& v : j.violations) {
        r.violations.push_back(finding_json(v));
        r.lines.push_back("Jacobi violation " + triple_str(v.triple) + ": " + v.residual.str());
        r.downgrade(Verdict::failed);
    }
    Json und = Json::array();
    for (auto& v : j.undecidable) {
        und.push_back(finding_json(v));
        r.lines.push_back("undecidable " + triple_str(v.triple) + ": " + v.residual.str());
        r.downgrade(Verdict::ambiguous);
    }
    r.results["undecidable"] = und;
    if (j.violations.empty() && j.undecidable.empty()) r.lines.push_back("Jacobi identity holds on every triple");
}

}  // namespace

Report run(const SystemFile& f, const RunOptions& o) {
    Report r;
    r.command = o.command;
    r.system = f.system.name;
    ExteriorSystem sys = with_assumptions(f, o);
    try {
        if (o.command == "close") {
            run_close(sys, r);
        } else if (o.command == "section") {
            run_section(sys, o, r);
        } else if (o.command == "prolong") {
            if (o.extract) {
                run_prolong_extract(f, sys, o, r);
            } else if (!o.realize.empty()) {
                run_prolong_realize(f, sys, o, r);
            } else if (!o.connection.empty()) {
                run_prolong_connection(f, sys, o, r);
            } else {
                throw Error("prolong needs --connection NAME, --extract or --realize NAME");
            }
        } else if (o.command == "conserve") {
            if (o.candidate.empty()) throw Error("conserve needs --candidate NAME");
            run_conserve(f, sys, o, r);
        } else if (o.command == "backlund") {
            if (o.backlund.empty()) throw Error("backlund needs --system NAME");
            run_backlund(f, sys, o, r);
        } else if (o.command == "audit") {
            run_audit(f, sys, o, r);
        } else {
            throw Error("unknown command " + o.command);
        }
    } catch (const CaseSplitError& e) {
        r.undecided = e.undecided;
        r.lines.push_back(std::string("case split required: ") + e.what());
        r.downgrade(Verdict::ambiguous);
    }
    return r;
}

}  // namespace eds
