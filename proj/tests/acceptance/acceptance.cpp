// One PASS/FAIL line per acceptance criterion, each followed by indented
// diagnostics. Exits nonzero when any criterion fails.

#include "../common/properties.hpp"

#include "eds/dsl.hpp"
#include "eds/error.hpp"
#include "eds/numeric.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace eds;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        pass = pass && ok;
    }
    void note(const std::string& s) { notes.push_back("     " + s); }
};

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(EDS_DATA_DIR) + "/" + name);
    if (!in) throw Error("cannot open data file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const SystemFile& gkdv() {
    static SystemFile f = parse_system(slurp("gkdv.eds"));
    return f;
}

const SystemFile& ch() {
    static SystemFile f = parse_system(slurp("ch.eds"));
    return f;
}

// Rewrites `param NAME ...` declarations to `param NAME = value`.
std::string with_params(const std::string& src, const std::map<std::string, std::string>& values) {
    std::istringstream in(src);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw, name;
        ls >> kw >> name;
        if (kw == "param" && values.count(name))
            out << "param " << name << " = " << values.at(name) << "\n";
        else
            out << line << "\n";
    }
    return out.str();
}

DifferentialForm form_or_zero(const SystemFile& f, const std::string& text, int degree) {
    return text.empty() ? DifferentialForm(degree) : parse_form(f, text);
}

// A certificate written out by hand: target * den = sum m_i ^ alpha_i.
Truth check_written_certificate(const SystemFile& f, std::size_t gen, const std::vector<std::string>& mults,
                                const std::string& den, Outcome& o, const std::string& label) {
    const ExteriorSystem& sys = f.system;
    IdealCertificate c;
    c.target = d(sys.generators[gen].form, sys.chart);
    for (auto& m : mults) c.multipliers.push_back(form_or_zero(f, m, 1));
    c.denominator = den.empty() ? ScalarExpr(1) : parse_scalar(f, den);
    DifferentialForm res = c.expansion_residual(sys).map_coefficients(
        [&](const ScalarExpr& e) { return e.apply(sys.assumptions); });
    Truth t = is_zero(res, sys.assumptions, sys.chart);
    o.require(t == Truth::yes, label + " expands to d(" + sys.generators[gen].name + ")" +
                                   (t == Truth::yes ? "" : "; residual " + render_form(res)));
    return t;
}

void report_closure(const SystemFile& f, Outcome& o) {
    for (auto& cl : check_closed(f.system)) {
        Truth t = cl.reduction.in_ideal == Truth::yes ? cl.reduction.certificate.verify(f.system) : Truth::no;
        std::string ms;
        for (std::size_t i = 0; i < cl.reduction.certificate.multipliers.size(); ++i) {
            auto& m = cl.reduction.certificate.multipliers[i];
            if (m.is_zero()) continue;
            ms += (ms.empty() ? "" : ", ") + std::string("(") + render_form(m) + ") ^ " +
                  f.system.generators[i].name;
        }
        std::string den = cl.reduction.certificate.denominator.str();
        o.require(t == Truth::yes, f.system.name + ": d(" + cl.generator + ")" + (den == "1" ? "" : " * " + den) +
                                       " = " + (ms.empty() ? "0" : ms));
    }
}

Outcome criterion_closure() {
    Outcome o;
    report_closure(gkdv(), o);
    check_written_certificate(gkdv(), 0, {"", "dx", ""}, "", o, "gkdv written dx ^ alpha2");
    check_written_certificate(gkdv(), 1, {"", "", "-dx"}, "", o, "gkdv written -dx ^ alpha3");
    Truth t3 = check_written_certificate(gkdv(), 2, {"gamma*s/n*p*u^(s-n)*dx", "gamma*p*u^s*dx", ""}, "", o,
                                         "gkdv written dx ^ (gamma s/n p u^(s-n) alpha1 + gamma p u^s alpha2)");
    if (t3 != Truth::yes)
        check_written_certificate(gkdv(), 2, {"gamma*s/n*p*u^(s-n)*dx", "gamma*u^s*dx", ""}, "", o,
                                  "  diagnostic only: same with gamma u^s on alpha2");

    report_closure(ch(), o);
    const auto& chs = ch().system;
    auto dalpha2 = check_closed(chs)[1].reduction.certificate;
    bool over_u = !dalpha2.denominator.is_constant() || [&] {
        for (auto& m : dalpha2.multipliers)
            for (auto& [b, c] : m.components())
                for (auto& [pm, k] : c.terms())
                    if (auto it = pm.find("u"); it != pm.end() && !(it->second == ParamRational(0)) &&
                                                it->second.is_constant() && it->second.to_rational() < 0)
                        return true;
        return false;
    }();
    o.require(over_u, "ch: d(alpha2) needs the 1/u multiplier");
    check_written_certificate(ch(), 0, {"", "dx", ""}, "", o, "ch written dx ^ alpha2");
    Truth w2 = check_written_certificate(ch(), 1, {"u*((1 + beta)*u - q)*dx", "", "-dx"}, "u", o,
                                         "ch written 1/u dx ^ (-alpha3 + u((1 + beta)u - q) alpha1)");
    if (w2 != Truth::yes)
        check_written_certificate(ch(), 1, {"((1 + beta)*u - beta*q)*dx", "", "-dx"}, "u", o,
                                  "  diagnostic only: same with ((1 + beta)u - beta q) on alpha1");
    check_written_certificate(ch(), 2, {"(1 - beta)*(dq - p*dx)", "", "(1 - beta)*p*dt"}, "", o,
                              "ch written (1 - beta)[dq ^ alpha1 + p dt ^ alpha3 - p dx ^ alpha1]");
    return o;
}

ScalarExpr eliminated_pde(const ExteriorSystem& sys) {
    auto residuals = section(sys, JetSubstitution::standard(sys.chart));
    for (auto& r : residuals) r = r.apply(sys.assumptions);
    auto defs = solve_definitions(residuals, sys.chart, "u");
    return eliminate(residuals, defs, sys.chart, "u").apply(sys.assumptions);
}

Outcome criterion_section() {
    Outcome o;
    const SystemFile& g = gkdv();
    ScalarExpr pde = eliminated_pde(g.system);
    // u_t + (u^n)_xxx + beta (u^m)_x with beta = n gamma / m, derivatives expanded by hand.
    ScalarExpr kdv = parse_scalar(g, "u_t + n*u^(n-1)*u_xxx + 3*n*(n-1)*u^(n-2)*u_x*u_xx "
                                     "+ n*(n-1)*(n-2)*u^(n-3)*u_x^3 + n*gamma/m*m*u^(m-1)*u_x")
                         .apply(g.system.assumptions);
    o.require(is_zero(pde - kdv, g.system.assumptions, g.system.chart) == Truth::yes,
              "gkdv: " + pde.str() + " = 0");

    const SystemFile& c = ch();
    ScalarExpr rho_eq = parse_scalar(c, "u_t - u_xxt + u*(u_x - u_xxx) + beta*(u - u_xx)*u_x");
    ScalarExpr chpde = eliminated_pde(c.system);
    o.require(is_zero(chpde - rho_eq, c.system.assumptions, c.system.chart) == Truth::yes,
              "ch: " + chpde.str() + " = 0");
    for (int beta : {2, 3}) {
        ExteriorSystem s = c.system;
        s.assumptions.add_substitution("beta", ParamRational(beta));
        std::string got = eliminated_pde(s).str();
        std::string b = std::to_string(beta);
        std::string want =
            parse_scalar(c, "u_t - u_xxt + u*(u_x - u_xxx) + " + b + "*(u - u_xx)*u_x").str();
        o.require(got == want, "beta = " + b + ": " + got + (got == want ? "" : "  expected " + want));
    }
    return o;
}

Truth curvature_zero(const Connection& conn, const SystemFile& f, const AssumptionSet& extra, Outcome* o) {
    ExteriorSystem sys = f.system;
    sys.assumptions = sys.assumptions.merged(extra);
    CurvatureResult cr = curvature_residual(conn, sys, f.table);
    if (o && cr.zero != Truth::yes) o->note(conn.name + " residual: " + lie_form_str(cr.residual));
    return cr.zero;
}

struct Agreement {
    int total = 0, zero = 0, nonzero = 0, mismatches = 0, ambiguous = 0;
    void add(const Connection& conn, const SystemFile& f, Outcome& o) {
        CurvatureResult cr = curvature_residual(conn, f.system, f.table);
        bool components = pde_form_check(conn, f.system, f.table).all_satisfied();
        ++total;
        if (cr.zero == Truth::ambiguous) ++ambiguous;
        (cr.zero == Truth::yes ? zero : nonzero)++;
        if (components != (cr.zero == Truth::yes)) {
            ++mismatches;
            o.note("mismatch on " + f.system.name + " A = " + conn.A.str() + ", B = " + conn.B.str());
        }
    }
};

Outcome criterion_prolongation() {
    Outcome o;
    const SystemFile& g = gkdv();
    const AssumptionSet& generic = g.assumption_case("generic").assumptions;
    Truth a = curvature_zero(g.connection("generic_plus_gamma"), g, generic, &o);
    o.require(a == Truth::yes, std::string("gkdv one-dimensional connection, gamma terms as written: ") + to_string(a));
    Truth a2 = curvature_zero(g.connection("generic"), g, generic, &o);
    o.note(std::string("diagnostic: with the gamma terms of B negated: ") + to_string(a2));
    Truth b = curvature_zero(ch().connection("one_generator"), ch(), {}, &o);
    o.require(b == Truth::yes, std::string("ch single-generator connection: ") + to_string(b));
    Truth c = curvature_zero(ch().connection("two_generator"), ch(), {}, &o);
    o.require(c == Truth::yes, std::string("ch two-generator connection with [X1, X2] = 0: ") + to_string(c));

    std::mt19937_64 rng(4242);
    auto pick = [&](const std::vector<std::string>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    auto coeff = [&] { return std::to_string(std::uniform_int_distribution<int>(-3, 3)(rng)); };
    const std::string gk = slurp("gkdv.eds"), chsrc = slurp("ch.eds");
    Agreement agr;
    for (int i = 0; i < 50; ++i) {
        int kind = i % 5;
        if (kind <= 1) {
            // Numeric parameters for the one-dimensional gkdv connections.
            SystemFile f = parse_system(with_params(gk, {{"n", pick({"1", "2", "3", "1/2"})},
                                                         {"m", pick({"2", "3", "5", "3/2"})},
                                                         {"gamma", pick({"-2", "1", "3", "6"})},
                                                         {"kappa", pick({"0", "1", "-1/3"})},
                                                         {"sigma", pick({"0", "2", "-1"})},
                                                         {"alpha", pick({"0", "5/2"})}}));
            agr.add(f.connection(kind == 0 ? "generic" : "generic_plus_gamma"), f, o);
        } else if (kind == 2) {
            SystemFile f = parse_system(with_params(chsrc, {{"beta", pick({"-1", "2", "3", "1/2", "5"})}}));
            const Connection& base = f.connection(pick({"one_generator", "two_generator"}));
            ScalarExpr k(std::uniform_int_distribution<int>(1, 4)(rng));
            agr.add({"scaled", base.A * k, base.B * k}, f, o);
        } else {
            // Random polynomial profiles over the standing gkdv table.
            const SystemFile& f = kind == 3 ? g : ch();
            std::string A, B;
            for (auto x : {"X1", "X2"}) {
                A += (A.empty() ? "" : " + ") + std::string("(") + coeff() + "*u + " + coeff() + "*q^2)*" + x;
                B += (B.empty() ? "" : " + ") + std::string("(") + coeff() + "*p + " + coeff() + "*u*q)*" + x;
            }
            agr.add({"random", parse_lie(f, A), parse_lie(f, B)}, f, o);
        }
    }
    o.note("randomized connections: " + std::to_string(agr.total) + " (" + std::to_string(agr.zero) + " flat, " +
           std::to_string(agr.nonzero) + " curved, " + std::to_string(agr.ambiguous) + " undecided)");
    o.require(agr.mismatches == 0 && agr.total == 50,
              "component equations agree with the curvature residual: " + std::to_string(agr.mismatches) +
                  " mismatches");
    return o;
}

std::vector<LieExpr> negate_gamma(const std::vector<LieExpr>& rels) {
    std::vector<LieExpr> out;
    for (auto& r : rels)
        out.push_back(r.map_coefficients(
            [](const ScalarExpr& e) { return e.substitute_param("gamma", -ParamRational::param("gamma")); }));
    return out;
}

Outcome criterion_extraction() {
    Outcome o;
    const SystemFile& g = gkdv();
    const Connection& conn = g.connection("family");
    struct Item {
        std::string label, assumptions, expected;
    };
    std::vector<Item> items{{"generic", "generic", "generic"},     {"n1", "n1", ""},
                            {"m_eq_n", "m_eq_n", "m_eq_n"}, {"m_eq_n1", "m_eq_n1", "m_eq_n1"},
                            {"linear", "linear", "linear"},       {"kdv", "kdv", "kdv"}};
    for (auto& it : items) {
        AssumptionSet a = g.system.assumptions.merged(g.assumption_case(it.assumptions).assumptions);
        std::vector<LieExpr> found;
        try {
            for (auto& c : extract_constraints(conn, g.system, g.table, a)) found.push_back(c.relation);
        } catch (const CaseSplitError& e) {
            o.require(false, it.label + ": undecided case split");
            continue;
        }
        if (it.expected.empty()) {
            // Only the one-dimensional realization is documented for this case.
            CaseReport cr = verify_case(found, g.table, g.realization("generic").map, a, g.system.chart);
            o.require(cr.verified(), it.label + ": " + std::to_string(found.size()) +
                                         " relations, all satisfied by the generic one-dimensional realization");
            continue;
        }
        const auto& expected = g.constraint_set(it.expected).relations;
        ConstraintMatch m = compare_constraints(found, expected, g.table, a, g.system.chart);
        o.require(m.equivalent(), it.label + ": " + std::to_string(found.size()) + " relations vs " +
                                      std::to_string(expected.size()) + " written");
        for (auto& x : m.unmatched_expected) o.note("written, not derived: " + x);
        for (auto& x : m.unmatched_found) o.note("derived, not written: " + x);
        if (!m.equivalent()) {
            ConstraintMatch flipped =
                compare_constraints(found, negate_gamma(expected), g.table, a, g.system.chart);
            o.note(std::string("diagnostic: written list with gamma -> -gamma matches: ") +
                   (flipped.equivalent() ? "yes" : "no"));
        }
    }
    for (auto excluded : {"n1_m3", "n1_m4"}) {
        AssumptionSet a = g.system.assumptions.merged(g.assumption_case(excluded).assumptions);
        for (auto& c : extract_constraints(conn, g.system, g.table, a))
            if (c.relation.generators().count("X7"))
                o.note(std::string(excluded) + ": coefficient of " + c.exponent + " gives " + c.relation.str() +
                       " = 0");
    }
    for (auto stated : {"generic_stated", "m_eq_n_stated", "m_eq_n1_stated"}) {
        AssumptionSet a = g.system.assumptions.merged(g.assumption_case(stated).assumptions);
        try {
            extract_constraints(conn, g.system, g.table, a);
            o.note(std::string(stated) + ": decided without extra genericity conditions");
        } catch (const CaseSplitError& e) {
            std::string u;
            for (auto& x : e.undecided) u += " [" + x + "]";
            o.note(std::string(stated) + " alone leaves exponent coincidences undecided:" + u);
        }
    }
    return o;
}

Outcome criterion_audit() {
    Outcome o;
    const SystemFile& g = gkdv();
    for (auto name : {"m_eq_n1", "kdv"}) {
        const RelationTable& t = g.named_table(name).table;
        JacobiReport r = jacobi_audit(t, t.generators(), g.system.assumptions, g.system.chart);
        o.require(r.violations.empty() && r.undecidable.empty(), std::string("table ") + name + ": " +
                                                                     std::to_string(r.violations.size()) +
                                                                     " violations");
    }
    // Hand expansion with [X1,X2] = X7, [X2,X7] = X2, [X1,X7] = -gamma X2:
    // [X1,[X2,X7]] + [X2,[X7,X1]] + [X7,[X1,X2]] = [X1,X2] + gamma [X2,X2] + [X7,X7] = X7.
    const RelationTable& t = g.named_table("m_eq_n").table;
    JacobiReport r = jacobi_audit(t, t.generators(), g.system.assumptions, g.system.chart);
    bool one = r.violations.size() == 1 && r.undecidable.empty();
    o.require(one, "table m_eq_n: " + std::to_string(r.violations.size()) + " violated triple(s)");
    if (!r.violations.empty()) {
        const auto& v = r.violations[0];
        bool triple = v.triple == std::vector<std::string>{"X1", "X2", "X7"};
        ScalarExpr k = v.residual.coefficient(LieSymbol::gen("X7"));
        bool proportional = v.residual.terms().size() == 1 && k.is_constant() && !k.is_zero();
        o.require(triple && proportional, "violation at (" + v.triple[0] + ", " + v.triple[1] + ", " + v.triple[2] +
                                              ") with residual " + v.residual.str() + " (hand expansion: X7)");
    }
    return o;
}

void conservation_checks(const SystemFile& f, Outcome& o) {
    const ExteriorSystem& sys = f.system;
    const ConservationCandidate& c = f.candidate("theta");
    DifferentialForm theta = build_theta(c.g, sys);
    FormCheck ex = check_exact(theta, sys);
    o.require(ex.holds == Truth::yes, sys.name + ": d(theta) = 0 for theta = " + render_form(theta));
    FormCheck pot = check_potential(*c.omega, theta, sys);
    o.require(pot.holds == Truth::yes, sys.name + ": d(omega) = theta" +
                                           (pot.holds == Truth::yes ? "" : "; d(omega) - theta = " +
                                                                               render_form(pot.residual)));
    ExteriorSystem ext = extend_with_potential(sys, *c.omega);
    FormCheck gauged = check_potential(*c.omega + DifferentialForm::differential("v"), theta, ext);
    o.require(gauged.holds == pot.holds, sys.name + ": omega + dv gives the same verdict (" +
                                             to_string(gauged.holds) + ")");
    bool closed = true;
    for (auto& cl : check_closed(ext)) {
        Truth t = cl.reduction.in_ideal == Truth::yes ? cl.reduction.certificate.verify(ext) : Truth::no;
        closed = closed && t == Truth::yes;
        if (t != Truth::yes) o.note(sys.name + ": d(" + cl.generator + ") = " + render_form(cl.derivative) +
                                    " is not in the extended ideal");
    }
    o.require(closed, sys.name + ": system extended by dv + omega is closed");
}

Outcome criterion_conservation() {
    Outcome o;
    conservation_checks(gkdv(), o);
    conservation_checks(ch(), o);
    SystemFile fixed = ch();
    fixed.conservation[0].omega = parse_form(fixed, "(q - u)*dx + 1/2*(u^2 - 2*u*q + beta*u^2 + (1 - beta)*p^2)*dt");
    Truth t = check_potential(*fixed.conservation[0].omega, build_theta(fixed.conservation[0].g, fixed.system),
                              fixed.system)
                  .holds;
    o.note(std::string("diagnostic: ch omega with 1/2 (1 - beta) p^2 in place of 1/2 p^2: d(omega) = theta ") +
           to_string(t));
    return o;
}

// D_t F - D_x G and the PDE residual from hand-expanded derivatives of
// F = kappa + sigma u + u^(n+1) and G = -(sigma + (n+1) w) w_xx + (n+1)/2 w_x^2
// + c1 u^m + c2 u^(m+n) + alpha with w = u^n.
struct HandCompat {
    double multiplier, remainder;
};

HandCompat hand_compat(const EvalPoint& pt, double c1, double c2) {
    auto P = [&](const char* k) { return pt.params.at(k).get_d(); };
    auto X = [&](const char* k) { return pt.coords.at(k); };
    double n = P("n"), m = P("m"), gamma = P("gamma"), sigma = P("sigma");
    double u = X("u"), ux = X("u_x"), uxx = X("u_xx"), uxxx = X("u_xxx"), ut = X("u_t");
    double w = std::pow(u, n);
    double wxxx = n * (n - 1) * (n - 2) * std::pow(u, n - 3) * ux * ux * ux +
                  3 * n * (n - 1) * std::pow(u, n - 2) * ux * uxx + n * std::pow(u, n - 1) * uxxx;
    double dtF = (sigma + (n + 1) * w) * ut;
    double dxG = -(sigma + (n + 1) * w) * wxxx + c1 * m * std::pow(u, m - 1) * ux +
                 c2 * (m + n) * std::pow(u, m + n - 1) * ux;
    double pde = ut + wxxx + n * gamma * std::pow(u, m - 1) * ux;
    double mult = sigma + (n + 1) * w;
    return {mult, dtF - dxG - mult * pde};
}

Outcome criterion_backlund() {
    Outcome o;
    const SystemFile& g = gkdv();
    ScalarExpr pde = eliminated_pde(g.system);
    ScalarExpr expected_mult = parse_scalar(g, "sigma + (n + 1)*u^n");
    for (auto name : {"plus_gamma", "consistent"}) {
        bool primary = std::string(name) == "plus_gamma";
        const BacklundSystem& b = g.backlund_system(name);
        Compatibility c = compatibility_residual(b, pde, g.system.assumptions, g.system.chart);
        bool mult_ok = is_zero(c.multiplier - expected_mult, g.system.assumptions, g.system.chart) == Truth::yes;
        std::string line = std::string(name) + ": D_t F - D_x G = (" + c.multiplier.str() + ") pde + (" +
                           c.remainder.str() + ")";
        if (primary)
            o.require(c.remainder_zero == Truth::yes && mult_ok, "written system " + line);
        else
            o.note("diagnostic, gamma terms of G negated: " + line);

        // Independent numeric oracle for multiplier and remainder.
        double sign = primary ? 1 : -1;
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> small(1, 4);
        std::uniform_real_distribution<double> coord(0.5, 1.5);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            EvalPoint pt;
            pt.params = {{"n", Rational(small(rng))},   {"m", Rational(small(rng) + 4)},
                         {"gamma", Rational(small(rng))}, {"sigma", Rational(small(rng) - 2)},
                         {"kappa", Rational(small(rng))}, {"alpha", Rational(small(rng))}};
            pt.params["s"] = pt.params["m"] - pt.params["n"];
            for (auto j : {"u", "u_x", "u_xx", "u_xxx", "u_t", "u_xt", "u_xxt", "u_tt"}) pt.coords[j] = coord(rng);
            double n = pt.params["n"].get_d(), m = pt.params["m"].get_d(), gm = pt.params["gamma"].get_d(),
                   sg = pt.params["sigma"].get_d();
            HandCompat h = hand_compat(pt, sign * n / m * gm * sg, sign * n * (n + 1) / (m + n) * gm);
            double lm = eval(c.multiplier, pt, g.system.chart), lr = eval(c.remainder, pt, g.system.chart);
            double scale = std::max({std::fabs(h.multiplier), std::fabs(h.remainder), 1.0});
            worst = std::max({worst, std::fabs(lm - h.multiplier) / scale, std::fabs(lr - h.remainder) / scale});
        }
        std::ostringstream w;
        w << worst;
        o.require(worst < 1e-9, std::string(name) + ": symbolic multiplier and remainder match the hand oracle at 20 "
                                                     "points, worst relative residual " +
                                    w.str());
    }

    PotentialCheckOptions po;
    po.params = {{"n", Rational(1)},     {"m", Rational(2)},     {"gamma", Rational(6)},
                 {"alpha", Rational(0)}, {"kappa", Rational(0)}, {"sigma", Rational(0)}};
    po.trials = 20;
    po.seed = 1;
    po.tol = 1e-9;
    const BacklundSystem& written = g.backlund_system("plus_gamma");
    NumericReport nr = verify_potential_equation(written, g.system.chart, po);
    std::ostringstream w;
    w << nr.worst;
    o.require(nr.passed && nr.trials == 20, "potential equation at n=1, m=2, gamma=6, alpha=0: worst relative residual " +
                                                w.str());

    BacklundSystem mutated = written;
    mutated.potential = parse_scalar(
        g, "y_t + (n+1)*y_x^(n/(n+1))*Dx(Dx(y_x^(n/(n+1)))) + (n+1)/2*Dx(y_x^(n/(n+1)))^2 "
           "- n*(n+1)/(m+n)*gamma*y_x^((m+n)/(n+1)) - alpha");
    NumericReport mr = verify_potential_equation(mutated, g.system.chart, po);
    std::ostringstream mw;
    mw << mr.worst;
    o.require(!mr.passed, "sign of the squared-derivative term flipped: check fails, worst relative residual " +
                              mw.str());
    return o;
}

Outcome criterion_properties() {
    Outcome o;
    for (auto& r : props::run_property_suite(20261016, 1000))
        o.require(r.failures == 0 && r.cases >= 1000,
                  r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures" +
                      (r.first_failure.empty() ? "" : " (first: " + r.first_failure + ")"));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "closure certificates", criterion_closure},
        {2, "sectioning and elimination", criterion_section},
        {3, "prolongation curvature", criterion_prolongation},
        {4, "constraint extraction", criterion_extraction},
        {5, "Jacobi audits", criterion_audit},
        {6, "conservation laws", criterion_conservation},
        {7, "Backlund compatibility and potential equation", criterion_backlund},
        {8, "kernel properties", criterion_properties},
    };
    int failed = 0;
    for (auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 10) o.require(false, "took longer than 10 s");
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << t << ")\n";
        for (auto& n : o.notes) std::cout << "    " << n << "\n";
        if (!o.pass) ++failed;
    }
    std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
