#include "eds/error.hpp"
#include "eds/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Common {
    std::string file;
    std::string format = "human";
    std::vector<std::string> assume;
};

void add_common(CLI::App* sub, Common& c, eds::RunOptions& o) {
    sub->add_option("file", c.file, ".eds system file")->required();
    sub->add_option("--format", c.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--assume", c.assume, "extra parameter relation, e.g. 'beta = 2'");
    sub->add_option("--seed", o.seed, "random seed for numeric checks");
    sub->add_option("--tol", o.tol, "relative tolerance for numeric checks");
    sub->add_option("--trials", o.trials, "number of numeric samples");
}

void emit(const eds::Report& r, const std::string& format) {
    std::cout << (format == "machine" ? r.machine() : r.human());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior differential system verifier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", eds::kToolVersion);
    Common c;
    eds::RunOptions o;
    std::vector<std::string> numeric;

    auto* close = app.add_subcommand("close", "check that the ideal is closed under d");
    add_common(close, c, o);

    auto* section = app.add_subcommand("section", "pull the forms back to a transversal section");
    add_common(section, c, o);
    section->add_flag("--eliminate", o.eliminate, "solve for p, q and print the PDE");

    auto* prolong = app.add_subcommand("prolong", "prolongation checks");
    add_common(prolong, c, o);
    prolong->add_option("--connection", o.connection, "connection to verify (or to extract from)");
    prolong->add_flag("--extract", o.extract, "extract bracket constraints");
    prolong->add_option("--assume-case", o.assume_case, "named case of parameter relations");
    prolong->add_option("--expect", o.expect, "constraint set to compare the extraction or realization against");
    prolong->add_option("--realize", o.realize, "verify a realization against the standing relations");
    prolong->add_option("--table", o.table, "bracket table (default: the file's bracket lines)");

    auto* conserve = app.add_subcommand("conserve", "conservation law checks");
    add_common(conserve, c, o);
    conserve->add_option("--candidate", o.candidate, "conservation candidate")->required();

    auto* backlund = app.add_subcommand("backlund", "Backlund compatibility and potential equation");
    add_common(backlund, c, o);
    backlund->add_option("--system", o.backlund, "backlund system")->required();
    backlund->add_option("--numeric", numeric, "parameter values name=value for the potential equation check")
        ->expected(1, -1);

    auto* audit = app.add_subcommand("audit", "Jacobi audit of a bracket table");
    add_common(audit, c, o);
    audit->add_option("--table", o.table, "table name, or 'standing'")->required();

    auto* render = app.add_subcommand("render", "print the normalized system file");
    render->add_option("file", c.file, ".eds system file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    o.command = command;
    o.assume = c.assume;
    try {
        eds::SystemFile f = eds::load_system(c.file);
        if (command == "render") {
            std::cout << eds::render_system(f);
            return 0;
        }
        for (auto& kv : numeric) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw eds::Error("--numeric expects name=value, got " + kv);
            o.numeric[kv.substr(0, eq)] = eds::Rational(kv.substr(eq + 1));
        }
        o.run_numeric = !numeric.empty();
        eds::Report r = eds::run(f, o);
        emit(r, c.format);
        return eds::exit_code(r.verdict);
    } catch (const std::exception& e) {
        eds::Report r = eds::usage_error(command, e.what());
        emit(r, c.format);
        return 2;
    }
}
