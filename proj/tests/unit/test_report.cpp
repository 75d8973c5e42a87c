#include "helpers.hpp"

#include "eds/error.hpp"
#include "eds/report.hpp"

#include <doctest.h>

using namespace eds;

namespace {

const SystemFile& gkdv() {
    static SystemFile f = load_system(std::string(EDS_DATA_DIR) + "/gkdv.eds");
    return f;
}

const SystemFile& ch() {
    static SystemFile f = load_system(std::string(EDS_DATA_DIR) + "/ch.eds");
    return f;
}

RunOptions command(const std::string& c) {
    RunOptions o;
    o.command = c;
    return o;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(exit_code(Verdict::verified) == 0);
    CHECK(exit_code(Verdict::failed) == 1);
    CHECK(exit_code(Verdict::ambiguous) == 3);
    Report r;
    r.downgrade(Verdict::ambiguous);
    CHECK(r.verdict == Verdict::ambiguous);
    r.downgrade(Verdict::failed);
    r.downgrade(Verdict::ambiguous);
    CHECK(r.verdict == Verdict::failed);
}

TEST_CASE("machine reports carry the schema fields") {
    Report r = run(gkdv(), command("close"));
    CHECK(r.verdict == Verdict::verified);
    Json j = Json::parse(r.machine());
    for (const char* key : {"schema", "tool_version", "command", "system", "verdict", "seed", "certificates",
                            "constraints", "violations", "checks", "numeric", "undecided", "results"})
        CHECK(j.contains(key));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["verdict"] == "verified");
    CHECK(j["certificates"].size() == 3);
}

TEST_CASE("machine output is deterministic") {
    RunOptions o = command("backlund");
    o.backlund = "consistent";
    o.run_numeric = true;
    o.numeric = {{"n", Rational(1)}, {"m", Rational(2)}, {"gamma", Rational(6)}, {"alpha", Rational(0)},
                 {"kappa", Rational(0)}, {"sigma", Rational(0)}};
    CHECK(run(gkdv(), o).machine() == run(gkdv(), o).machine());
    CHECK(run(ch(), command("close")).machine() == run(ch(), command("close")).machine());
}

TEST_CASE("verdicts across commands") {
    RunOptions audit = command("audit");
    audit.table = "m_eq_n";
    CHECK(run(gkdv(), audit).verdict == Verdict::failed);
    audit.table = "kdv";
    CHECK(run(gkdv(), audit).verdict == Verdict::verified);

    RunOptions ext = command("prolong");
    ext.extract = true;
    ext.assume_case = "generic_stated";
    Report amb = run(gkdv(), ext);
    CHECK(amb.verdict == Verdict::ambiguous);
    CHECK_FALSE(amb.undecided.empty());

    RunOptions conn = command("prolong");
    conn.connection = "one_generator";
    CHECK(run(ch(), conn).verdict == Verdict::verified);
}

TEST_CASE("unknown names are usage errors") {
    RunOptions o = command("prolong");
    o.connection = "nope";
    CHECK_THROWS_AS(run(gkdv(), o), Error);
    Report u = usage_error("prolong", "bad");
    CHECK(u.human().find("error: bad") != std::string::npos);
}
