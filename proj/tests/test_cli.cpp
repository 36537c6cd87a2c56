#include "doctest.h"

#include "json.hpp"
#include "pf/json_io.hpp"
#include "pf/operator.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run pf_run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + PF_EXE + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json ok_json(const std::string& args) {
    Run r = pf_run(args);
    REQUIRE(r.status == 0);
    return json::parse(r.out);
}

std::string tmp(const std::string& name) { return "pf_cli_" + name + ".json"; }

void save(const std::string& path, const std::string& s) { std::ofstream(path) << s; }

const char* kQuinticExtSq =
    "theta^5 - 5*z*(2*theta+1)*(625*theta^4+1250*theta^3+1500*theta^2+875*theta+202)"
    " + 3125*z^2*(5*theta+3)*(5*theta+4)*(5*theta+5)*(5*theta+6)*(5*theta+7)";

}  // namespace

TEST_CASE("extsq of the quintic with gauge 1 is the order-5 operator") {
    json j = ok_json("extsq --op quintic.json --gauge 1");
    CHECK(j["order"] == 5);
    CHECK(pf::operator_from_json(j) == pf::parse_operator(kQuinticExtSq));
    CHECK(pf::parse_operator(j["text"].get<std::string>()) == pf::parse_operator(kQuinticExtSq));
    json s = ok_json("symsq --op quintic");
    CHECK(s["order"].get<int>() > 5);
}

TEST_CASE("sp4 reduce") {
    json j = ok_json("sp4 reduce 1 0 0 0");
    CHECK(j["text"] == "(1,0,0,0)");
    CHECK(j["is_reduced"] == true);
    CHECK(ok_json("sp4 reduce 1 7 0 1")["text"] == "(1,0,0,1)");
    CHECK(ok_json("sp4 reduce 0 -31 9 19")["reduced"] == json::array({2, 0, 1, 31}));
    json w = ok_json("sp4 witness --pmax 20 --qmax 20 --json");
    CHECK(w["classes"] == 361);
    CHECK(w["all_singletons"] == true);
}

TEST_CASE("guillera case a") {
    json j = ok_json("guillera --case a");
    CHECK(std::stod(j["residual_linear"].get<std::string>()) < 1e-15);
    CHECK(std::stod(j["residual_slope"].get<std::string>()) < 1e-15);
}

TEST_CASE("sums and klemm reports") {
    CHECK(std::stod(ok_json("sums --id jga")["residual"].get<std::string>()) < 1e-25);
    CHECK(std::stod(ok_json("sums --id ram1103 --terms 10")["residual"].get<std::string>()) < 1e-25);
    CHECK(std::stod(ok_json("sums --id jgb")["residual"].get<std::string>()) > 1);
    json k = ok_json("klemm --trials 50");
    CHECK(k["failures"] == 0);
    CHECK(std::stod(k["max_residual"].get<std::string>()) < 1e-20);
}

TEST_CASE("usage errors exit 2") {
    CHECK(pf_run("").status == 2);
    CHECK(pf_run("nosuch").status == 2);
    CHECK(pf_run("sums --id nope").status == 2);
    CHECK(pf_run("frobenius").status == 2);
    CHECK(pf_run("frobenius --op quintic --order 5").status == 2);
    CHECK(pf_run("guillera --case a --prec 32").status == 2);
    CHECK(pf_run("sp4 reduce 1 2").status == 2);
    CHECK(pf_run("monodromy --op quintic --around abc").status == 2);
    CHECK(pf_run("sums --id jga", "PF_PREC_BITS=12").status == 2);
    CHECK(pf_run("--help").status == 0);
}

TEST_CASE("computation errors exit 1 with a JSON error") {
    Run r = pf_run("sp4 reduce 2 4 6 8");
    CHECK(r.status == 1);
    json j = json::parse(r.out);
    CHECK(j["error"] == "NotPrimitive");
    CHECK(j.contains("message"));
    r = pf_run("frobenius --op 'theta^4 - z*theta^2*(theta+1)^2 + z^2' --order 12");
    CHECK(r.status == 0);
    r = pf_run("frobenius --op no_such_bundle");
    CHECK(r.status == 1);
    CHECK(json::parse(r.out)["error"] == "BadInput");
    r = pf_run("guillera --case a --z -1/100");
    CHECK(r.status == 1);
    CHECK(json::parse(r.out)["error"] == "RadiusExceeded");
}

TEST_CASE("PF_PREC_BITS sets the default precision") {
    Run a = pf_run("sums --id jga", "PF_PREC_BITS=128");
    REQUIRE(a.status == 0);
    CHECK(json::parse(a.out)["prec"] == 128);
    CHECK(ok_json("sums --id jga --prec 300")["prec"] == 300);
}

TEST_CASE("output is byte-identical across runs") {
    for (const char* args : {"frobenius --op quintic --basis-change quintic --order 20", "invariants --op binomial5 --order 30",
                             "klemm --trials 40 --seed 7", "sp4 witness --pmax 6 --qmax 6 --json",
                             "monodromy --op quintic --around 0 --order 90"}) {
        std::string shown = args;
        CAPTURE(shown);
        Run a = pf_run(args), b = pf_run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("JSON outputs feed back as inputs") {
    Run e = pf_run("extsq --op quintic --gauge 1");
    REQUIRE(e.status == 0);
    save(tmp("extsq"), e.out);
    Run f = pf_run("frobenius --op " + tmp("extsq") + " --order 12");
    REQUIRE(f.status == 0);
    json fb = json::parse(f.out);
    CHECK(pf::operator_from_json(fb["operator"]) == pf::parse_operator(kQuinticExtSq));
    save(tmp("extsq_basis"), f.out);
    CHECK(pf_run("frobenius --op " + tmp("extsq_basis") + " --order 12").out == f.out);
    CHECK(pf::basis_to_json(pf::basis_from_json(fb)) == fb);

    Run u = pf_run("frobenius --op quintic --basis-change quintic --order 90");
    REQUIRE(u.status == 0);
    save(tmp("u"), u.out);
    json m = ok_json("monodromy --basis " + tmp("u") + " --around 1/3125");
    CHECK(m["exact"] == json::parse(R"([["1/1","0","0","0"],["0","1/1","0","0"],["0","0","1/1","0"],["0","1/1","0","1/1"]])"));
    CHECK(m["symplectic"] == true);

    Run o5 = pf_run("order5 --op binomial5");
    REQUIRE(o5.status == 0);
    save(tmp("o5"), o5.out);
    CHECK(pf::operator_from_json(json::parse(o5.out)) == pf::parse_operator("theta^5 - 32*z*(2*theta+1)^5"));
    CHECK(ok_json("frobenius --op " + tmp("o5") + " --order 12")["solutions"].size() == 5);

    json inv = ok_json("invariants --op binomial5 --order 30");
    CHECK(inv["p1"]["num"].is_array());
    CHECK(pf::logseries_from_json(inv["v"]) == pf::logseries_from_json(inv["v"]));
    json pb = ok_json("pullback --op binomial5 --order 20");
    save(tmp("pb"), pb.dump());
    CHECK(ok_json("frobenius --op " + tmp("pb") + " --order 12")["solutions"].size() == 4);
    for (const char* n : {"extsq", "extsq_basis", "u", "o5", "pb"}) std::remove(tmp(n).c_str());
}
