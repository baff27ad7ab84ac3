#include <doctest.h>
#include <json.hpp>

#include <map>
#include <sstream>

#include "specseq/cli.hpp"

using namespace specseq;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out;
};

Run run_validate(const std::string& name) {
    std::ostringstream os;
    int code = cli::cmd_validate(fixture(name), os);
    return {code, os.str()};
}

Run run_pages(const std::string& name, int max_r, bool machine) {
    std::ostringstream os;
    cli::PagesOptions opt;
    opt.max_r = max_r;
    opt.machine = machine;
    int code = cli::cmd_pages(fixture(name), opt, os);
    return {code, os.str()};
}

}  // namespace

TEST_CASE("validate exit codes across the fixture classes") {
    CHECK(run_validate("two_stage.json").code == 0);
    CHECK(run_validate("two_stage.json").out == "valid\n");
    CHECK(run_validate("total_2x2.json").code == 0);
    CHECK(run_validate("trivial_small.json").code == 0);

    Run nest = run_validate("bad_nesting.json");
    CHECK(nest.code == 2);
    CHECK(nest.out.find("nesting") != std::string::npos);
    CHECK(nest.out.find("(n=0, p=0)") != std::string::npos);

    Run compat = run_validate("bad_compat.json");
    CHECK(compat.code == 2);
    CHECK(compat.out.find("(n=1, p=0)") != std::string::npos);
    CHECK(compat.out.find("(1,0)") != std::string::npos);  // witness e1

    CHECK(run_validate("malformed.json").code == 1);
    CHECK(run_validate("unknown_field.json").code == 1);
    CHECK(run_validate("does_not_exist.json").code == 1);
}

TEST_CASE("pages on the worked example") {
    Run r = run_pages("two_stage.json", 2, false);
    CHECK(r.code == 0);
    CHECK(r.out.find("page r=0") != std::string::npos);
    CHECK(r.out.find("page r=2") != std::string::npos);
    CHECK(r.out.find("page r=inf") != std::string::npos);
    CHECK(r.out.find("d (1,0) -> (0,0) rank 1") != std::string::npos);

    // grids carry the dimension sequence (1,1,1,1) -> (1,1,1,1) -> (0,1,1,0)
    size_t page1 = r.out.find("page r=1");
    size_t page2 = r.out.find("page r=2");
    std::string mid = r.out.substr(page1, page2 - page1);
    CHECK(mid.find("1    1") != std::string::npos);

    // violating and malformed documents propagate their exit codes
    CHECK(run_pages("bad_nesting.json", 2, false).code == 2);
    CHECK(run_pages("malformed.json", 2, false).code == 1);
}

TEST_CASE("machine pages are valid JSON and carry the convergence block") {
    Run r = run_pages("two_stage.json", 1, true);
    CHECK(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 3);  // r = 0, 1, inf
    CHECK(doc.back()["r"] == "inf");
    CHECK(doc.back()["convergence"]["verdict"] == true);
    // printed limit dims satisfy sum over p of dim E_inf = dim H_n
    std::map<int, size_t> by_degree;
    for (const auto& e : doc.back()["entries"])
        by_degree[e["p"].get<int>() + e["q"].get<int>()] += e["dim"].get<size_t>();
    for (const auto& h : doc.back()["convergence"]["homology"])
        CHECK(by_degree[h["n"].get<int>()] == h["dim"].get<size_t>());
}

TEST_CASE("byte-identical output across two runs") {
    for (const char* name : {"two_stage.json", "total_2x2.json", "trivial_small.json",
                             "bad_nesting.json", "bad_compat.json", "malformed.json"}) {
        Run a = run_pages(name, 3, false);
        Run b = run_pages(name, 3, false);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        Run ma = run_pages(name, 3, true);
        Run mb = run_pages(name, 3, true);
        CHECK(ma.out == mb.out);
    }
}

TEST_CASE("converge on the worked example") {
    std::ostringstream os;
    int code = cli::cmd_converge(fixture("two_stage.json"), os);
    CHECK(code == 0);
    std::string out = os.str();
    CHECK(out.find("H_1: dim 1") != std::string::npos);
    CHECK(out.find("H_0: dim 1, filtration dims p=-1:0 p=0:0 p=1:1") != std::string::npos);
    CHECK(out.find("(p,q)=(0,1): dim E_inf = 1, dim gr H = 1") != std::string::npos);
    CHECK(out.find("verdict: true") != std::string::npos);
}

TEST_CASE("check on a document and on random inputs") {
    std::ostringstream os;
    cli::CheckOptions opt;
    opt.path = fixture("two_stage.json");
    CHECK(cli::cmd_check(opt, os) == 0);
    CHECK(os.str().find("all checks passed") != std::string::npos);
    CHECK(os.str().find("page dims vs coset counts") != std::string::npos);

    std::ostringstream os2;
    cli::CheckOptions rnd;
    rnd.random = true;
    rnd.trials = 20;
    rnd.seed = 7;
    rnd.prime = 2;
    rnd.max_dim = 8;
    CHECK(cli::cmd_check(rnd, os2) == 0);
    std::ostringstream os3;
    CHECK(cli::cmd_check(rnd, os3) == 0);
    CHECK(os2.str() == os3.str());
}
