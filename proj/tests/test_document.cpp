#include <doctest.h>

#include <fstream>
#include <sstream>

#include "specseq/document.hpp"

using namespace specseq;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse/serialize round trip on every filtration kind") {
    for (const char* name : {"two_stage.json", "total_2x2.json", "trivial_small.json"}) {
        ComplexDocument doc = parse_complex_document(slurp(name));
        std::string once = serialize_complex_document(doc);
        ComplexDocument again = parse_complex_document(once);
        CHECK(doc.complex == again.complex);
        CHECK(doc.kind == again.kind);
        CHECK(serialize_complex_document(again) == once);
    }
}

TEST_CASE("negative entries reduce to canonical residues") {
    ComplexDocument doc = parse_complex_document(slurp("trivial_small.json"));
    CHECK(doc.complex.prime() == 3);
    CHECK(doc.complex.boundary(1)(0, 0) == 2);  // authored as -1
}

TEST_CASE("unknown fields are rejected") {
    CHECK_THROWS_WITH_AS(parse_complex_document(slurp("unknown_field.json")),
                         doctest::Contains("unknown field"), DocumentError);
    CHECK_THROWS_AS(
        parse_complex_document(R"({"prime":2,"min_degree":0,"max_degree":0,"dims":[1],)"
                               R"("boundaries":{},"filtration":{"type":"trivial","extra":1}})"),
        DocumentError);
}

TEST_CASE("malformed documents carry position information") {
    try {
        parse_complex_document(slurp("malformed.json"));
        FAIL("expected a parse error");
    } catch (const DocumentError& e) {
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
}

TEST_CASE("shape and schema errors") {
    CHECK_THROWS_AS(parse_complex_document("[]"), DocumentError);
    CHECK_THROWS_AS(
        parse_complex_document(R"({"prime":6,"min_degree":0,"max_degree":0,"dims":[1],)"
                               R"("boundaries":{},"filtration":{"type":"trivial"}})"),
        DocumentError);  // 6 is not prime
    CHECK_THROWS_AS(
        parse_complex_document(R"({"prime":2,"min_degree":0,"max_degree":1,"dims":[1,1],)"
                               R"("boundaries":{"1":[[1],[1]]},"filtration":{"type":"trivial"}})"),
        DocumentError);  // boundary has the wrong shape
    CHECK_THROWS_AS(
        parse_complex_document(R"({"prime":2,"min_degree":0,"max_degree":0,"dims":[1],)"
                               R"("boundaries":{},"filtration":{"type":"diagonal"}})"),
        DocumentError);  // unknown filtration type
}

TEST_CASE("violating documents still parse; validate reports them") {
    ComplexDocument doc = parse_complex_document(slurp("bad_nesting.json"));
    ValidationReport rep = doc.complex.validate();
    CHECK_FALSE(rep.ok());
    CHECK(rep.to_string().find("nesting") != std::string::npos);
    CHECK(rep.to_string().find("(n=0, p=0)") != std::string::npos);
}

TEST_CASE("machine page records are self-consistent") {
    ComplexDocument doc = parse_complex_document(slurp("two_stage.json"));
    Page pg = page(doc.complex, 1);
    nlohmann::ordered_json j = page_to_json(doc.complex, pg);
    CHECK(j["r"] == 1);
    for (const auto& e : j["entries"]) {
        CHECK(e["coset_basis"].size() == e["dim"].get<size_t>());
    }
    // matrix shapes match the entry dims on both ends
    std::map<std::pair<int, int>, size_t> dims;
    for (const auto& e : j["entries"]) dims[{e["p"], e["q"]}] = e["dim"].get<size_t>();
    for (const auto& d : j["differentials"]) {
        size_t source_dim = dims.at({d["p"], d["q"]});
        size_t target_dim = dims.count({d["target_p"], d["target_q"]})
                                ? dims.at({d["target_p"], d["target_q"]})
                                : 0;
        CHECK(d["matrix"].size() == target_dim);
        for (const auto& row : d["matrix"]) CHECK(row.size() == source_dim);
    }
}
