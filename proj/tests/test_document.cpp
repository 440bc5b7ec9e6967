#include "superpoisson/superpoisson.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

using namespace superpoisson;

namespace {

std::string slurp(const std::string& name)
{
    std::ifstream in(std::string(SP_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_load_error(const std::string& text, const std::string& needle)
{
    try {
        (void)load_document(text);
        FAIL("expected DocumentError for: " << text);
    } catch (const DocumentError& e) {
        INFO(e.what());
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

} // namespace

TEST_CASE("every corpus fixture loads and matches the in-code corpus shape")
{
    struct Row {
        const char* file;
        bool poisson;
        int degree; // ignored for data
    };
    const Row rows[] = {
        {"pseudoeuclidean_diag_1_1.json", true, -2},
        {"pseudoeuclidean_diag_1_m1.json", true, -2},
        {"pseudoeuclidean_random_3x3.json", true, -2},
        {"metric_r2_identity.json", true, -2},
        {"metric_r3_identity.json", true, -2},
        {"metric_r2_polynomial.json", true, -2},
        {"metric_r3_polynomial.json", true, -2},
        {"bivector_r2_constant.json", true, -1},
        {"bivector_r2_linear.json", true, -1},
        {"classical_so3.json", true, 0},
        {"broken_table.json", true, 0},
        {"trivial.json", true, 0},
        {"algebroid_metric_r2.json", false, 0},
    };
    for (const Row& row : rows) {
        INFO(row.file);
        const GerstenhaberBracketSource src = load_document(slurp(row.file));
        if (row.poisson) {
            REQUIRE(std::holds_alternative<GradedPoissonStructure>(src));
            CHECK(std::get<GradedPoissonStructure>(src).degree == row.degree);
        } else {
            CHECK(std::holds_alternative<AlgebroidData>(src));
        }
    }
}

TEST_CASE("the data fixture agrees with the structure it was derived from")
{
    const GerstenhaberBracketSource sp = load_document(slurp("metric_r2_polynomial.json"));
    const GerstenhaberBracketSource sd = load_document(slurp("algebroid_metric_r2.json"));
    REQUIRE(std::holds_alternative<GradedPoissonStructure>(sp));
    REQUIRE(std::holds_alternative<AlgebroidData>(sd));
    const GradedPoissonStructure& P = std::get<GradedPoissonStructure>(sp);
    const AlgebroidData& D = std::get<AlgebroidData>(sd);
    const AlgebroidData derived = to_algebroid_data(PoissonAlgebroid{P});
    for (std::uint32_t i = 0; i < gen_count(P.sig); ++i) {
        const GenId u = gen_at(P.sig, i);
        CHECK(D.anchor_value(u) == derived.anchor_value(u));
        for (std::uint32_t j = 0; j < gen_count(P.sig); ++j)
            CHECK(D.bracket_value(u, gen_at(P.sig, j))
                  == derived.bracket_value(u, gen_at(P.sig, j)));
    }
}

TEST_CASE("the malformed fixture is rejected")
{
    check_load_error(slurp("malformed.json"), "out of range for the signature");
}

TEST_CASE("schema violations carry located diagnostics")
{
    check_load_error("{", "not valid JSON");
    check_load_error(R"({"schema_version": 1})", "missing field \"signature\"");
    check_load_error(
        R"({"schema_version": 2, "signature": {"m":1,"n":0}, "kind":"poisson", "degree":0})",
        "unsupported schema_version");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"poisson", "degree":0, "extra": 1})",
        "unknown field \"extra\"");
    check_load_error(R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"flow"})",
                     "\"kind\" must be");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":-1,"n":0}, "kind":"poisson", "degree":0})",
        "nonnegative");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":1,"de_rham":true}, "kind":"poisson", "degree":0})",
        "bad signature");
}

TEST_CASE("poisson document constraints")
{
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":3,"n":0}, "kind":"poisson", "builder":"metric", "matrix": [["1","0"],["0","1"]]})",
        "does not match builder");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":2,"de_rham":true}, "kind":"poisson", "builder":"metric", "degree":0, "matrix": [["1","0"],["0","1"]]})",
        "declared degree does not match");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":0}, "kind":"poisson", "degree":0, "table": {"x1,x2": "th1"}})",
        "table[\"x1,x2\"]");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":2,"de_rham":true}, "kind":"poisson", "builder":"bivector", "matrix": [["0","1"],["1","0"]]})",
        "antisymmetric");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":2,"de_rham":true}, "kind":"poisson", "builder":"bivector", "matrix": [["0","1"]]})",
        "must be square");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":0,"n":2}, "kind":"poisson", "builder":"pseudoeuclidean", "matrix": [["x1","0"],["0","1"]]})",
        "matrix[0][0]");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":0}, "kind":"poisson", "builder":"classical", "matrix": [["0","x1"],["-x1","0"]], "table": {}})",
        "mutually exclusive");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"poisson", "degree":0, "anchor": {}})",
        "not allowed for kind \"poisson\"");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"poisson", "degree":100})",
        "out of range");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"poisson", "table": {}})",
        "missing field \"degree\"");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":1,"n":0}, "kind":"poisson", "degree":0, "matrix": [["0"]]})",
        "\"matrix\" requires \"builder\"");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":0}, "kind":"poisson", "degree":0, "table": {"x1": "x2"}})",
        "separated by a comma");
    // a skew violation inside the table is a construction error, located
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":2,"n":0}, "kind":"poisson", "degree":0, "table": {"x1,x2": "x1", "x2,x1": "x1"}})",
        "table[\"x2,x1\"]");
}

TEST_CASE("algebroid document constraints")
{
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":0,"n":1}, "kind":"algebroid", "degree": 0})",
        "not allowed for kind \"algebroid\"");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":0,"n":1}, "kind":"algebroid", "anchor": {"th1": {"th1":"1"}}})",
        "bad generator key");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":0,"n":2}, "kind":"algebroid", "bracket": {"dth1,dth2": "dth1"}})",
        "wrong parity");
    check_load_error(
        R"({"schema_version": 1, "signature": {"m":0,"n":2}, "kind":"algebroid", "bracket": {"dth1,dth2": "th1*dth1", "dth2,dth1": "-th1*dth1"}})",
        "bracket[\"dth2,dth1\"]");
}

TEST_CASE("documents accept stdin-style whitespace and key order freely")
{
    const std::string doc =
        R"({"kind":"poisson","degree":0,"table":{"x1 , x2":"x3","x2,x3":"x1","x3,x1":"x2"},"signature":{"n":0,"m":3},"schema_version":1})";
    const GerstenhaberBracketSource src = load_document(doc);
    REQUIRE(std::holds_alternative<GradedPoissonStructure>(src));
    const GradedPoissonStructure& P = std::get<GradedPoissonStructure>(src);
    CHECK(bracket(P, parse_element("x1", P.sig), parse_element("x2", P.sig))
          == parse_element("x3", P.sig));
}
