#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "kcrank/bivariate.hpp"
#include "kcrank/formats.hpp"
#include "kcrank/qexpr.hpp"

using namespace kcrank;

TEST_CASE("table csv round trip") {
    KCrankTable t = build(2, 10);
    std::string csv = render_table_csv(t);
    std::istringstream in(csv);
    KCrankTable back = parse_table_csv(in, 2);
    CHECK(back == t);
    SUBCASE("k=1 keeps negative m columns") {
        KCrankTable t1 = to_table(crank_gf(1, 6), 1);
        std::string csv1 = render_table_csv(t1);
        CHECK(csv1.find("1,-1,1") != std::string::npos);
        std::istringstream in1(csv1);
        CHECK(parse_table_csv(in1, 1) == t1);
    }
    SUBCASE("rejects malformed input") {
        std::istringstream no_header("1,0,1\n");
        CHECK_THROWS_AS(parse_table_csv(no_header, 2), CacheFormatError);
        std::istringstream bad_row("n,m,value\n1,0\n");
        CHECK_THROWS_AS(parse_table_csv(bad_row, 2), CacheFormatError);
        std::istringstream bad_cell("n,m,value\n1,2,1\n");  // m > n for k=2
        CHECK_THROWS_AS(parse_table_csv(bad_cell, 2), CacheFormatError);
    }
}

TEST_CASE("table json round trip") {
    KCrankTable t = build(3, 8);
    std::string json = render_table_json(t);
    std::istringstream in(json);
    KCrankTable back = parse_table_json(in);
    CHECK(back == t);
    SUBCASE("k=1") {
        KCrankTable t1 = to_table(crank_gf(1, 5), 1);
        std::istringstream in1(render_table_json(t1));
        CHECK(parse_table_json(in1) == t1);
    }
    SUBCASE("values are strings") {
        CHECK(json.find("\"1\"") != std::string::npos);
    }
    SUBCASE("rejects wrong shapes") {
        std::istringstream missing("{\"k\":2,\"rows\":[]}");
        CHECK_THROWS_AS(parse_table_json(missing), CacheFormatError);
        std::istringstream short_rows("{\"k\":2,\"order\":2,\"rows\":[[\"1\"]]}");
        CHECK_THROWS_AS(parse_table_json(short_rows), CacheFormatError);
        std::istringstream not_json("][");
        CHECK_THROWS_AS(parse_table_json(not_json), CacheFormatError);
    }
}

TEST_CASE("series renders") {
    QSeries s = evaluate(parse("1/((-q;q)^2)"), 4);
    CHECK(render_series_text(s) == "1 -2 1 -2 4\n");
    CHECK(render_series_csv(s) == "n,coefficient\n0,1\n1,-2\n2,1\n3,-2\n4,4\n");
    std::string json = render_series_json(s);
    CHECK(json.find("\"-2\"") != std::string::npos);
    CHECK(json.find("\"order\": 4") != std::string::npos);
}

TEST_CASE("residue renders") {
    ResidueTable rt = residues(build(2, 6), 2);
    std::string csv = render_residues_csv(rt);
    CHECK(csv.rfind("n,r,value\n", 0) == 0);
    CHECK(csv.find("4,0,12") != std::string::npos);
    CHECK(csv.find("4,1,8") != std::string::npos);
    std::string text = render_residues_text(rt);
    CHECK(text.find("4: 12 8") != std::string::npos);
}

TEST_CASE("sequence renders") {
    std::vector<Integer> v = {Integer(-1), Integer(3), Integer(-7)};
    CHECK(render_sequence_text(v) == "-1 3 -7\n");
    CHECK(render_sequence_csv(v) == "n,value\n0,-1\n1,3\n2,-7\n");
    CHECK(render_sequence_json(v).find("\"-7\"") != std::string::npos);
}
