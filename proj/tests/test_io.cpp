#include "fusion/errors.hpp"
#include "fusion/generators.hpp"
#include "fusion/io.hpp"

#include <doctest.h>
#include <filesystem>
#include <json.hpp>

using namespace fusion;
using nlohmann::json;

TEST_CASE("rules round-trip through text") {
    std::vector<FusionRule> rules;
    for (const auto &name : fixture_catalogue())
        rules.push_back(named_fixture(name));
    rules.push_back(su2k(5));
    rules.push_back(drinfeld_double(named_group("q8")));
    for (const auto &rule : rules) {
        const auto text = serialize_rule(rule);
        const auto back = parse_rule(text);
        CHECK(back == rule);
        CHECK(std::equal(back.labels().begin(), back.labels().end(), rule.labels().begin(),
                         rule.labels().end()));
        CHECK(serialize_rule(back) == text);
    }
}

TEST_CASE("serialized form") {
    const auto text = serialize_rule(named_fixture("fibonacci"));
    const auto doc = json::parse(text);
    CHECK(doc["rank"] == 2);
    CHECK(doc["labels"] == json::array({"1", "tau"}));
    CHECK(doc["dual"] == json::array({0, 1}));
    CHECK(doc["fusion"].size() == 5);
    CHECK(doc["fusion"][4] == json::array({1, 1, 1, 1}));
}

TEST_CASE("labels are optional") {
    const auto r = parse_rule(R"({"rank": 2, "dual": [0, 1],
        "fusion": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]})");
    CHECK(r.rank() == 2);
    CHECK(r.label(1) == "x1");
}

TEST_CASE("malformed documents") {
    const char *base = R"({"rank": 2, "dual": [0, 1], "fusion": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1)";
    CHECK_NOTHROW(parse_rule(std::string(base) + "]]}"));
    CHECK_THROWS_WITH_AS(parse_rule(std::string(base) + "],[1,1,0,1]]}"), doctest::Contains("duplicate"),
                         ParseError);
    CHECK_THROWS_AS(parse_rule(std::string(base) + "],[1,1,1,0]]}"), ParseError);
    CHECK_THROWS_AS(parse_rule(std::string(base) + "],[1,1,1,1.5]]}"), ParseError);
    CHECK_THROWS_AS(parse_rule(std::string(base) + "],[1,1,2,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_rule(std::string(base) + "],[1,1,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_rule("{"), ParseError);
    CHECK_THROWS_AS(parse_rule("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"dual": [0], "fusion": []})"), ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"rank": 0, "dual": [], "fusion": []})"), ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"rank": 2, "dual": [0], "fusion": []})"), ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"rank": 2, "dual": [0, 5], "fusion": []})"), ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"rank": 2, "labels": ["1"], "dual": [0, 1], "fusion": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_rule(R"({"rank": 100000, "dual": [], "fusion": []})"), CapacityError);
}

TEST_CASE("reading missing files") {
    CHECK_THROWS_AS(read_rule_file("/nonexistent/rule.json"), ParseError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.json", "x"), Error);
}

TEST_CASE("group files round-trip") {
    for (const auto *name : {"s3", "q8", "z5"}) {
        const auto g = named_group(name);
        const auto back = parse_group(serialize_group(g));
        CHECK(back.order() == g.order());
        CHECK(back.table() == g.table());
        CHECK(back.name() == g.name());
    }
    CHECK_THROWS_AS(parse_group(R"({"order": 2, "table": [0, 1, 1, 1]})"), StructuralError);
    CHECK_THROWS_AS(parse_group(R"({"order": 2, "table": [0, 1, 1, 7]})"), ParseError);
}

TEST_CASE("DOT output") {
    const auto dot = to_dot(named_fixture("ising"));
    CHECK(dot == "digraph adjoint {\n"
                 "  n0 [label=\"1\"];\n"
                 "  n1 [label=\"sigma\"];\n"
                 "  n2 [label=\"psi\"];\n"
                 "  n1 -> n0 [label=\"1\"];\n"
                 "  n1 -> n2 [label=\"1\"];\n"
                 "  n2 -> n0 [label=\"1\"];\n"
                 "}\n");
    CHECK(to_dot(trivial_rule()) == "digraph adjoint {\n  n0 [label=\"1\"];\n}\n");
    const auto z3 = to_dot(pointed(cyclic_group(3)));
    CHECK(z3.find("label=\"g1, g2\"") != std::string::npos);
}

TEST_CASE("analysis JSON has a fixed key set") {
    const auto rule = named_fixture("fibonacci");
    const auto doc = json::parse(analysis_json(rule, analyze(rule)));
    std::vector<std::string> keys;
    for (const auto &[k, v] : doc.items())
        keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"acyclic", "agree", "central_series", "fp_dimensions",
                                           "global_dimension", "integral", "labels", "nilpotency_class",
                                           "nilpotent", "rank", "weakly_integral", "witness"});
    CHECK(doc["witness"]["labels"] == json::array({1, 1}));
    CHECK(doc["nilpotency_class"].is_null());
}

TEST_CASE("validation text lists axiom names") {
    const auto r = parse_rule(R"({"rank": 2, "dual": [0, 1],
        "fusion": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,2]]})");
    const auto text = format_validation(r, validate(r));
    CHECK(text.find("valid: no") != std::string::npos);
    CHECK(text.find("vacuum_multiplicity") != std::string::npos);
    const auto doc = json::parse(validation_json(validate(r)));
    CHECK(doc["valid"] == false);
}
