#include <gtest/gtest.h>

#include <string>

#include "stonewb/error.hpp"
#include "stonewb/io.hpp"

using namespace stonewb;

namespace {

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
    try {
        parse_input_text(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(Io, Fixtures) {
    EXPECT_EQ(kind_of(parse_input_file(data("chain3.json"))), "cposet");
    EXPECT_EQ(kind_of(parse_input_file(data("sierpinski.json"))), "space");
    EXPECT_EQ(kind_of(parse_input_file(data("m3.json"))), "lattice");
    EXPECT_EQ(kind_of(parse_input_file(data("strict_embedding.json"))), "strict-map");
    EXPECT_EQ(kind_of(parse_input_file(data("spectral_swap.json"))), "spectral-map");
    auto p = std::get<CPoset>(parse_input_file(data("chain3.json")));
    EXPECT_EQ(p.closure(bit(2)), 7u);
}

TEST(Io, RoundTrip) {
    auto p = std::get<CPoset>(parse_input_file(data("chain3.json")));
    auto q = std::get<CPoset>(parse_input_json(to_json(p)));
    EXPECT_EQ(p.code(), q.code());
    EXPECT_EQ(p.poset(), q.poset());
    auto s = std::get<SpaceWithBase>(parse_input_file(data("sierpinski.json")));
    EXPECT_EQ(std::get<SpaceWithBase>(parse_input_json(to_json(s))), s);
    auto l = std::get<Lattice>(parse_input_file(data("grid2.json")));
    auto l2 = std::get<Lattice>(parse_input_json(to_json(l)));
    EXPECT_EQ(l.meet, l2.meet);
    EXPECT_EQ(l.join, l2.join);
}

TEST(Io, Errors) {
    EXPECT_NE(error_of("{\n\"kind\": \"space\",\n  [\n}").find("line 3"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "nope"})").find("unknown kind"), std::string::npos);
    EXPECT_NE(error_of(R"({"carrier": []})").find("kind"), std::string::npos);
    EXPECT_FALSE(error_of(R"({"kind": "cposet", "carrier": [0], "leq": [[0, 4]], "operator": []})").empty());
    EXPECT_FALSE(error_of(R"({"kind": "space", "points": [0], "base": [[0]], "beta": [1]})").empty());
    EXPECT_FALSE(error_of(R"({"kind": "cposet", "carrier": [-1], "leq": [], "operator": []})").empty());
    EXPECT_THROW(parse_input_file(data("missing.json")), InputError);
}

TEST(Io, DownOperator) {
    auto p = std::get<CPoset>(parse_input_text(
        R"({"kind": "cposet", "carrier": [0, 1], "leq": [[0, 1]], "operator": "down"})"));
    EXPECT_EQ(p.closure(bit(1)), 3u);
}

TEST(Io, Dot) {
    auto s = std::get<SpaceWithBase>(parse_input_file(data("sierpinski.json")));
    EXPECT_NE(dot_specialization(s).find("digraph"), std::string::npos);
    EXPECT_NE(dot_base_inclusion(s).find("->"), std::string::npos);
    auto p = std::get<CPoset>(parse_input_file(data("chain3.json")));
    auto dot = dot_hasse(p.poset(), "chain");
    EXPECT_NE(dot.find("digraph \"chain\""), std::string::npos);
}
