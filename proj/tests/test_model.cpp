#include <stdexcept>

#include "doctest.h"
#include "rtw/model.hpp"

using namespace rtw;

TEST_CASE("pair indexing is colex within the upper triangle") {
    CHECK(pair_index(0, 1, 4) == 0);
    CHECK(pair_index(1, 0, 4) == 0);
    CHECK(pair_index(0, 3, 4) == 2);
    CHECK(pair_index(2, 3, 4) == 5);
}

TEST_CASE("color and weight parsing") {
    CHECK(parse_color("red") == Color::red);
    CHECK(parse_color("blue") == Color::blue);
    CHECK_THROWS_AS(parse_color("green"), std::invalid_argument);
    CHECK(other(Color::red) == Color::blue);

    CHECK(parse_weight("0") == Weight::zero);
    CHECK(parse_weight("1/2") == Weight::half);
    CHECK(parse_weight("1") == Weight::one);
    CHECK_THROWS_AS(parse_weight("0.5"), std::invalid_argument);
    CHECK(weight_value(Weight::half) == Rat(1, 2));
    CHECK(weight_string(Weight::zero) == "0");
    CHECK(half_units(Weight::one) == 2);
}

TEST_CASE("rational parsing accepts fractions, integers, and decimals") {
    CHECK(parse_rational("3/5") == Rat(3, 5));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(to_string(Rat(5, 10)) == "1/2");
    CHECK(to_string(Rat(4)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("graph mass counts half units") {
    WCCG g(4);
    CHECK(g.mass() == 6);
    g.set_weight(0, 1, Weight::half);
    g.set(2, 3, Color::blue, Weight::zero);
    CHECK(g.mass() == Rat(9, 2));
}

TEST_CASE("simplex distributions validate and expose their support") {
    SimplexDistribution u{{Rat(1, 2), Rat(0), Rat(1, 2)}};
    CHECK(u.valid());
    CHECK(u.support() == std::vector<int>{0, 2});
    SimplexDistribution bad{{Rat(1, 2), Rat(1, 2), Rat(1, 2)}};
    CHECK_FALSE(bad.valid());
    SimplexDistribution neg{{Rat(3, 2), Rat(-1, 2)}};
    CHECK_FALSE(neg.valid());
}

TEST_CASE("weighted graph JSON round-trips exactly") {
    WCCG g(3, Color::red);
    g.vertex_colors[1] = Color::blue;
    g.set(0, 1, Color::blue, Weight::half);
    g.set(1, 2, Color::red, Weight::zero);
    std::string text = wccg_to_json(g);
    WCCG back = wccg_from_json(text);
    CHECK(back.t == 3);
    CHECK(back.vertex_colors == g.vertex_colors);
    CHECK(back.edge_colors == g.edge_colors);
    CHECK(back.weights == g.weights);
    CHECK(wccg_to_json(back) == text);
}

TEST_CASE("weighted graph JSON rejects malformed inputs") {
    CHECK_THROWS_AS(wccg_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(wccg_from_json("{\"t\": -1}"), std::invalid_argument);
    CHECK_THROWS_AS(wccg_from_json("{\"t\": 2}"), std::invalid_argument);
    // all C(t,2) pairs are required, exactly once each
    CHECK_THROWS_AS(
        wccg_from_json("{\"t\": 2, \"vertex_colors\": [\"red\", \"red\"], \"edges\": []}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        wccg_from_json("{\"t\": 2, \"vertex_colors\": [\"red\", \"red\"], \"edges\": "
                       "[{\"u\": 0, \"v\": 1, \"color\": \"red\", \"weight\": 0.5}]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        wccg_from_json("{\"t\": 2, \"vertex_colors\": [\"red\"], \"edges\": "
                       "[{\"u\": 0, \"v\": 1, \"color\": \"red\", \"weight\": \"1\"}]}"),
        std::invalid_argument);
}

TEST_CASE("colored graph JSON keeps the complete flag and non-edges") {
    ColoredGraph g(4);
    g.set_edge(0, 1, Color::red);
    g.set_edge(2, 3, Color::blue);
    std::string text = colored_to_json(g);
    ColoredGraph back = colored_from_json(text);
    CHECK_FALSE(back.complete);
    CHECK(back.has_edge(0, 1));
    CHECK_FALSE(back.has_edge(0, 2));
    CHECK(back.color(2, 3) == Color::blue);
    CHECK(colored_to_json(back) == text);

    ColoredGraph k3(3, true);
    k3.set_edge(0, 1, Color::red);
    k3.set_edge(0, 2, Color::red);
    // a complete coloring must cover every pair
    CHECK_THROWS_AS(colored_from_json(colored_to_json(k3)), std::invalid_argument);
    k3.set_edge(1, 2, Color::blue);
    CHECK(colored_from_json(colored_to_json(k3)).complete);
}

TEST_CASE("plain graph JSON round-trips and rejects duplicates") {
    PlainGraph g;
    g.n = 5;
    g.add_edge(3, 0);
    g.add_edge(1, 4);
    PlainGraph back = plain_from_json(plain_to_json(g));
    CHECK(back.n == 5);
    CHECK(back.has_edge(0, 3));
    CHECK(back.has_edge(1, 4));
    CHECK(back.edges.size() == 2);
    CHECK_THROWS_AS(plain_from_json("{\"n\": 3, \"edges\": [[0, 1], [1, 0]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(plain_from_json("{\"n\": 3, \"edges\": [[0, 3]]}"),
                    std::invalid_argument);
}
