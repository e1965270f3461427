#include <catch2/catch_amalgamated.hpp>

#include "flatspec/io.hpp"

using namespace flatspec;

TEST_CASE("point set json round trip") {
    PointSet s(4);
    s.insert(0);
    s.insert(7);
    s.insert(12);
    const Json j = to_json(s);
    CHECK(j["n"] == 4);
    CHECK(j["points"] == Json::array({0, 7, 12}));
    CHECK(point_set_from_json(j) == s);
}

TEST_CASE("point set loader rejects malformed input") {
    CHECK_THROWS_AS(point_set_from_json(Json{{"n", 3}, {"points", {1, 8}}}),
                    std::invalid_argument); // out of range
    CHECK_THROWS_AS(point_set_from_json(Json{{"n", 3}, {"points", {2, 2}}}),
                    std::invalid_argument); // duplicate
    CHECK_THROWS_AS(point_set_from_json(Json{{"n", 3}, {"points", {-1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_set_from_json(Json{{"points", {0}}}), std::invalid_argument);
    CHECK_THROWS_AS(point_set_from_json(Json{{"n", 40}, {"points", Json::array()}}),
                    std::invalid_argument); // dimension beyond the cap
}

TEST_CASE("flat json") {
    const Point basis[2] = {2, 1};
    const Json j = to_json(Flat(3, basis, 4));
    CHECK(j["dim"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["offset"] == 4);
    CHECK(j["basis"] == Json::array({2, 1}));
}

TEST_CASE("spectrum json shape") {
    Spectrum sp{3, 2, 3, {3, 5, 6, 7}, 0.5, "exhaustive"};
    const Json j = to_json(sp);
    CHECK(j["members"].size() == 4);
    CHECK(j["density"] == 0.5);
    CHECK(j["method"] == "exhaustive");
}
