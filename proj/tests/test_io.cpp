#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "curveforge/admissibility.hpp"
#include "curveforge/io.hpp"
#include "curveforge/parser.hpp"

using namespace curveforge;

namespace {

Json load(const std::string& name) {
    std::ifstream in(std::string(CURVEFORGE_FIXTURES) + "/" + name);
    return Json::parse(in);
}

}  // namespace

TEST(CurveJson, RoundTrip) {
    const CurveEquation c = curve_from_json(load("septic.json"));
    EXPECT_EQ(c.d(), 7);
    EXPECT_EQ(c.F(), parse_poly("y^5"));
    EXPECT_EQ(curve_from_json(curve_to_json(c)), c);
}

TEST(CurveJson, Errors) {
    auto kind = [](const Json& j) {
        try {
            curve_from_json(j);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind(Json{{"d", 4}, {"F", "y^2"}, {"G", "x^3"}}), ErrorKind::SyntaxError);
    EXPECT_EQ(kind(Json{{"d", "4"}, {"F", "y^2"}, {"G", "x^3"}, {"H", "x^4"}}), ErrorKind::SyntaxError);
    EXPECT_EQ(kind(Json{{"d", 5}, {"F", "y^2"}, {"G", "x^3"}, {"H", "x^4"}}), ErrorKind::DegreeMismatch);
    EXPECT_EQ(kind(Json{{"d", 4}, {"F", "y^2"}, {"G", "x^3 +"}, {"H", "x^4"}}), ErrorKind::SyntaxError);
}

TEST(DataJson, RoundTrip) {
    for (const auto& m : enumerate(6, 1)) {
        const Json j = data_to_json(m);
        EXPECT_EQ(data_from_json(j), m);
        EXPECT_EQ(data_from_json(j.at("text")), m);
    }
}

TEST(Positions, Strings) {
    EXPECT_EQ(position_to_string(std::nullopt), "inf");
    EXPECT_EQ(position_to_string(parse_rat("-2/4")), "-1/2");
    EXPECT_FALSE(parse_position("inf").has_value());
    EXPECT_EQ(*parse_position("3/6"), parse_rat("1/2"));
}

TEST(Fixtures, EveryClassFixtureHasItsClass) {
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CURVEFORGE_FIXTURES)) {
        const std::string stem = entry.path().stem().string();
        if (stem.rfind("class_", 0) != 0) continue;
        const AnalysisReport r = analyze(curve_from_json(load(entry.path().filename().string())));
        ASSERT_TRUE(r.data.has_value()) << stem;
        EXPECT_EQ(label_name(corollary_class(*r.data)), stem.substr(6));
        ++count;
    }
    EXPECT_EQ(count, 15);
}

TEST(ReportJson, Quartic) {
    const Json j = report_to_json(analyze(curve_from_json(load("quartic.json"))));
    EXPECT_EQ(j.at("two_formula"), Json::parse("[[2,0],[0,3],[0,3]]"));
    EXPECT_EQ(j.at("data").at("text"), "[(2), (2_1), (2_1)]");
    EXPECT_EQ(j.at("genus"), 0);
}
