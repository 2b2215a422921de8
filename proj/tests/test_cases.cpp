#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ampcyl/bundle.hpp"
#include "ampcyl/cases.hpp"

using namespace ampcyl;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string e7_text() { return slurp(std::filesystem::path(AMPCYL_CASES_DIR) / "E7.json"); }

std::string mutate(const std::function<void(json&)>& f) {
  json j = json::parse(e7_text());
  f(j);
  return j.dump();
}

} // namespace

TEST(LoadCase, E7) {
  auto c = load_case(e7_text());
  EXPECT_EQ(c.type_label, "E7");
  EXPECT_EQ(c.ambient_n, 8);
  EXPECT_EQ(c.morphism, Morphism::F);
  EXPECT_EQ(c.lines.size(), 5u);
  EXPECT_EQ(c.basis.gram(), (Matrix2{{{7, 2}, {2, Rational(1, 2)}}}));
  EXPECT_EQ(c.basis.names()[1], "e6bar");
  EXPECT_EQ(c.pushforwards.size(), 5u);
  EXPECT_EQ(c.aux_classes.size(), 2u);
  ASSERT_EQ(c.cylinders.size(), 1u);
  EXPECT_EQ(c.cylinders[0].boundary, (std::vector<std::string>{"l1", "l2", "l4"}));
  ASSERT_EQ(c.pullbacks.size(), 2u);
  EXPECT_EQ(c.pullbacks[1].target, "e6bar");
  EXPECT_EQ(c.pullbacks[1].strict_self, -1);
  EXPECT_EQ(c.expected.covering_sets, std::vector<CylinderSet>{{"U0"}});
}

TEST(LoadCase, ClassLookup) {
  auto c = load_case(e7_text());
  EXPECT_EQ(c.resolve("l4").coords, (Vec2{2, -5}));
  EXPECT_EQ(c.resolve("Qbar").coords, (Vec2{2, -5}));
  EXPECT_EQ(c.resolve("lbar").coords, (Vec2{1, 0}));
  EXPECT_EQ(c.resolve("e6bar").coords, (Vec2{0, 1}));
  EXPECT_THROW(c.resolve("l9"), UnknownClassName);
  EXPECT_THROW(c.cylinder("U1"), UnknownCylinder);
}

TEST(LoadCase, DanglingBoundaryName) {
  auto t = mutate([](json& j) { j["cylinders"][0]["boundary"].push_back("lbar_99"); });
  EXPECT_THROW(load_case(t), ReferenceError);
  auto m = mutate([](json& j) { j["mori_generators"].push_back("nothing"); });
  EXPECT_THROW(load_case(m), ReferenceError);
  auto s = mutate([](json& j) { j["expected"]["covering_sets"][0].push_back("U5"); });
  EXPECT_THROW(load_case(s), ReferenceError);
}

TEST(LoadCase, BadRational) {
  auto t = mutate([](json& j) { j["basis"]["gram"][0][0] = "1/0"; });
  EXPECT_THROW(load_case(t), RationalError);
  auto u = mutate([](json& j) { j["pushforwards"]["l1"][0] = "one"; });
  EXPECT_THROW(load_case(u), RationalError);
}

TEST(LoadCase, ParseError) {
  EXPECT_THROW(load_case("{\"type\": "), ParseError);
  EXPECT_THROW(load_case(""), ParseError);
  try {
    load_case("{\"type\": \"E7\",, }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("15"), std::string::npos) << e.what();
  }
}

TEST(LoadCase, SchemaErrors) {
  EXPECT_THROW(load_case("[]"), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j.erase("basis"); })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["extra"] = 1; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["type"] = "B3"; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["morphism"] = "h"; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["ambient_n"] = "8"; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["lines"][0]["coords"].push_back("0"); })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["pullbacks"][0]["coefficients"]["E1"] = "-1"; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { std::swap(j["pullbacks"][0], j["pullbacks"][1]); })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["basis"]["gram"][0][1] = "3"; })), SchemaError);
  EXPECT_THROW(load_case(mutate([](json& j) { j["aux_classes"]["l1"] = {"0", "1"}; })), SchemaError);
}

TEST(Bundle, CountAndOrder) {
  const auto& b = bundled_cases();
  ASSERT_EQ(b.size(), 13u);
  ASSERT_EQ(known_types().size(), 13u);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i].type_label, known_types()[i]);
  EXPECT_EQ(known_types().front(), "A4+A2+A1");
  EXPECT_EQ(known_types().back(), "E7");
  EXPECT_FALSE(bundled_case("A8"));
  EXPECT_EQ(file_stem("A7''"), "A7pp");
  EXPECT_EQ(file_stem("A7'"), "A7p");
}

TEST(Bundle, ExpectedSets) {
  auto a = *bundled_case("A5+2A1");
  EXPECT_NE(std::find(a.expected.covering_sets.begin(), a.expected.covering_sets.end(), CylinderSet{"U1"}),
            a.expected.covering_sets.end());
  auto p = *bundled_case("A7''");
  EXPECT_EQ(p.expected.covering_sets.front(), (CylinderSet{"U0", "U1", "U2", "U3"}));
  std::size_t composite = 0;
  for (const auto& c : bundled_cases()) composite += c.morphism == Morphism::FG;
  EXPECT_EQ(composite, 5u);
}

TEST(Serialize, RoundTrip) {
  for (const auto& c : bundled_cases()) {
    auto back = load_case(serialize_case(c));
    EXPECT_EQ(back, c) << c.type_label;
    EXPECT_EQ(serialize_case(back), serialize_case(c)) << c.type_label;
  }
}

TEST(Serialize, FilesMatchBundle) {
  for (const auto& c : bundled_cases()) {
    auto p = std::filesystem::path(AMPCYL_CASES_DIR) / (file_stem(c.type_label) + ".json");
    ASSERT_TRUE(std::filesystem::exists(p)) << p;
    EXPECT_EQ(load_case(slurp(p)), c) << c.type_label;
  }
}
