#include <gtest/gtest.h>

#include "grpi/io.hpp"
#include "grpi/models.hpp"

using namespace grpi;
using Q = RationalField;

namespace {

std::string data(const std::string& name) { return std::string(GRPI_DATA_DIR) + "/" + name; }

Json gz2_doc() { return read_json_file(data("gz2.json")); }

std::string load_error(const Json& doc) {
  try {
    algebra_from_json<Q>(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, LoadsBundledFiles) {
  for (auto name : {"gz2.json", "m2_elementary.json", "ut2.json", "semi_example.json", "counterexample_small.json"}) {
    auto doc = read_json_file(data(name));
    auto loaded = algebra_from_json<Q>(doc);
    EXPECT_FALSE(loaded.algebra->associativity_violation()) << name;
    if (loaded.pair) {
      EXPECT_EQ(loaded.pair->validate(), "") << name;
    }
  }
  auto ut2 = algebra_from_json<Q>(read_json_file(data("ut2.json")));
  ASSERT_TRUE(ut2.pair);
  EXPECT_TRUE(ut2.pair->b_is_ideal);
  EXPECT_EQ(ut2.algebra->dim(), 3u);
}

TEST(Io, SemiExampleFileMatchesConstructor) {
  auto loaded = algebra_from_json<Q>(read_json_file(data("semi_example.json")));
  auto built = semi_example<Q>(2, 2);
  EXPECT_EQ(algebra_to_json(*loaded.algebra, &*loaded.pair)["mult"], algebra_to_json(*built.algebra, &built.pair)["mult"]);
}

TEST(Io, RoundTrip) {
  auto m = counterexample_A<Q>(2, 2);
  auto doc = algebra_to_json(*m.algebra, &m.pair);
  auto back = algebra_from_json<Q>(doc);
  EXPECT_EQ(algebra_to_json(*back.algebra, &*back.pair), doc);
}

TEST(Io, PrimeFieldFiles) {
  auto doc = gz2_doc();
  doc["field"] = {{"kind", "prime"}, {"p", 5}};
  EXPECT_EQ(field_from_json(doc).prime, 5u);
  auto loaded = algebra_from_json(doc, PrimeField(5));
  EXPECT_EQ(loaded.algebra->dim(), 2u);
  doc["field"] = {{"kind", "complex"}};
  EXPECT_THROW(field_from_json(doc), InputError);
}

TEST(Io, SchemaDiagnosticsCarryPointers) {
  auto doc = gz2_doc();
  doc.erase("basis");
  EXPECT_EQ(load_error(doc), "/: missing key \"basis\"");

  doc = gz2_doc();
  doc["mult"][2] = {1, 0, 1, "1/0"};
  EXPECT_EQ(load_error(doc).rfind("/mult/2/3:", 0), 0u) << load_error(doc);

  doc = gz2_doc();
  doc["mult"][1] = {0, 7, 1, "1"};
  EXPECT_EQ(load_error(doc).rfind("/mult/1/1:", 0), 0u) << load_error(doc);

  doc = gz2_doc();
  doc["grading"]["u1"] = "5";
  EXPECT_EQ(load_error(doc).rfind("/grading/u1:", 0), 0u) << load_error(doc);

  doc = gz2_doc();
  doc["group"] = {{"kind", "table"}, {"labels", {"a", "b"}}, {"table", {{0, 0}, {0, 0}}}};
  EXPECT_EQ(load_error(doc).rfind("/group:", 0), 0u) << load_error(doc);
}

TEST(Io, InvariantViolationsNameTheTriple) {
  auto doc = gz2_doc();
  doc["mult"][1] = {0, 1, 0, "1"};
  EXPECT_NE(load_error(doc).find("(i,j,k) = (0,1,0)"), std::string::npos) << load_error(doc);

  // u1 u1 = 2 u0 breaks (u1 u1) u1 = u1 (u1 u1) only if u0 is not central; make u0 u1 = 0
  doc = gz2_doc();
  doc["mult"] = {{0, 0, 0, "1"}, {1, 0, 1, "1"}, {1, 1, 0, "1"}};
  EXPECT_NE(load_error(doc).find("not associative at basis triple"), std::string::npos) << load_error(doc);
}

TEST(Io, SubalgebraValidation) {
  auto doc = read_json_file(data("ut2.json"));
  doc["subalgebras"]["B"] = {{"1", "1", "0"}};
  EXPECT_EQ(load_error(doc).rfind("/subalgebras:", 0), 0u) << load_error(doc);
  doc = read_json_file(data("ut2.json"));
  doc["subalgebras"]["C"] = Json::array({Json::array({"1", "0"})});
  EXPECT_EQ(load_error(doc).rfind("/subalgebras/C/0:", 0), 0u) << load_error(doc);
}

TEST(Io, ReportJson) {
  auto m2 = algebra_from_json<Q>(read_json_file(data("m2_elementary.json"))).algebra;
  auto j = report_to_json(codimension(m2, Signature{2, 0}));
  EXPECT_EQ(j["codimension"], 1);
  EXPECT_EQ(j["identities"][0], "x1{0}*x2{0} - x2{0}*x1{0}");
  EXPECT_EQ(j["signature"], Json::array({2, 0}));
}
