#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ringcent/gallery.hpp"
#include "ringcent/ring_spec.hpp"

using namespace ringcent;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const nlohmann::json& j) {
  try {
    validate(spec_from_json(j));
  } catch (const RingError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << j.dump();
  return ErrorKind::MalformedSpec;
}

fs::path temp_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("ringcent_spec_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(RingSpec, ExplicitRoundTrip) {
  for (const auto& r : {four_element_matrix_ring(), row_ring(3), modular_ring(6)}) {
    const auto j = to_json(explicit_spec(r));
    const auto back = validate(spec_from_json(j));
    EXPECT_EQ(back, r);
    EXPECT_EQ(back.label(), r.label());
    EXPECT_EQ(to_json(explicit_spec(back)), j);
  }
}

TEST(RingSpec, StructureConstantsForm) {
  // Z_2 x Z_2 with g0*g0 = g0, g0*g1 = g1, everything else 0: the row ring
  // with g0 = [1 0;0 0], g1 = [0 1;0 0].
  const auto j = nlohmann::json::parse(R"({
    "label": "sc_row2", "group": [2, 2],
    "mul_constants": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]]
  })");
  const auto r = validate(spec_from_json(j));
  EXPECT_EQ(r.order(), 4u);
  EXPECT_EQ(r.label(), "sc_row2");
  EXPECT_EQ(r, row_ring(2));
}

TEST(RingSpec, ConstantsAreReducedModTheGenerator) {
  const auto a = validate(spec_from_json(nlohmann::json::parse(
      R"({"group": [5], "mul_constants": [[[6]]]})")));
  const auto b = validate(spec_from_json(nlohmann::json::parse(
      R"({"group": [5], "mul_constants": [[[-4]]]})")));
  EXPECT_EQ(a, modular_ring(5));
  EXPECT_EQ(b, modular_ring(5));
}

TEST(RingSpec, StructureConstantsOfGalleryRingRoundTrip) {
  const auto r = upper_triangular_ring(2);
  // group [2,2,2]: g0 = e11 (index 4), g1 = e12 (2), g2 = e22 (1)
  const auto j = nlohmann::json::parse(R"({
    "group": [2, 2, 2],
    "mul_constants": [[[1,0,0],[0,1,0],[0,0,0]],
                      [[0,0,0],[0,0,0],[0,1,0]],
                      [[0,0,0],[0,0,0],[0,0,1]]]
  })");
  EXPECT_EQ(validate(spec_from_json(j)), r);
  const auto again = spec_from_json(to_json(spec_from_json(j)));
  EXPECT_EQ(validate(again), r);
}

TEST(RingSpec, IllDefinedConstantsAreRejected) {
  // In Z_2 x Z_4, g0*g1 must be killed by 2; g1 itself has order 4.
  const auto j = nlohmann::json::parse(R"({
    "group": [2, 4],
    "mul_constants": [[[0, 0], [0, 1]], [[0, 0], [0, 0]]]
  })");
  EXPECT_THROW(validate(spec_from_json(j)), RingError);
}

TEST(RingSpec, ErrorKinds) {
  EXPECT_EQ(kind_of(nlohmann::json::array()), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"order", 2}, {"add", {{0, 1}}}, {"mul", {{0, 0}, {0, 0}}}}),
            ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"order", 2}, {"add", {{0, 1}, {1, 0}}}, {"mul", {{0, 0}, {0, 2}}}}),
            ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of({{"order", 2}, {"add", {{0, 1}, {1, 0}}}, {"mul", {{0, 0}, {0, -1}}}}),
            ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of({{"order", 2}, {"add", {{0, 1}, {1, 0}}}}), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"order", "two"}, {"add", {{0}}}, {"mul", {{0}}}}), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"order", 0}, {"add", nlohmann::json::array()}, {"mul", nlohmann::json::array()}}),
            ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"group", {2}}, {"mul_constants", {{{1}, {0}}}}}), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of({{"order", 2}, {"add", {{0, 1}, {1, 0}}}, {"mul", {{0, 0}, {1, 1}}}}),
            ErrorKind::NotDistributive);
}

TEST(RingSpec, FilesAndLabels) {
  const auto dir = temp_dir("files");
  save_spec(dir / "four.json", explicit_spec(four_element_matrix_ring()));
  EXPECT_EQ(load_ring(dir / "four.json"), four_element_matrix_ring());
  EXPECT_EQ(load_ring(dir / "four.json").label(), "four_element_matrix_ring");

  auto unlabeled = explicit_spec(modular_ring(3));
  unlabeled.label.clear();
  save_spec(dir / "z3.json", unlabeled);
  EXPECT_EQ(load_ring(dir / "z3.json").label(), "z3");

  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_THROW(load_ring(dir / "broken.json"), RingError);
  EXPECT_THROW(load_ring(dir / "missing.json"), RingError);
  fs::remove_all(dir);
}
