#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "ringcent/centralizer.hpp"
#include "ringcent/enumeration.hpp"
#include "ringcent/gallery.hpp"
#include "ringcent/isomorphism.hpp"
#include "test_support.hpp"

using namespace ringcent;
namespace fs = std::filesystem;

namespace {

template <typename Search>
std::set<std::vector<Element>> raw_structures(const std::vector<std::uint64_t>& moduli) {
  const Search search(moduli);
  std::set<std::vector<Element>> out;
  for (auto key : enumerate_raw(search, Deadline(std::nullopt), 1)) out.insert(search.unpack(key));
  return out;
}

fs::path temp_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("ringcent_enum_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST(Enumeration, SmallOrders) {
  EXPECT_EQ(enumerate_rings(1, true).class_total(), 1u);
  const auto two = enumerate_rings(2, true);
  EXPECT_EQ(two.class_total(), 2u);
  EXPECT_EQ(two.raw_total(), 2u);
  EXPECT_EQ(enumerate_rings(3, true).class_total(), 2u);
  const auto p5 = enumerate_rings(5, true);
  EXPECT_EQ(p5.class_total(), 2u);
  for (const auto& r : p5.representatives) EXPECT_TRUE(is_commutative(r));
}

TEST(Enumeration, OrderFourAgainstHandEnumeration) {
  const auto by_hand = testing_support::order_four_by_hand();
  EXPECT_EQ(by_hand.size(), 32u);
  std::vector<FiniteRing> classes;
  for (const auto& r : by_hand) {
    if (std::none_of(classes.begin(), classes.end(), [&](const FiniteRing& c) { return testing_support::brute_isomorphic(c, r); })) {
      classes.push_back(r);
    }
  }
  const auto cat = enumerate_rings(4, true);
  EXPECT_EQ(cat.raw_total(), by_hand.size());
  ASSERT_EQ(cat.class_total(), classes.size());
  EXPECT_EQ(classes.size(), 11u);
  // Each hand-made class matches exactly one representative.
  for (const auto& c : classes) {
    std::size_t hits = 0;
    for (const auto& r : cat.representatives) hits += testing_support::brute_isomorphic(c, r) ? 1 : 0;
    EXPECT_EQ(hits, 1u);
  }
  std::size_t noncomm = 0;
  for (const auto& r : cat.representatives) noncomm += is_commutative(r) ? 0 : 1;
  EXPECT_EQ(noncomm, 2u);
}

TEST(Enumeration, ClosureSearchMatchesLexOrderSearch) {
  for (const std::vector<std::uint64_t>& moduli :
       {std::vector<std::uint64_t>{2}, {5}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}, {2, 2, 4}}) {
    const auto a = raw_structures<LexOrderSearch>(moduli);
    const auto b = raw_structures<ClosureSearch>(moduli);
    EXPECT_EQ(a, b) << AbelianGroupType(moduli).to_string();
  }
}

TEST(Enumeration, GeneratorOrderDoesNotMatter) {
  for (const auto& [x, y] : std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>{
           {{2, 4}, {4, 2}}, {{2, 6}, {6, 2}}, {{2, 2, 4}, {4, 2, 2}}}) {
    const auto a = raw_structures<LexOrderSearch>(x);
    const auto b = raw_structures<LexOrderSearch>(y);
    EXPECT_EQ(a.size(), b.size());
    // Same classes, checked through canonical forms.
    auto classes = [](const std::vector<std::uint64_t>& moduli, const std::set<std::vector<Element>>& raw) {
      const CyclicProduct g(moduli);
      std::set<std::vector<Element>> cfs;
      for (const auto& products : raw) {
        const auto cf = canonical_form(FiniteRing::from_tables(g.order(), g.add_table(), g.mul_table(products)));
        cfs.insert({cf.mul_table().begin(), cf.mul_table().end()});
      }
      return cfs;
    };
    EXPECT_EQ(classes(x, a), classes(y, b));
  }
}

TEST(Enumeration, RawStructuresAreRings) {
  const auto cat = enumerate_rings(8, false);
  EXPECT_EQ(cat.raw_total(), 1756u);
  EXPECT_EQ(cat.representatives.size(), 1756u);
  for (const auto& r : cat.representatives) EXPECT_NO_THROW(testing_support::revalidate(r));
}

TEST(Enumeration, RepresentativesArePairwiseNonIsomorphic) {
  for (std::size_t n : {8, 9}) {
    const auto reps = enumerate_rings(n, true).representatives;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(canonical_form(reps[i]), reps[i]);
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        EXPECT_FALSE(isomorphic(reps[i], reps[j])) << reps[i].label() << " " << reps[j].label();
      }
    }
  }
}

TEST(Enumeration, Labels) {
  const auto cat = enumerate_rings(4, true);
  EXPECT_EQ(cat.representatives.front().label(), catalog_label(4, AbelianGroupType({2, 2}), 1));
  std::set<std::string> labels;
  for (const auto& r : cat.representatives) labels.insert(r.label());
  EXPECT_EQ(labels.size(), cat.representatives.size());
}

TEST(Enumeration, Limits) {
  EXPECT_THROW(enumerate_rings(17, true), RingError);
  EXPECT_THROW(enumerate_rings(0, true), RingError);
  EXPECT_THROW(search_n_centralizer(3, 17), RingError);
  EXPECT_THROW(ClosureSearch({64}), RingError);
  EnumerationOptions tiny;
  tiny.time_budget_secs = 1e-6;
  try {
    enumerate_rings(16, true, tiny);
    FAIL() << "expected PartialUniverse";
  } catch (const RingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PartialUniverse);
  }
}

TEST(Enumeration, DirectoryRoundTripAndResume) {
  const auto dir = temp_dir("cat8");
  const auto cat = enumerate_to_directory(8, dir, false);
  EXPECT_EQ(cat.class_total(), 52u);
  const auto back = read_catalog(dir);
  ASSERT_EQ(back.representatives.size(), cat.representatives.size());
  for (std::size_t i = 0; i < back.representatives.size(); ++i) {
    EXPECT_EQ(back.representatives[i], cat.representatives[i]);
    EXPECT_EQ(back.representatives[i].label(), cat.representatives[i].label());
  }
  // Drop the last group from the manifest and resume.
  auto manifest = detail::read_json_file(dir / kManifestName);
  manifest["groups"][manifest["groups"].size() - 1]["complete"] = false;
  detail::write_json_file(dir / kManifestName, manifest);
  const auto resumed = enumerate_to_directory(8, dir, true);
  EXPECT_EQ(resumed.class_total(), 52u);
  EXPECT_EQ(resumed.raw_total(), cat.raw_total());
  EXPECT_THROW(enumerate_to_directory(4, dir, true), RingError);
  fs::remove_all(dir);
}

TEST(Search, CentralizerCounts) {
  EXPECT_TRUE(search_n_centralizer(2, 9).empty());
  EXPECT_TRUE(search_n_centralizer(3, 9).empty());
  const auto four = search_n_centralizer(4, 8);
  ASSERT_FALSE(four.empty());
  for (const auto& r : four) EXPECT_EQ(cent_set(r).size(), 4u);
  EXPECT_TRUE(std::any_of(four.begin(), four.end(),
                          [](const FiniteRing& r) { return isomorphic(r, four_element_matrix_ring()); }));
  const auto five = search_n_centralizer(5, 9);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_TRUE(isomorphic(five[0], row_ring(3)) || isomorphic(five[1], row_ring(3)));
  EXPECT_EQ(search_n_centralizer(1, 3).size(), 5u);
}
