#include <gtest/gtest.h>

#include "ringcent/centralizer.hpp"
#include "ringcent/gallery.hpp"
#include "ringcent/ring.hpp"
#include "test_support.hpp"

using namespace ringcent;
using testing_support::klein_add;
using testing_support::table;
using testing_support::zn_add;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RingError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no RingError thrown";
  return ErrorKind::MalformedSpec;
}

}  // namespace

TEST(Validate, ZeroRingOfOrderOne) {
  const auto r = FiniteRing::from_tables(1, {0}, {0});
  EXPECT_EQ(r.order(), 1u);
  EXPECT_TRUE(is_commutative(r));
  EXPECT_EQ(r, FiniteRing());
}

TEST(Validate, ModularTablesAreARing) {
  const auto r = FiniteRing::from_tables(4, zn_add(4), table(4, [](auto i, auto j) { return i * j % 4; }));
  EXPECT_TRUE(is_commutative(r));
  EXPECT_EQ(unity(r), Element{1});
}

TEST(Validate, FourElementMatrixTables) {
  // [1 0;1 0] = 1, [0 1;0 1] = 2, [1 1;1 1] = 3; xy computed by hand: row of
  // x times y. The products only depend on the first column of x and y.
  const std::vector<Element> mul{0, 0, 0, 0,  //
                                 0, 1, 2, 3,  //
                                 0, 1, 2, 3,  //
                                 0, 0, 0, 0};
  const auto r = FiniteRing::from_tables(4, klein_add(), mul);
  EXPECT_FALSE(is_commutative(r));
  EXPECT_EQ(r, four_element_matrix_ring());
}

TEST(Validate, ErrorKinds) {
  const auto zmul = table(3, [](auto, auto) { return 0; });
  auto bad_identity = zn_add(3);
  std::swap(bad_identity[1], bad_identity[2]);  // 0 + 1 = 2
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(3, bad_identity, zmul); }),
            ErrorKind::BadIdentityConvention);

  // Row 1 never reaches 0.
  const std::vector<Element> no_inverse{0, 1, 2, 1, 2, 1, 2, 1, 0};
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(3, no_inverse, zmul); }), ErrorKind::NoAdditiveInverse);

  // A non-abelian group of order 6 (S_3) as addition.
  const int s3[6][6] = {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                        {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0}};
  const auto s3_add = table(6, [&](auto i, auto j) { return s3[i][j]; });
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(6, s3_add, table(6, [](auto, auto) { return 0; })); }),
            ErrorKind::NonAbelianAddition);

  // On Z_3: 1*1 = 2, every other nonzero product 1. (1*1)*2 = 1 but 1*(1*2) = 2.
  const auto not_assoc = table(3, [](std::size_t i, std::size_t j) { return (i == 1 && j == 1) ? 2 : (i && j ? 1 : 0); });
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(3, zn_add(3), not_assoc); }), ErrorKind::NotAssociative);

  // Constant-on-nonzero product on Z_2 x Z_2 is associative but not distributive.
  const auto not_dist = table(4, [](std::size_t i, std::size_t j) { return (i && j) ? 1 : 0; });
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(4, klein_add(), not_dist); }), ErrorKind::NotDistributive);

  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(2, {0, 1, 1, 0}, {0, 0, 0, 5}); }),
            ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(2, {0, 1, 1}, {0, 0, 0, 0}); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(257, {}, {}); }), ErrorKind::TooLarge);
}

TEST(Validate, ErrorNamesFailingTuple) {
  try {
    FiniteRing::from_tables(4, klein_add(), table(4, [](std::size_t i, std::size_t j) { return (i && j) ? 1 : 0; }));
    FAIL();
  } catch (const RingError& e) {
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos);
  }
}

TEST(ElementSetTest, CanonicalForm) {
  const ElementSet a(6, {5, 1, 3, 1});
  EXPECT_EQ(a.members(), (std::vector<Element>{1, 3, 5}));
  EXPECT_EQ(a, ElementSet(6, {1, 3, 5}));
  EXPECT_LT(ElementSet(6, {0, 1}), ElementSet(6, {0, 2}));
  EXPECT_THROW(ElementSet(3, {3}), RingError);
  EXPECT_TRUE(ElementSet::whole(4).is_whole());
  EXPECT_EQ(ElementSet::zero(4).size(), 1u);
}

TEST(SetSum, Examples) {
  const auto r = row_ring(2);
  const auto b = ElementSet(4, {0, 2, 3});
  EXPECT_EQ(set_sum(r, ElementSet::zero(4), b), b);
  EXPECT_EQ(set_sum(r, ElementSet::whole(4), ElementSet::whole(4)), ElementSet::whole(4));
  // [1 0;0 0] = index 2, [0 1;0 0] = index 1.
  const auto a = centralizer(r, 2), c = centralizer(r, 1);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(intersection(a, c), ElementSet::zero(4));
  EXPECT_EQ(set_sum(r, a, c), ElementSet::whole(4));
  EXPECT_THROW(set_sum(r, ElementSet(3, {0}), b), RingError);
}

TEST(SetSum, ProductFormulaForDisjointSubgroups) {
  for (const auto& r : {row_ring(3), upper_triangular_ring(2), modular_ring(12)}) {
    std::vector<ElementSet> subgroups;
    for (std::size_t x = 0; x < r.order(); ++x) {
      std::vector<Element> cyc{0};
      for (Element acc = static_cast<Element>(x); acc != 0; acc = r.add(acc, static_cast<Element>(x))) {
        cyc.push_back(acc);
      }
      subgroups.emplace_back(r.order(), cyc);
    }
    for (const auto& a : subgroups) {
      for (const auto& b : subgroups) {
        if (intersection(a, b).size() == 1) {
          EXPECT_EQ(set_sum(r, a, b).size(), a.size() * b.size());
        }
      }
    }
  }
}

TEST(Index, Examples) {
  EXPECT_EQ(index(modular_ring(9), ElementSet::whole(9)), 1u);
  EXPECT_EQ(index(modular_ring(9), ElementSet::zero(9)), 9u);
  const auto r3 = row_ring(3);
  EXPECT_EQ(center(r3), ElementSet::zero(9));
  EXPECT_EQ(index(r3, center(r3)), 9u);
  EXPECT_THROW(index(modular_ring(4), ElementSet(4, {0, 1})), RingError);
  try {
    index(modular_ring(4), ElementSet(4, {0, 1}));
  } catch (const RingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdditiveSubgroup);
  }
  // index * |S| = |R| over every cyclic subgroup of Z_12
  const auto z12 = modular_ring(12);
  for (std::size_t d : {1, 2, 3, 4, 6, 12}) {
    std::vector<Element> m;
    for (std::size_t x = 0; x < 12; x += 12 / d) m.push_back(static_cast<Element>(x));
    EXPECT_EQ(index(z12, ElementSet(12, m)) * d, 12u);
  }
}

TEST(IsSubring, Examples) {
  const auto r = row_ring(2);
  EXPECT_TRUE(is_subring(r, ElementSet::zero(4)));
  EXPECT_TRUE(is_subring(r, ElementSet::whole(4)));
  EXPECT_TRUE(is_subring(r, ElementSet(4, {0, 3})));  // [1 1;0 0]
  EXPECT_FALSE(is_subring(r, ElementSet(4, {0, 1, 2})));
  EXPECT_FALSE(is_subring(modular_ring(4), ElementSet(4, {1, 3})));
}

TEST(Unity, RowRingHasNone) {
  EXPECT_FALSE(has_unity(row_ring(2)));
  EXPECT_TRUE(has_unity(upper_triangular_ring(3)));
  EXPECT_FALSE(has_unity(null_ring(4)));
  EXPECT_TRUE(has_unity(FiniteRing()));
}

TEST(Opposite, ReversesProducts) {
  const auto r = row_ring(3);
  const auto op = opposite(r);
  for (Element x = 0; x < 9; ++x) {
    for (Element y = 0; y < 9; ++y) EXPECT_EQ(op.mul(x, y), r.mul(y, x));
  }
  EXPECT_EQ(op.label(), "row_ring(3)^op");
  EXPECT_NO_THROW(FiniteRing::from_tables(9, {op.add_table().begin(), op.add_table().end()},
                                          {op.mul_table().begin(), op.mul_table().end()}));
}

TEST(Neg, InverseByTable) {
  const auto r = modular_ring(7);
  for (Element x = 0; x < 7; ++x) EXPECT_EQ(r.add(x, r.neg(x)), 0);
}
