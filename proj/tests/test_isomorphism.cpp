#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ringcent/centralizer.hpp"
#include "ringcent/enumeration.hpp"
#include "ringcent/gallery.hpp"
#include "ringcent/isomorphism.hpp"
#include "test_support.hpp"

using namespace ringcent;
using testing_support::brute_isomorphic;

namespace {

bool is_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Element>& phi) {
  const std::size_t n = a.order();
  if (phi.size() != n || b.order() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element e : phi) {
    if (e >= n || hit[e]) return false;
    hit[e] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (phi[a.add(x, y)] != b.add(phi[x], phi[y])) return false;
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    }
  }
  return true;
}

FiniteRing relabel(const FiniteRing& r, const std::vector<Element>& perm) {
  const std::size_t n = r.order();
  std::vector<Element> inv(n), add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) inv[perm[x]] = static_cast<Element>(x);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      add[x * n + y] = perm[r.add(inv[x], inv[y])];
      mul[x * n + y] = perm[r.mul(inv[x], inv[y])];
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), r.label() + "'");
}

std::vector<Element> random_perm_fixing_zero(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

}  // namespace

TEST(Isomorphism, IdentityWitness) {
  for (const auto& r : {four_element_matrix_ring(), row_ring(3), upper_triangular_ring(2)}) {
    const auto phi = find_isomorphism(r, r);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(is_isomorphism(r, r, *phi));
  }
}

TEST(Isomorphism, RowRingIsNotIsomorphicToItsOpposite) {
  const auto r = row_ring(2);
  const auto op = opposite(r);
  EXPECT_FALSE(brute_isomorphic(r, op));
  EXPECT_FALSE(isomorphic(r, op));
  EXPECT_NE(canonical_form(r), canonical_form(op));
}

TEST(Isomorphism, DifferentAdditiveGroups) {
  EXPECT_FALSE(isomorphic(row_ring(2), modular_ring(4)));
  EXPECT_FALSE(isomorphic(modular_ring(4), null_ring(4)));
  EXPECT_FALSE(isomorphic(modular_ring(4), modular_ring(5)));
}

TEST(Isomorphism, RelabelledRingsAreFound) {
  std::mt19937 rng(7);
  for (const auto& r : standard_gallery()) {
    if (r.order() > 64) continue;
    const auto s = relabel(r, random_perm_fixing_zero(r.order(), rng));
    const auto phi = find_isomorphism(r, s);
    ASSERT_TRUE(phi.has_value()) << r.label();
    EXPECT_TRUE(is_isomorphism(r, s, *phi)) << r.label();
  }
}

TEST(CanonicalForm, IdempotentAndLabelInvariant) {
  std::mt19937 rng(11);
  for (const auto& r : standard_gallery()) {
    if (r.order() > kCanonicalMaxOrder) continue;
    const auto cf = canonical_form(r);
    EXPECT_EQ(canonical_form(cf), cf) << r.label();
    EXPECT_NO_THROW(testing_support::revalidate(cf));
    EXPECT_TRUE(isomorphic(cf, r)) << r.label();
    const auto s = relabel(r, random_perm_fixing_zero(r.order(), rng));
    EXPECT_EQ(canonical_form(s), cf) << r.label();
  }
  EXPECT_THROW(canonical_form(row_ring(5)), RingError);
}

TEST(CanonicalForm, ZeroRing) {
  const auto z = canonical_form(FiniteRing());
  EXPECT_EQ(z.order(), 1u);
  EXPECT_EQ(z.mul(0, 0), 0);
}

TEST(CanonicalForm, AgreesWithBruteForceOnOrderFour) {
  // Every raw structure on 4 elements, plus each one relabelled.
  auto raw = enumerate_rings(4, false).representatives;
  ASSERT_EQ(raw.size(), 32u);
  std::mt19937 rng(3);
  const std::size_t base = raw.size();
  for (std::size_t i = 0; i < base; ++i) raw.push_back(relabel(raw[i], random_perm_fixing_zero(4, rng)));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto ci = canonical_form(raw[i]);
    for (std::size_t j = i; j < raw.size(); ++j) {
      const bool brute = brute_isomorphic(raw[i], raw[j]);
      EXPECT_EQ(ci == canonical_form(raw[j]), brute) << i << " " << j;
      EXPECT_EQ(isomorphic(raw[i], raw[j]), brute) << i << " " << j;
    }
  }
}

TEST(Isomorphism, InvariantsArePreserved) {
  std::mt19937 rng(5);
  for (const auto& r : enumerate_rings(8, true).representatives) {
    const auto s = relabel(r, random_perm_fixing_zero(8, rng));
    ASSERT_TRUE(isomorphic(r, s));
    const auto a = analyze(r), b = analyze(s);
    EXPECT_EQ(a.cent_count, b.cent_count);
    EXPECT_EQ(a.degree, b.degree);
    EXPECT_EQ(a.quotient_type, b.quotient_type);
    EXPECT_EQ(a.center.size(), b.center.size());
  }
}
