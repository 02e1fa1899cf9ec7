#pragma once

// Finite rings stored as dense Cayley tables over element indices 0..n-1,
// with index 0 reserved for the additive identity.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringcent/error.hpp"

namespace ringcent {

using Element = std::uint16_t;

/// Largest ring order the dense representation accepts.
inline constexpr std::size_t kMaxOrder = 256;

namespace detail {

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

inline std::string pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace detail

class FiniteRing {
 public:
  /// The zero ring of order 1.
  FiniteRing() : order_(1), add_{0}, mul_{0} {}

  /// Builds a ring from row-major tables, checking every ring axiom on every
  /// triple. Throws RingError naming the first failing index tuple.
  static FiniteRing from_tables(std::size_t order, std::vector<Element> add,
                                std::vector<Element> mul, std::string label = {}) {
    FiniteRing r = unchecked(order, std::move(add), std::move(mul), std::move(label));
    r.validate();
    return r;
  }

  /// Skips the axiom checks. Only shape and index range are verified; used by
  /// constructors whose output is valid by construction and by the mutation
  /// harness, which needs to feed deliberately broken tables to the suites.
  static FiniteRing unchecked(std::size_t order, std::vector<Element> add,
                              std::vector<Element> mul, std::string label = {}) {
    if (order == 0) throw RingError(ErrorKind::MalformedSpec, "ring order must be positive");
    if (order > kMaxOrder) {
      throw RingError(ErrorKind::TooLarge,
                      "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
    }
    if (add.size() != order * order || mul.size() != order * order) {
      throw RingError(ErrorKind::MalformedSpec, "tables must be " + std::to_string(order) + "x" +
                                                    std::to_string(order));
    }
    for (std::size_t idx = 0; idx < order * order; ++idx) {
      if (add[idx] >= order || mul[idx] >= order) {
        throw RingError(ErrorKind::IndexOutOfRange,
                        "table entry at " + detail::pair(idx / order, idx % order) +
                            " is not an element index");
      }
    }
    FiniteRing r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.label_ = std::move(label);
    return r;
  }

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }

  Element neg(Element a) const {
    for (std::size_t b = 0; b < order_; ++b) {
      if (add_[a * order_ + b] == 0) return static_cast<Element>(b);
    }
    throw RingError(ErrorKind::NoAdditiveInverse, "element " + std::to_string(a));
  }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }

  /// Table equality; labels are ignored.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  void validate() const {
    const std::size_t n = order_;
    for (std::size_t j = 0; j < n; ++j) {
      if (add(0, j) != j || add(j, 0) != j) {
        throw RingError(ErrorKind::BadIdentityConvention,
                        "element 0 is not an additive identity at " + detail::pair(0, j));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      // A row without 0 is reported as a missing inverse before the
      // (implied) repeated entry.
      bool has_inverse = false;
      for (std::size_t j = 0; j < n && !has_inverse; ++j) has_inverse = add(i, j) == 0;
      if (!has_inverse) {
        throw RingError(ErrorKind::NoAdditiveInverse, "element " + std::to_string(i));
      }
      std::vector<bool> seen(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        const Element s = add(i, j);
        if (seen[s]) {
          throw RingError(ErrorKind::NonAbelianAddition,
                          "addition row " + std::to_string(i) + " is not a permutation");
        }
        seen[s] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (add(i, j) != add(j, i)) {
          throw RingError(ErrorKind::NonAbelianAddition,
                          "addition does not commute at " + detail::pair(i, j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element ij = add(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (add(ij, k) != add(i, add(j, k))) {
            throw RingError(ErrorKind::NonAbelianAddition,
                            "addition is not associative at " + detail::triple(i, j, k));
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element ij = mul(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (mul(ij, k) != mul(i, mul(j, k))) {
            throw RingError(ErrorKind::NotAssociative, "at " + detail::triple(i, j, k));
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Element jk = add(j, k);
          if (mul(i, jk) != add(mul(i, j), mul(i, k))) {
            throw RingError(ErrorKind::NotDistributive,
                            "left distributivity fails at " + detail::triple(i, j, k));
          }
          if (mul(jk, i) != add(mul(j, i), mul(k, i))) {
            throw RingError(ErrorKind::NotDistributive,
                            "right distributivity fails at " + detail::triple(j, k, i));
          }
        }
      }
    }
  }

  std::size_t order_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::string label_;
};

/// A canonical subset of a ring's elements: sorted, duplicate free.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::size_t parent_order, std::vector<Element> members)
      : members_(std::move(members)), parent_order_(parent_order) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= parent_order_) {
      throw RingError(ErrorKind::IndexOutOfRange,
                      "element " + std::to_string(members_.back()) + " in a set over order " +
                          std::to_string(parent_order_));
    }
  }

  static ElementSet whole(std::size_t n) {
    std::vector<Element> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Element>(i);
    return ElementSet(n, std::move(all));
  }

  static ElementSet zero(std::size_t n) { return ElementSet(n, {0}); }

  /// Builds from a membership mask of length parent_order.
  static ElementSet from_mask(const std::vector<bool>& mask) {
    std::vector<Element> m;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) m.push_back(static_cast<Element>(i));
    }
    ElementSet s;
    s.members_ = std::move(m);
    s.parent_order_ = mask.size();
    return s;
  }

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  bool is_whole() const noexcept { return members_.size() == parent_order_; }

  bool contains(std::size_t e) const {
    return std::binary_search(members_.begin(), members_.end(), static_cast<Element>(e));
  }

  std::vector<bool> mask() const {
    std::vector<bool> m(parent_order_, false);
    for (Element e : members_) m[e] = true;
    return m;
  }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.members_ <=> b.members_; c != 0) return c;
    return a.parent_order_ <=> b.parent_order_;
  }

 private:
  std::vector<Element> members_;
  std::size_t parent_order_ = 0;
};

inline ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(a.parent_order(), std::move(out));
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(a.parent_order(), std::move(out));
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace detail {

inline void check_belongs(const FiniteRing& r, const ElementSet& s) {
  if (s.parent_order() != r.order()) {
    throw RingError(ErrorKind::IndexOutOfRange,
                    "set over order " + std::to_string(s.parent_order()) + " used with a ring of order " +
                        std::to_string(r.order()));
  }
}

}  // namespace detail

/// A + B = {a + b : a in A, b in B}.
inline ElementSet set_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  detail::check_belongs(r, a);
  detail::check_belongs(r, b);
  std::vector<bool> hit(r.order(), false);
  for (Element x : a) {
    for (Element y : b) hit[r.add(x, y)] = true;
  }
  return ElementSet::from_mask(hit);
}

inline bool is_additive_subgroup(const FiniteRing& r, const ElementSet& s) {
  detail::check_belongs(r, s);
  if (!s.contains(0)) return false;
  const auto m = s.mask();
  // Closure under addition suffices for a nonempty subset of a finite group.
  for (Element x : s) {
    for (Element y : s) {
      if (!m[r.add(x, y)]) return false;
    }
  }
  return true;
}

/// |R : S| for an additive subgroup S.
inline std::size_t index(const FiniteRing& r, const ElementSet& s) {
  if (!is_additive_subgroup(r, s)) {
    throw RingError(ErrorKind::NotAdditiveSubgroup, "index requires an additive subgroup");
  }
  return r.order() / s.size();
}

inline bool is_subring(const FiniteRing& r, const ElementSet& s) {
  if (s.parent_order() != r.order()) return false;
  if (!is_additive_subgroup(r, s)) return false;
  const auto m = s.mask();
  for (Element x : s) {
    for (Element y : s) {
      if (!m[r.mul(x, y)]) return false;
    }
  }
  return true;
}

inline bool is_commutative(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r.mul(static_cast<Element>(i), static_cast<Element>(j)) !=
          r.mul(static_cast<Element>(j), static_cast<Element>(i))) {
        return false;
      }
    }
  }
  return true;
}

/// The two-sided multiplicative identity, if the ring has one.
inline std::optional<Element> unity(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = r.mul(static_cast<Element>(e), static_cast<Element>(x)) == x &&
           r.mul(static_cast<Element>(x), static_cast<Element>(e)) == x;
    }
    if (ok) return static_cast<Element>(e);
  }
  return std::nullopt;
}

inline bool has_unity(const FiniteRing& r) { return unity(r).has_value(); }

/// Same additive group, multiplication reversed.
inline FiniteRing opposite(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Element> add(r.add_table().begin(), r.add_table().end());
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = r.mul_table()[j * n + i];
  }
  return FiniteRing::unchecked(n, std::move(add), std::move(mul),
                               r.label().empty() ? std::string{} : r.label() + "^op");
}

/// Additive order of every element.
inline std::vector<std::size_t> additive_orders(const FiniteRing& r) {
  std::vector<std::size_t> out(r.order(), 1);
  for (std::size_t x = 1; x < r.order(); ++x) {
    Element acc = static_cast<Element>(x);
    std::size_t k = 1;
    while (acc != 0) {
      acc = r.add(acc, static_cast<Element>(x));
      ++k;
    }
    out[x] = k;
  }
  return out;
}

}  // namespace ringcent
