#pragma once

// Invariant-factor classification of finite abelian groups given by their
// Cayley tables, and of additive quotients R/S.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringcent/error.hpp"
#include "ringcent/ring.hpp"

namespace ringcent {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::optional<std::uint64_t> smallest_prime_factor(std::uint64_t n) {
  auto f = factorize(n);
  if (f.empty()) return std::nullopt;
  return f.front().first;
}

/// If n = p^k with k >= 1, returns p.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

class AbelianGroupType {
 public:
  /// The trivial group.
  AbelianGroupType() = default;

  /// Factors must form a divisibility chain d1 | d2 | ... with d1 >= 2.
  explicit AbelianGroupType(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) {
        throw RingError(ErrorKind::MalformedSpec, "invariant factors must be >= 2");
      }
      if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
        throw RingError(ErrorKind::MalformedSpec, "invariant factors must form a divisibility chain");
      }
    }
  }

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }

  std::uint64_t order() const noexcept {
    return std::accumulate(factors_.begin(), factors_.end(), std::uint64_t{1},
                           std::multiplies<>());
  }

  /// "Z_2 x Z_4"; the trivial group renders as "0".
  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += " x ";
      s += "Z_" + std::to_string(factors_[i]);
    }
    return s;
  }

  /// Compact form used in file names: "Z2xZ4", or "0".
  std::string tag() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(factors_[i]);
    }
    return s;
  }

  friend bool operator==(const AbelianGroupType&, const AbelianGroupType&) = default;
  friend auto operator<=>(const AbelianGroupType&, const AbelianGroupType&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

/// Merges per-prime partitions (exponents, any order) into invariant factors.
inline AbelianGroupType from_prime_partitions(
    const std::map<std::uint64_t, std::vector<unsigned>>& parts) {
  std::size_t width = 0;
  for (const auto& [p, e] : parts) width = std::max(width, e.size());
  std::vector<std::uint64_t> factors(width, 1);
  for (const auto& [p, exps] : parts) {
    auto sorted = exps;
    std::sort(sorted.begin(), sorted.end());
    // Largest exponent goes into the last (largest) factor.
    const std::size_t offset = width - sorted.size();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (unsigned t = 0; t < sorted[i]; ++t) factors[offset + i] *= p;
    }
  }
  return AbelianGroupType(std::move(factors));
}

namespace detail {

/// Classifies the abelian group on 0..n-1 with identity 0 given by `add`,
/// using the element-order census for each prime.
template <typename AddFn>
AbelianGroupType classify_table(std::size_t n, AddFn&& add) {
  if (n == 1) return AbelianGroupType();
  std::vector<std::uint64_t> orders(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::size_t acc = x;
    std::uint64_t k = 1;
    while (acc != 0) {
      acc = add(acc, x);
      ++k;
      if (k > n) throw std::logic_error("classify_table: table is not a group");
    }
    orders[x] = k;
  }
  std::map<std::uint64_t, std::vector<unsigned>> parts;
  for (const auto& [p, a] : factorize(n)) {
    // s[j] = log_p #{x : p^j x = 0}
    std::vector<unsigned> s(a + 1, 0);
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= a; ++j) {
      pj *= p;
      std::uint64_t count = 0;
      for (auto o : orders) {
        if (pj % o == 0) ++count;
      }
      unsigned log = 0;
      while (count % p == 0 && count > 1) {
        count /= p;
        ++log;
      }
      if (count != 1) throw std::logic_error("classify_table: census is not a prime power");
      s[j] = log;
    }
    // m[j] = number of cyclic p-parts of exponent >= j
    std::vector<unsigned> exps;
    for (unsigned j = 1; j <= a; ++j) {
      const unsigned at_least_j = s[j] - s[j - 1];
      const unsigned at_least_next = j < a ? s[j + 1] - s[j] : 0;
      for (unsigned c = 0; c < at_least_j - at_least_next; ++c) exps.push_back(j);
    }
    parts[p] = std::move(exps);
  }
  return from_prime_partitions(parts);
}

}  // namespace detail

inline AbelianGroupType classify_additive(const FiniteRing& r) {
  return detail::classify_table(r.order(), [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(r.add(static_cast<Element>(a), static_cast<Element>(b)));
  });
}

/// Coset index of every element for an additive subgroup S; cosets are
/// numbered in order of their smallest element, so the coset of 0 is 0.
inline std::vector<std::size_t> coset_ids(const FiniteRing& r, const ElementSet& s) {
  if (!is_additive_subgroup(r, s)) {
    throw RingError(ErrorKind::NotAdditiveSubgroup, "quotient requires an additive subgroup");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(r.order(), kUnset);
  std::size_t next = 0;
  for (std::size_t x = 0; x < r.order(); ++x) {
    if (id[x] != kUnset) continue;
    for (Element z : s) id[r.add(static_cast<Element>(x), z)] = next;
    ++next;
  }
  return id;
}

/// Type of the additive quotient group R/S.
inline AbelianGroupType quotient_type(const FiniteRing& r, const ElementSet& s) {
  const auto id = coset_ids(r, s);
  const std::size_t m = r.order() / s.size();
  std::vector<Element> rep(m);
  for (std::size_t x = r.order(); x-- > 0;) rep[id[x]] = static_cast<Element>(x);
  return detail::classify_table(m, [&](std::size_t a, std::size_t b) {
    return id[r.add(rep[a], rep[b])];
  });
}

/// True iff t is Z_p x Z_p.
inline bool is_elementary_p_squared(const AbelianGroupType& t, std::uint64_t p) {
  if (!is_prime(p)) throw RingError(ErrorKind::NotPrime, std::to_string(p));
  return t.factors() == std::vector<std::uint64_t>{p, p};
}

inline bool is_cyclic(const AbelianGroupType& t) { return t.rank() <= 1; }

/// Every abelian group of order n, sorted by factor list.
inline std::vector<AbelianGroupType> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) return {};
  std::vector<std::map<std::uint64_t, std::vector<unsigned>>> acc{{}};
  for (const auto& [p, a] : factorize(n)) {
    std::vector<std::vector<unsigned>> partitions;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
      if (remaining == 0) {
        partitions.push_back(cur);
        return;
      }
      for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        self(self, remaining - part, part);
        cur.pop_back();
      }
    };
    rec(rec, a, a);
    std::vector<std::map<std::uint64_t, std::vector<unsigned>>> next;
    for (const auto& base : acc) {
      for (const auto& part : partitions) {
        auto m = base;
        m[p] = part;
        next.push_back(std::move(m));
      }
    }
    acc = std::move(next);
  }
  std::vector<AbelianGroupType> out;
  for (const auto& m : acc) out.push_back(from_prime_partitions(m));
  std::sort(out.begin(), out.end());
  return out;
}

/// A basis (x_1..x_k) of (R,+) with ord(x_i) equal to the i-th invariant
/// factor and R = <x_1> + ... + <x_k> directly.
inline std::vector<Element> additive_basis(const FiniteRing& r) {
  const auto type = classify_additive(r);
  const auto& d = type.factors();
  const auto ord = additive_orders(r);
  const std::size_t n = r.order();
  const std::size_t k = d.size();
  std::vector<Element> basis(k);
  std::vector<std::vector<Element>> span_at(k + 1);
  span_at[0] = {0};
  std::vector<bool> mark(n);

  // Largest factor first: a cyclic subgroup of maximal order splits off.
  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == k) return true;
    const std::size_t slot = k - 1 - t;
    const auto& span = span_at[t];
    for (std::size_t x = 1; x < n; ++x) {
      if (ord[x] != d[slot]) continue;
      std::fill(mark.begin(), mark.end(), false);
      for (Element s : span) mark[s] = true;
      std::vector<Element> next = span;
      bool independent = true;
      Element step = static_cast<Element>(x);
      for (std::uint64_t c = 1; c < d[slot] && independent; ++c) {
        for (Element s : span) {
          const Element e = r.add(s, step);
          if (mark[e]) {
            independent = false;
            break;
          }
          mark[e] = true;
          next.push_back(e);
        }
        step = r.add(step, static_cast<Element>(x));
      }
      if (!independent) continue;
      basis[slot] = static_cast<Element>(x);
      span_at[t + 1] = std::move(next);
      if (self(self, t + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::logic_error("additive_basis: no basis found");
  return basis;
}

}  // namespace ringcent
