#pragma once

// Concrete rings used as worked examples. Element numbering is fixed per
// constructor and documented on each one.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ringcent/abelian.hpp"
#include "ringcent/error.hpp"
#include "ringcent/ring.hpp"

namespace ringcent {

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw RingError(ErrorKind::NotPrime, std::to_string(p));
}

inline void require_order(std::uint64_t n) {
  if (n > kMaxOrder) {
    throw RingError(ErrorKind::TooLarge,
                    "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

/// Builds a ring on n elements from element-level add/mul callbacks.
template <typename Add, typename Mul>
FiniteRing tabulate(std::size_t n, Add&& add, Mul&& mul, std::string label) {
  std::vector<Element> a(n * n), m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = static_cast<Element>(add(i, j));
      m[i * n + j] = static_cast<Element>(mul(i, j));
    }
  }
  return FiniteRing::from_tables(n, std::move(a), std::move(m), std::move(label));
}

using Mat2 = std::array<std::uint64_t, 4>;  // row-major [a b; c d]

inline Mat2 mat_add(const Mat2& x, const Mat2& y, std::uint64_t p) {
  return {(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p, (x[3] + y[3]) % p};
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

/// Tabulates a finite set of 2x2 matrices over Z_p closed under + and *.
inline FiniteRing matrix_ring(const std::vector<Mat2>& elems, std::uint64_t p, std::string label) {
  auto find = [&](const Mat2& m) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == m) return i;
    }
    throw std::logic_error("matrix set is not closed");
  };
  return tabulate(
      elems.size(), [&](std::size_t i, std::size_t j) { return find(mat_add(elems[i], elems[j], p)); },
      [&](std::size_t i, std::size_t j) { return find(mat_mul(elems[i], elems[j], p)); },
      std::move(label));
}

}  // namespace detail

/// Z_n. Element i is the residue i.
inline FiniteRing modular_ring(std::uint64_t n) {
  if (n == 0) throw RingError(ErrorKind::MalformedSpec, "modulus must be positive");
  detail::require_order(n);
  return detail::tabulate(
      n, [n](std::size_t i, std::size_t j) { return (i + j) % n; },
      [n](std::size_t i, std::size_t j) { return (i * j) % n; }, "Z_" + std::to_string(n));
}

/// Z_n with the zero multiplication.
inline FiniteRing null_ring(std::uint64_t n) {
  if (n == 0) throw RingError(ErrorKind::MalformedSpec, "modulus must be positive");
  detail::require_order(n);
  return detail::tabulate(
      n, [n](std::size_t i, std::size_t j) { return (i + j) % n; },
      [](std::size_t, std::size_t) { return 0; }, "null_Z_" + std::to_string(n));
}

/// {[0 0;0 0], [1 0;1 0], [0 1;0 1], [1 1;1 1]} over Z_2, indexed 0..3 in
/// that order.
inline FiniteRing four_element_matrix_ring() {
  return detail::matrix_ring({{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}}, 2,
                             "four_element_matrix_ring");
}

/// Matrices [a b; 0 0] over Z_p; element index a*p + b.
inline FiniteRing row_ring(std::uint64_t p) {
  detail::require_prime(p);
  detail::require_order(p * p);
  std::vector<detail::Mat2> elems;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) elems.push_back({a, b, 0, 0});
  }
  return detail::matrix_ring(elems, p, "row_ring(" + std::to_string(p) + ")");
}

/// Upper-triangular matrices [a b; 0 c] over Z_p; index a*p^2 + b*p + c.
inline FiniteRing upper_triangular_ring(std::uint64_t p) {
  detail::require_prime(p);
  detail::require_order(p * p * p);
  std::vector<detail::Mat2> elems;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) elems.push_back({a, b, 0, c});
    }
  }
  return detail::matrix_ring(elems, p, "upper_triangular_ring(" + std::to_string(p) + ")");
}

/// a + bi + cj + dk over Z_p with i^2 = j^2 = k^2 = -1, ij = k, jk = i,
/// ki = j, ji = -k, kj = -i, ik = -j. Index a*p^3 + b*p^2 + c*p + d.
///
/// p = 2 is rejected: there -1 = 1 and the relations collapse to a
/// commutative ring.
inline FiniteRing quaternion_ring(std::uint64_t p) {
  detail::require_prime(p);
  if (p == 2) throw RingError(ErrorKind::NotOddPrime, "quaternion relations need -1 != 1");
  detail::require_order(p * p * p * p);
  // basis product e_s * e_t = sign * e_idx for the basis (1, i, j, k)
  struct Term {
    int sign;
    int idx;
  };
  static constexpr Term table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  const std::size_t n = p * p * p * p;
  auto digits = [p](std::size_t x) {
    std::array<std::uint64_t, 4> d{};
    for (int t = 3; t >= 0; --t) {
      d[t] = x % p;
      x /= p;
    }
    return d;
  };
  auto encode = [p](const std::array<std::uint64_t, 4>& d) {
    return ((d[0] * p + d[1]) * p + d[2]) * p + d[3];
  };
  return detail::tabulate(
      n,
      [&](std::size_t x, std::size_t y) {
        auto a = digits(x), b = digits(y);
        for (int t = 0; t < 4; ++t) a[t] = (a[t] + b[t]) % p;
        return encode(a);
      },
      [&](std::size_t x, std::size_t y) {
        const auto a = digits(x), b = digits(y);
        std::array<std::uint64_t, 4> out{};
        for (int s = 0; s < 4; ++s) {
          for (int t = 0; t < 4; ++t) {
            const auto& term = table[s][t];
            const std::uint64_t v = a[s] * b[t] % p;
            out[term.idx] = (out[term.idx] + (term.sign > 0 ? v : p - v)) % p;
          }
        }
        return encode(out);
      },
      "quaternion_ring(" + std::to_string(p) + ")");
}

/// Componentwise ring on pairs; index r*|S| + s.
inline FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s) {
  const std::size_t m = s.order();
  detail::require_order(r.order() * m);
  const std::size_t n = r.order() * m;
  std::vector<Element> a(n * n), mu(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xr = static_cast<Element>(x / m), xs = static_cast<Element>(x % m);
    for (std::size_t y = 0; y < n; ++y) {
      const auto yr = static_cast<Element>(y / m), ys = static_cast<Element>(y % m);
      a[x * n + y] = static_cast<Element>(r.add(xr, yr) * m + s.add(xs, ys));
      mu[x * n + y] = static_cast<Element>(r.mul(xr, yr) * m + s.mul(xs, ys));
    }
  }
  return FiniteRing::from_tables(n, std::move(a), std::move(mu),
                                 "(" + r.label() + " x " + s.label() + ")");
}

/// Names accepted by gallery_ring(); `param` is the prime (or modulus).
inline const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"four-element", "row",     "upper-triangular",
                                              "quaternion",   "modular", "null"};
  return names;
}

inline FiniteRing gallery_ring(const std::string& name, std::uint64_t param) {
  if (name == "four-element") return four_element_matrix_ring();
  if (name == "row") return row_ring(param);
  if (name == "upper-triangular") return upper_triangular_ring(param);
  if (name == "quaternion") return quaternion_ring(param);
  if (name == "modular") return modular_ring(param);
  if (name == "null") return null_ring(param);
  throw RingError(ErrorKind::MalformedSpec, "unknown gallery ring '" + name + "'");
}

/// The fixed gallery universe: every construction at each supported size,
/// plus a handful of products and opposites.
inline std::vector<FiniteRing> standard_gallery() {
  std::vector<FiniteRing> g;
  g.push_back(four_element_matrix_ring());
  for (std::uint64_t p : {2, 3, 5, 7, 11}) g.push_back(row_ring(p));
  for (std::uint64_t p : {2, 3, 5}) g.push_back(upper_triangular_ring(p));
  g.push_back(quaternion_ring(3));
  for (std::uint64_t n : {1, 2, 3, 4, 6, 8, 9, 12}) g.push_back(modular_ring(n));
  for (std::uint64_t n : {2, 4}) g.push_back(null_ring(n));
  {
    auto op = opposite(row_ring(2));
    g.push_back(FiniteRing::from_tables(op.order(), {op.add_table().begin(), op.add_table().end()},
                                        {op.mul_table().begin(), op.mul_table().end()}, op.label()));
  }
  g.push_back(direct_product(row_ring(2), modular_ring(3)));
  g.push_back(direct_product(row_ring(2), row_ring(2)));
  g.push_back(direct_product(row_ring(2), row_ring(3)));
  g.push_back(direct_product(four_element_matrix_ring(), modular_ring(2)));
  g.push_back(direct_product(upper_triangular_ring(2), modular_ring(2)));
  g.push_back(direct_product(row_ring(3), modular_ring(4)));
  return g;
}

}  // namespace ringcent
