#pragma once

// Ring isomorphism by backtracking over images of an additive basis, and a
// canonical form built from the same basis enumeration.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ringcent/abelian.hpp"
#include "ringcent/cyclic_product.hpp"
#include "ringcent/ring.hpp"

namespace ringcent {

/// Per-element isomorphism invariant: (additive order, |C(r)|, additive
/// order of r*r).
using ElementFingerprint = std::tuple<std::size_t, std::size_t, std::size_t>;

inline std::vector<ElementFingerprint> element_fingerprints(const FiniteRing& r) {
  const std::size_t n = r.order();
  const auto ord = additive_orders(r);
  std::vector<ElementFingerprint> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    std::size_t commuting = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const auto f = static_cast<Element>(y);
      if (r.mul(e, f) == r.mul(f, e)) ++commuting;
    }
    out[x] = {ord[x], commuting, ord[r.mul(e, e)]};
  }
  return out;
}

/// Returns a witness map phi (phi[x] in R2 for x in R1) when the rings are
/// isomorphic.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& r1,
                                                            const FiniteRing& r2) {
  const std::size_t n = r1.order();
  if (r2.order() != n) return std::nullopt;
  if (classify_additive(r1) != classify_additive(r2)) return std::nullopt;
  const auto fp1 = element_fingerprints(r1);
  const auto fp2 = element_fingerprints(r2);
  {
    auto s1 = fp1, s2 = fp2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  const auto basis = additive_basis(r1);
  const auto ord = additive_orders(r1);
  const std::size_t k = basis.size();

  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> phi(n, kNone);
  std::vector<bool> used(n, false);
  phi[0] = 0;
  used[0] = true;
  std::vector<Element> domain{0};  // span of the assigned basis prefix

  // phi must respect products inside the current domain, and a product
  // leaving the domain must not land on an image already taken.
  auto consistent = [&] {
    for (std::size_t a = 0; a < domain.size(); ++a) {
      for (std::size_t b = 0; b < domain.size(); ++b) {
        const Element x = domain[a], y = domain[b];
        const Element xy = r1.mul(x, y);
        const Element img = r2.mul(phi[x], phi[y]);
        if (phi[xy] != kNone) {
          if (phi[xy] != img) return false;
        } else if (used[img]) {
          return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == k) return true;
    const Element x = basis[t];
    const std::size_t before = domain.size();
    for (std::size_t cand = 1; cand < n; ++cand) {
      const auto y = static_cast<Element>(cand);
      if (fp2[y] != fp1[x] || used[y]) continue;
      bool ok = true;
      Element xs = x, ys = y;
      for (std::size_t c = 1; c < ord[x] && ok; ++c) {
        for (std::size_t i = 0; i < before; ++i) {
          const Element src = r1.add(domain[i], xs);
          const Element dst = r2.add(phi[domain[i]], ys);
          if (used[dst] || fp1[src] != fp2[dst]) {
            ok = false;
            break;
          }
          phi[src] = dst;
          used[dst] = true;
          domain.push_back(src);
        }
        xs = r1.add(xs, x);
        ys = r2.add(ys, y);
      }
      if (ok && consistent() && self(self, t + 1)) return true;
      for (std::size_t i = before; i < domain.size(); ++i) {
        used[phi[domain[i]]] = false;
        phi[domain[i]] = kNone;
      }
      domain.resize(before);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

inline bool isomorphic(const FiniteRing& r1, const FiniteRing& r2) {
  return find_isomorphism(r1, r2).has_value();
}

/// Largest order accepted by canonical_form.
inline constexpr std::size_t kCanonicalMaxOrder = 16;

/// Canonical representative of the isomorphism class. Relabelings are
/// restricted to those sending a basis of invariant-factor orders to the
/// mixed-radix generators, so the additive table is always the standard one
/// for the group type; among those, the row-major multiplication table is
/// minimised.
inline FiniteRing canonical_form(const FiniteRing& r) {
  const std::size_t n = r.order();
  if (n > kCanonicalMaxOrder) {
    throw RingError(ErrorKind::TooLarge, "canonical_form supports order <= " +
                                             std::to_string(kCanonicalMaxOrder));
  }
  const auto type = classify_additive(r);
  const CyclicProduct group(type.factors());
  const std::size_t k = group.rank();
  const auto& d = type.factors();
  const auto ord = additive_orders(r);

  std::vector<Element> best;
  std::vector<Element> label_to_elem(n), elem_to_label(n);
  std::vector<Element> basis(k);

  auto evaluate = [&] {
    for (std::size_t label = 0; label < n; ++label) {
      Element acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t c = 0; c < group.coeff(static_cast<Element>(label), i); ++c) {
          acc = r.add(acc, basis[i]);
        }
      }
      label_to_elem[label] = acc;
      elem_to_label[acc] = static_cast<Element>(label);
    }
    if (best.empty()) {
      best.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          best[a * n + b] = elem_to_label[r.mul(label_to_elem[a], label_to_elem[b])];
        }
      }
      return;
    }
    bool smaller = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element v = elem_to_label[r.mul(label_to_elem[a], label_to_elem[b])];
        const std::size_t idx = a * n + b;
        if (smaller) {
          best[idx] = v;
        } else if (v < best[idx]) {
          smaller = true;
          best[idx] = v;
        } else if (v > best[idx]) {
          return;
        }
      }
    }
  };

  // Enumerate every basis with ord(x_i) = d_i spanning R directly.
  std::vector<bool> mark(n);
  std::vector<std::vector<Element>> span_at(k + 1);
  span_at[0] = {0};
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == k) {
      evaluate();
      return;
    }
    const auto& span = span_at[t];
    for (std::size_t x = 1; x < n; ++x) {
      if (ord[x] != d[t]) continue;
      std::fill(mark.begin(), mark.end(), false);
      for (Element s : span) mark[s] = true;
      std::vector<Element> next = span;
      bool independent = true;
      Element step = static_cast<Element>(x);
      for (std::uint64_t c = 1; c < d[t] && independent; ++c) {
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
      basis[t] = static_cast<Element>(x);
      span_at[t + 1] = std::move(next);
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return FiniteRing::unchecked(n, group.add_table(), std::move(best), r.label());
}

}  // namespace ringcent
