#pragma once

// Exhaustive enumeration of finite rings of a given order.
//
// For each abelian group G = Z_{d1} x ... x Z_{dk} of order n the search
// assigns generator products g_i*g_j (row-major order) and prunes as soon as
// an associativity constraint (g_i g_j) g_l = g_i (g_j g_l) becomes decidable.
// Distributivity is free because products are extended bilinearly; a value
// for g_i*g_j is admissible only if its order divides gcd(d_i, d_j), which is
// exactly the condition for the bilinear extension to be well defined.
//
// Two structures on the same G are isomorphic rings iff they lie in one
// Aut(G)-orbit, so classes are found by walking orbits of the raw leaves.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "ringcent/abelian.hpp"
#include "ringcent/centralizer.hpp"
#include "ringcent/cyclic_product.hpp"
#include "ringcent/error.hpp"
#include "ringcent/isomorphism.hpp"
#include "ringcent/ring.hpp"
#include "ringcent/ring_spec.hpp"

namespace ringcent {

/// Largest order enumerate_rings accepts.
inline constexpr std::size_t kEnumerationMaxOrder = 16;

/// Raw rings are only materialised (up_to_iso = false) below this count.
inline constexpr std::uint64_t kRawMaterializeLimit = 200000;

inline constexpr const char* kTimeBudgetEnv = "RINGCENT_TIME_BUDGET_SECS";

struct EnumerationOptions {
  std::optional<double> time_budget_secs;
  unsigned threads = 0;  // 0: hardware concurrency

  static EnumerationOptions from_environment() {
    EnumerationOptions o;
    if (const char* v = std::getenv(kTimeBudgetEnv); v != nullptr && *v != '\0') {
      char* end = nullptr;
      const double secs = std::strtod(v, &end);
      if (end != v && secs > 0) o.time_budget_secs = secs;
    }
    return o;
  }
};

class Deadline {
 public:
  explicit Deadline(std::optional<double> budget_secs)
      : start_(std::chrono::steady_clock::now()), budget_(budget_secs) {}

  bool expired() const {
    if (!budget_) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > *budget_;
  }

  std::optional<double> budget() const noexcept { return budget_; }

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<double> budget_;
};

/// Plain backtracking over generator products g_i*g_j in row-major order,
/// checking each associativity triple on generators once it is decidable.
/// Exhaustive and simple; kept as the reference the faster ClosureSearch is
/// checked against. The moduli need not form a divisibility chain.
class LexOrderSearch {
 public:
  explicit LexOrderSearch(std::vector<std::uint64_t> moduli)
      : group_(std::move(moduli)), k_(group_.rank()) {
    const std::size_t n = group_.order();
    domains_.resize(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const auto g = std::gcd(group_.moduli()[i], group_.moduli()[j]);
        for (std::size_t x = 0; x < n; ++x) {
          if (g % group_.element_order(static_cast<Element>(x)) == 0) {
            domains_[i * k_ + j].push_back(static_cast<Element>(x));
          }
        }
      }
    }
    support_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t m = 0; m < k_; ++m) {
        const auto c = group_.coeff(static_cast<Element>(x), m);
        if (c != 0) support_[x].push_back({m, c});
      }
    }
    key_bits_ = n > 1 ? static_cast<unsigned>(std::bit_width(n - 1)) : 0;
  }

  const CyclicProduct& group() const noexcept { return group_; }

  /// Partitions are the admissible values of g_1*g_1; a group of rank 0 has
  /// a single partition holding the zero ring.
  std::size_t partition_count() const noexcept { return k_ == 0 ? 1 : domains_[0].size(); }

  std::uint64_t pack(std::span<const Element> products) const noexcept {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < products.size(); ++v) {
      key |= std::uint64_t{products[v]} << (v * key_bits_);
    }
    return key;
  }

  std::vector<Element> unpack(std::uint64_t key) const {
    std::vector<Element> products(k_ * k_);
    const std::uint64_t mask = key_bits_ ? (std::uint64_t{1} << key_bits_) - 1 : 0;
    for (std::size_t v = 0; v < products.size(); ++v) {
      products[v] = static_cast<Element>((key >> (v * key_bits_)) & mask);
    }
    return products;
  }

  /// Calls on_leaf(products) for every associative structure whose g_1*g_1
  /// is the partition's value. Returns false if stopped by `stop`.
  template <typename OnLeaf, typename Stop>
  bool run_partition(std::size_t partition, OnLeaf&& on_leaf, Stop&& stop) const {
    std::vector<Element> value(k_ * k_, 0);
    if (k_ == 0) {
      on_leaf(std::span<const Element>(value));
      return true;
    }
    std::uint64_t nodes = 0;
    bool stopped = false;
    auto rec = [&](auto&& self, std::size_t v) -> void {
      if (stopped) return;
      if (v == value.size()) {
        on_leaf(std::span<const Element>(value));
        return;
      }
      const auto& dom = domains_[v];
      const std::size_t lo = v == 0 ? partition : 0;
      const std::size_t hi = v == 0 ? partition + 1 : dom.size();
      for (std::size_t idx = lo; idx < hi; ++idx) {
        if ((++nodes & 0x3fff) == 0 && stop()) {
          stopped = true;
          return;
        }
        value[v] = dom[idx];
        if (consistent_at(value, v)) self(self, v + 1);
        if (stopped) return;
      }
    };
    rec(rec, 0);
    return !stopped;
  }

 private:
  struct Term {
    std::size_t gen;
    std::uint32_t coeff;
  };

  // Checks every associativity triple that becomes decidable exactly when
  // variable v is assigned (variables < v are already fixed).
  bool consistent_at(const std::vector<Element>& value, std::size_t v) const {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const std::size_t ij = i * k_ + j;
        if (ij > v) continue;
        for (std::size_t l = 0; l < k_; ++l) {
          const std::size_t jl = j * k_ + l;
          if (jl > v) continue;
          std::size_t last = std::max(ij, jl);
          bool ready = true;
          for (const auto& t : support_[value[ij]]) {
            const std::size_t dep = t.gen * k_ + l;
            if (dep > v) {
              ready = false;
              break;
            }
            last = std::max(last, dep);
          }
          if (!ready) continue;
          for (const auto& t : support_[value[jl]]) {
            const std::size_t dep = i * k_ + t.gen;
            if (dep > v) {
              ready = false;
              break;
            }
            last = std::max(last, dep);
          }
          if (!ready || last != v) continue;
          Element left = 0, right = 0;
          for (const auto& t : support_[value[ij]]) {
            left = group_.add(left, group_.scale(t.coeff, value[t.gen * k_ + l]));
          }
          for (const auto& t : support_[value[jl]]) {
            right = group_.add(right, group_.scale(t.coeff, value[i * k_ + t.gen]));
          }
          if (left != right) return false;
        }
      }
    }
    return true;
  }

  CyclicProduct group_;
  std::size_t k_;
  std::vector<std::vector<Element>> domains_;
  std::vector<std::vector<Term>> support_;
  unsigned key_bits_ = 0;
};

/// Search by left-multiplication maps. The state is a subring K (as an
/// additive subgroup) together with the full left action L_x of every x in K.
/// Each step picks the first generator y outside K, chooses L_y one column
/// y*g_j at a time, then closes K + <y> under products: for x, z in K the
/// product xz either lies in K, where L_{xz} = L_x L_z is checked, or extends
/// K with that left action. K = R means every (xz)w = x(zw) has been checked.
///
/// Each ring on the group is reached by exactly one branch, so leaf counts
/// equal LexOrderSearch's. Supports groups of order <= 32.
class ClosureSearch {
 public:
  static constexpr std::size_t kMaxOrder = 32;
  static constexpr std::size_t kMaxRank = 5;

  explicit ClosureSearch(std::vector<std::uint64_t> moduli) : group_(std::move(moduli)) {
    const std::size_t n = group_.order();
    k_ = group_.rank();
    if (n > kMaxOrder || k_ > kMaxRank) {
      throw RingError(ErrorKind::TooLarge, "closure search supports order <= 32");
    }
    domains_.resize(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const auto g = std::gcd(group_.moduli()[i], group_.moduli()[j]);
        for (std::size_t x = 0; x < n; ++x) {
          if (g % group_.element_order(static_cast<Element>(x)) == 0) {
            domains_[i * k_ + j].push_back(static_cast<Element>(x));
          }
        }
      }
    }
    key_bits_ = n > 1 ? static_cast<unsigned>(std::bit_width(n - 1)) : 0;
  }

  const CyclicProduct& group() const noexcept { return group_; }

  std::size_t partition_count() const noexcept { return k_ == 0 ? 1 : domains_[0].size(); }

  std::uint64_t pack(std::span<const Element> products) const noexcept {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < products.size(); ++v) {
      key |= std::uint64_t{products[v]} << (v * key_bits_);
    }
    return key;
  }

  std::vector<Element> unpack(std::uint64_t key) const {
    std::vector<Element> products(k_ * k_);
    const std::uint64_t mask = key_bits_ ? (std::uint64_t{1} << key_bits_) - 1 : 0;
    for (std::size_t v = 0; v < products.size(); ++v) {
      products[v] = static_cast<Element>((key >> (v * key_bits_)) & mask);
    }
    return products;
  }

  template <typename OnLeaf, typename Stop>
  bool run_partition(std::size_t partition, OnLeaf&& on_leaf, Stop&& stop) const {
    State start;
    start.in_k = 1;  // {0}, with L_0 = 0
    start.members[0] = 0;
    start.size = 1;
    Run<OnLeaf, Stop> run{*this, partition, on_leaf, stop};
    run.extend(start);
    return !run.stopped;
  }

 private:
  using Action = std::array<Element, kMaxRank>;  // L_x(g_j), j < k

  struct State {
    std::uint32_t in_k = 0;
    std::size_t size = 0;
    std::array<Element, kMaxOrder> members{};
    std::array<Action, kMaxOrder> left{};

    bool contains(Element x) const noexcept { return (in_k >> x) & 1u; }
  };

  Element apply(const Action& a, Element x) const noexcept {
    Element acc = 0;
    for (std::size_t m = 0; m < k_; ++m) {
      const auto c = group_.coeff(x, m);
      if (c) acc = group_.add(acc, group_.scale(c, a[m]));
    }
    return acc;
  }

  Action compose(const Action& outer, const Action& inner) const noexcept {
    Action out{};
    for (std::size_t j = 0; j < k_; ++j) out[j] = apply(outer, inner[j]);
    return out;
  }

  bool same(const Action& a, const Action& b) const noexcept {
    for (std::size_t j = 0; j < k_; ++j) {
      if (a[j] != b[j]) return false;
    }
    return true;
  }

  // Adds w (not in K) with left action lw, plus the coset span K + <w>.
  bool adjoin(State& s, Element w, const Action& lw) const {
    const std::size_t old = s.size;
    Element cw = w;
    std::uint64_t c = 1;
    Action lc = lw;  // L_{c w}
    while (!s.contains(cw)) {
      for (std::size_t t = 0; t < old; ++t) {
        const Element x = s.members[t];
        const Element z = group_.add(x, cw);
        Action lz{};
        for (std::size_t j = 0; j < k_; ++j) lz[j] = group_.add(s.left[x][j], lc[j]);
        s.left[z] = lz;
        s.members[s.size++] = z;
      }
      for (std::size_t t = s.size - old; t < s.size; ++t) s.in_k |= 1u << s.members[t];
      cw = group_.add(cw, w);
      for (std::size_t j = 0; j < k_; ++j) lc[j] = group_.add(lc[j], lw[j]);
      ++c;
    }
    // c*w landed in K: its known action must agree with c * L_w.
    return same(s.left[cw], lc);
  }

  bool close(State& s, std::size_t done) const {
    while (done < s.size) {
      const std::size_t cur = s.size;
      for (std::size_t pa = 0; pa < cur; ++pa) {
        for (std::size_t pb = (pa < done ? done : 0); pb < cur; ++pb) {
          const Element a = s.members[pa], b = s.members[pb];
          if (a == 0 || b == 0) continue;
          const Element w = apply(s.left[a], b);
          if (s.contains(w)) {
            for (std::size_t j = 0; j < k_; ++j) {
              if (apply(s.left[a], s.left[b][j]) != s.left[w][j]) return false;
            }
          } else if (!adjoin(s, w, compose(s.left[a], s.left[b]))) {
            return false;
          }
        }
      }
      done = cur;
    }
    return true;
  }

  template <typename OnLeaf, typename Stop>
  struct Run {
    const ClosureSearch& self;
    std::size_t partition;
    OnLeaf& on_leaf;
    Stop& stop;
    bool stopped = false;
    std::uint64_t nodes = 0;
    std::array<Element, kMaxRank * kMaxRank> products{};

    void extend(const State& s) {
      const std::size_t k = self.k_;
      if (s.size == self.group_.order()) {
        for (std::size_t i = 0; i < k; ++i) {
          const auto& l = s.left[self.group_.generator(i)];
          for (std::size_t j = 0; j < k; ++j) products[i * k + j] = l[j];
        }
        on_leaf(std::span<const Element>(products.data(), k * k));
        return;
      }
      std::size_t gi = 0;
      while (s.contains(self.group_.generator(gi))) ++gi;
      const Element y = self.group_.generator(gi);

      // Elements x of K with x*y already in K give linear checks per column.
      std::array<std::pair<Element, Element>, kMaxOrder> probes{};
      std::size_t probe_count = 0;
      for (std::size_t t = 1; t < s.size; ++t) {
        const Element x = s.members[t];
        const Element xy = self.apply(s.left[x], y);
        if (s.contains(xy)) probes[probe_count++] = {x, xy};
      }
      // Multiples c*y already in K pin c * L_y.
      std::array<std::pair<std::uint64_t, Element>, kMaxOrder> multiples{};
      std::size_t multiple_count = 0;
      {
        Element cy = self.group_.add(y, y);
        for (std::uint64_t c = 2; cy != 0; ++c) {
          if (s.contains(cy)) multiples[multiple_count++] = {c, cy};
          cy = self.group_.add(cy, y);
        }
      }

      // T = K + <y>: element x + c*y (c below the order of y modulo K) has
      // left action L_x + c*L_y, known on g_l once column l is assigned.
      struct Shifted {
        Element x;
        std::uint64_t c;
        Element e;
      };
      std::array<Shifted, kMaxOrder> shifted{};
      std::array<std::int16_t, kMaxOrder> where{};
      where.fill(-1);
      std::size_t shifted_count = 0;
      {
        Element cy = 0;
        std::uint64_t c = 0;
        do {
          for (std::size_t t = 0; t < s.size; ++t) {
            const Element e = self.group_.add(s.members[t], cy);
            where[e] = static_cast<std::int16_t>(shifted_count);
            shifted[shifted_count++] = {s.members[t], c, e};
          }
          cy = self.group_.add(cy, y);
          ++c;
        } while (!s.contains(cy));
      }

      Action ly{};
      std::size_t known = 0;  // columns of L_y assigned
      auto left_at = [&](const Shifted& t, std::size_t l, Element& out) {
        if (t.c != 0 && l >= known) return false;
        out = t.c ? self.group_.add(s.left[t.x][l], self.group_.scale(t.c, ly[l])) : s.left[t.x][l];
        return true;
      };
      auto eval = [&](const Shifted& t, Element v, Element& out) {
        Element acc = 0;
        for (std::size_t l = 0; l < k; ++l) {
          const auto cv = self.group_.coeff(v, l);
          if (!cv) continue;
          Element col;
          if (!left_at(t, l, col)) return false;
          acc = self.group_.add(acc, self.group_.scale(cv, col));
        }
        out = acc;
        return true;
      };
      // (t1 t2) g_l = t1 (t2 g_l) for every triple the assigned columns
      // decide; pairs inside K were settled when K was closed.
      auto partial_associative = [&] {
        for (std::size_t a = 0; a < shifted_count; ++a) {
          for (std::size_t b = 0; b < shifted_count; ++b) {
            const auto& t1 = shifted[a];
            const auto& t2 = shifted[b];
            if (t1.c == 0 && t2.c == 0) continue;
            Element p;
            if (!eval(t1, t2.e, p) || where[p] < 0) continue;
            const auto& tp = shifted[where[p]];
            for (std::size_t l = 0; l < k; ++l) {
              Element lhs, q, rhs;
              if (!left_at(tp, l, lhs) || !left_at(t2, l, q) || !eval(t1, q, rhs)) continue;
              if (lhs != rhs) return false;
            }
          }
        }
        return true;
      };

      auto column = [&](auto&& rec, std::size_t j) -> void {
        if (stopped) return;
        if (j == k) {
          State t = s;
          const std::size_t before = t.size;
          if (self.adjoin(t, y, ly) && self.close(t, before)) extend(t);
          return;
        }
        const auto& dom = self.domains_[gi * k + j];
        const bool first = s.size == 1 && j == 0;
        const std::size_t lo = first ? partition : 0;
        const std::size_t hi = first ? partition + 1 : dom.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
          if ((++nodes & 0xfff) == 0 && stop()) {
            stopped = true;
            return;
          }
          const Element v = dom[idx];
          bool ok = true;
          for (std::size_t m = 0; m < multiple_count && ok; ++m) {
            ok = self.group_.scale(multiples[m].first, v) == s.left[multiples[m].second][j];
          }
          for (std::size_t p = 0; p < probe_count && ok; ++p) {
            const auto [x, xy] = probes[p];
            ok = self.apply(s.left[x], v) == s.left[xy][j];
          }
          if (!ok) continue;
          ly[j] = v;
          known = j + 1;
          if (partial_associative()) rec(rec, j + 1);
          known = j;
          if (stopped) return;
        }
      };
      column(column, 0);
    }
  };

  CyclicProduct group_;
  std::size_t k_ = 0;
  std::vector<std::vector<Element>> domains_;
  unsigned key_bits_ = 0;
};

/// Raw associative structures of one presentation, concatenated in
/// partition order. Throws PartialUniverse when the deadline passes.
template <typename Search>
std::vector<std::uint64_t> enumerate_raw(const Search& search, const Deadline& deadline,
                                         unsigned threads = 0) {
  const std::size_t parts = search.partition_count();
  std::vector<std::vector<std::uint64_t>> per_part(parts);
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> next{0};
  auto stop = [&] {
    if (abort.load(std::memory_order_relaxed)) return true;
    if (deadline.expired()) {
      abort = true;
      return true;
    }
    return false;
  };
  auto worker = [&] {
    for (std::size_t p = next++; p < parts; p = next++) {
      auto& out = per_part[p];
      search.run_partition(
          p, [&](std::span<const Element> products) { out.push_back(search.pack(products)); }, stop);
      if (abort) return;
    }
  };
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, parts));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (abort) {
    throw RingError(ErrorKind::PartialUniverse,
                    "time budget of " + std::to_string(deadline.budget().value_or(0)) +
                        " s exceeded while enumerating structures on " +
                        std::to_string(search.group().order()) + " elements");
  }
  std::vector<std::uint64_t> all;
  for (auto& v : per_part) all.insert(all.end(), v.begin(), v.end());
  return all;
}

struct GroupCatalog {
  AbelianGroupType type;
  std::uint64_t raw_count = 0;
  std::size_t class_count = 0;
};

struct IsoClassCatalog {
  std::size_t order = 1;
  bool up_to_iso = true;
  std::vector<GroupCatalog> groups;
  std::vector<FiniteRing> representatives;

  std::uint64_t raw_total() const {
    std::uint64_t t = 0;
    for (const auto& g : groups) t += g.raw_count;
    return t;
  }
  std::size_t class_total() const {
    std::size_t t = 0;
    for (const auto& g : groups) t += g.class_count;
    return t;
  }
};

inline std::string catalog_label(std::size_t order, const AbelianGroupType& type, std::size_t i) {
  return "R" + std::to_string(order) + "_" + type.tag() + "_" + std::to_string(i);
}

/// Enumerates one additive group type, appending representatives (or raw
/// rings) to `out`.
inline GroupCatalog enumerate_group(const AbelianGroupType& type, bool up_to_iso,
                                    const Deadline& deadline, unsigned threads,
                                    std::vector<FiniteRing>& out) {
  const ClosureSearch search(type.factors());
  const auto& group = search.group();
  const std::size_t n = group.order();
  const std::size_t k = group.rank();
  const auto leaves = enumerate_raw(search, deadline, threads);

  GroupCatalog gc;
  gc.type = type;
  gc.raw_count = leaves.size();

  if (!up_to_iso) {
    if (leaves.size() > kRawMaterializeLimit) {
      throw RingError(ErrorKind::TooLarge, std::to_string(leaves.size()) +
                                               " raw structures; enumerate up to isomorphism instead");
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const auto products = search.unpack(leaves[i]);
      out.push_back(FiniteRing::unchecked(n, group.add_table(), group.mul_table(products),
                                          "raw" + std::to_string(n) + "_" + type.tag() + "_" +
                                              std::to_string(i + 1)));
    }
    gc.class_count = leaves.size();
    return gc;
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> sorted(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) sorted[i] = {leaves[i], i};
  std::sort(sorted.begin(), sorted.end());

  const auto auts = group.automorphisms();
  std::vector<std::vector<Element>> inverses;
  inverses.reserve(auts.size());
  for (const auto& phi : auts) {
    std::vector<Element> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[phi[x]] = static_cast<Element>(x);
    inverses.push_back(std::move(inv));
  }

  std::vector<bool> covered(leaves.size(), false);
  std::uint64_t covered_total = 0;
  std::vector<Element> transported(k * k);
  for (std::size_t pos = 0; pos < leaves.size(); ++pos) {
    if (covered[pos]) continue;
    if ((pos & 0xff) == 0 && deadline.expired()) {
      throw RingError(ErrorKind::PartialUniverse, "time budget exceeded during isomorphism dedupe");
    }
    const auto products = search.unpack(leaves[pos]);
    const auto table = group.mul_table(products);
    for (std::size_t a = 0; a < auts.size(); ++a) {
      const auto& phi = auts[a];
      const auto& psi = inverses[a];
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          transported[i * k + j] = phi[table[psi[group.generator(i)] * n + psi[group.generator(j)]]];
        }
      }
      const std::uint64_t key = search.pack(transported);
      const auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                       std::pair<std::uint64_t, std::size_t>{key, 0});
      if (it == sorted.end() || it->first != key) {
        throw std::logic_error("raw enumeration is not closed under automorphisms of " +
                               type.to_string());
      }
      if (!covered[it->second]) {
        covered[it->second] = true;
        ++covered_total;
      }
    }
    ++gc.class_count;
    auto rep = canonical_form(FiniteRing::from_tables(n, group.add_table(), table));
    rep.set_label(catalog_label(n, type, gc.class_count));
    out.push_back(std::move(rep));
  }
  if (covered_total != leaves.size()) {
    throw std::logic_error("automorphism orbits do not partition the raw structures");
  }
  return gc;
}

/// All rings of order n (isomorphism classes, or raw structures when
/// up_to_iso is false), grouped by additive type in ascending factor order.
inline IsoClassCatalog enumerate_rings(std::size_t n, bool up_to_iso,
                                       const EnumerationOptions& options = {}) {
  if (n == 0) throw RingError(ErrorKind::MalformedSpec, "order must be positive");
  if (n > kEnumerationMaxOrder) {
    throw RingError(ErrorKind::TooLarge, "exhaustive enumeration supports order <= " +
                                             std::to_string(kEnumerationMaxOrder));
  }
  const Deadline deadline(options.time_budget_secs);
  IsoClassCatalog cat;
  cat.order = n;
  cat.up_to_iso = up_to_iso;
  for (const auto& type : abelian_groups_of_order(n)) {
    cat.groups.push_back(enumerate_group(type, up_to_iso, deadline, options.threads,
                                         cat.representatives));
  }
  return cat;
}

/// Every iso-class representative R with |Cent(R)| = target and
/// |R| <= max_order. An empty result only speaks for the searched orders.
inline std::vector<FiniteRing> search_n_centralizer(std::size_t target, std::size_t max_order,
                                                    const EnumerationOptions& options = {}) {
  if (target == 0) throw RingError(ErrorKind::MalformedSpec, "target must be >= 1");
  if (max_order > kEnumerationMaxOrder) {
    throw RingError(ErrorKind::TooLarge, "search supports max_order <= " +
                                             std::to_string(kEnumerationMaxOrder));
  }
  std::vector<FiniteRing> hits;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& r : enumerate_rings(n, true, options).representatives) {
      if (cent_set(r).size() == target) hits.push_back(std::move(r));
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Catalog directories: one structure-constant RingSpec per representative
// plus manifest.json recording per-group counts and completion.

inline constexpr const char* kManifestName = "manifest.json";

inline StructureConstants structure_constants_of(const FiniteRing& r, const CyclicProduct& group) {
  const std::size_t k = group.rank();
  StructureConstants sc;
  sc.group = group.moduli();
  sc.mul_constants.assign(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element p = r.mul(group.generator(i), group.generator(j));
      for (std::size_t m = 0; m < k; ++m) sc.mul_constants[i][j][m] = group.coeff(p, m);
    }
  }
  return sc;
}

namespace detail {

inline nlohmann::json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw RingError(ErrorKind::MalformedSpec, "cannot open " + p.string());
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& ex) {
    throw RingError(ErrorKind::MalformedSpec, p.string() + ": " + ex.what());
  }
}

inline void write_json_file(const std::filesystem::path& p, const nlohmann::json& j) {
  std::ofstream out(p);
  if (!out) throw RingError(ErrorKind::MalformedSpec, "cannot write " + p.string());
  out << j.dump(2) << "\n";
}

}  // namespace detail

/// Enumerates order n into `dir`. Rings are written as each additive group
/// finishes and the manifest is rewritten after every group, so with
/// `resume` a rerun reloads finished groups instead of searching them again.
inline IsoClassCatalog enumerate_to_directory(std::size_t n, const std::filesystem::path& dir,
                                              bool resume, const EnumerationOptions& options = {}) {
  if (n == 0 || n > kEnumerationMaxOrder) {
    throw RingError(ErrorKind::TooLarge, "exhaustive enumeration supports order <= " +
                                             std::to_string(kEnumerationMaxOrder));
  }
  std::filesystem::create_directories(dir);
  const auto manifest_path = dir / kManifestName;

  nlohmann::json previous;
  if (resume && std::filesystem::exists(manifest_path)) {
    previous = detail::read_json_file(manifest_path);
    if (previous.value("order", std::size_t{0}) != n) {
      throw RingError(ErrorKind::MalformedSpec, "manifest in " + dir.string() + " is for another order");
    }
  }
  auto completed_entry = [&](const AbelianGroupType& t) -> const nlohmann::json* {
    if (!previous.is_object() || !previous.contains("groups")) return nullptr;
    for (const auto& g : previous["groups"]) {
      if (g.value("complete", false) && g.at("type").get<std::vector<std::uint64_t>>() == t.factors()) {
        return &g;
      }
    }
    return nullptr;
  };

  const Deadline deadline(options.time_budget_secs);
  IsoClassCatalog cat;
  cat.order = n;
  nlohmann::json manifest = {{"order", n}, {"up_to_iso", true}, {"groups", nlohmann::json::array()}};
  const auto types = abelian_groups_of_order(n);
  for (const auto& type : types) {
    nlohmann::json entry;
    if (const auto* done = completed_entry(type)) {
      entry = *done;
      GroupCatalog gc{type, done->at("raw").get<std::uint64_t>(), done->at("classes").get<std::size_t>()};
      for (const auto& f : done->at("files")) {
        cat.representatives.push_back(load_ring(dir / f.get<std::string>()));
      }
      cat.groups.push_back(gc);
    } else {
      const std::size_t first = cat.representatives.size();
      auto gc = enumerate_group(type, true, deadline, options.threads, cat.representatives);
      const CyclicProduct group(type.factors());
      nlohmann::json files = nlohmann::json::array();
      for (std::size_t i = first; i < cat.representatives.size(); ++i) {
        const auto& r = cat.representatives[i];
        const std::string file = r.label() + ".json";
        save_spec(dir / file, RingSpec{r.label(), structure_constants_of(r, group)});
        files.push_back(file);
      }
      entry = {{"type", type.factors()},       {"raw", gc.raw_count}, {"classes", gc.class_count},
               {"complete", true},             {"files", files}};
      cat.groups.push_back(gc);
    }
    manifest["groups"].push_back(entry);
    manifest["raw_total"] = cat.raw_total();
    manifest["classes"] = cat.class_total();
    detail::write_json_file(manifest_path, manifest);
  }
  return cat;
}

/// Loads a directory written by enumerate_to_directory.
inline IsoClassCatalog read_catalog(const std::filesystem::path& dir) {
  const auto manifest = detail::read_json_file(dir / kManifestName);
  IsoClassCatalog cat;
  cat.order = manifest.at("order").get<std::size_t>();
  for (const auto& g : manifest.at("groups")) {
    GroupCatalog gc{AbelianGroupType(g.at("type").get<std::vector<std::uint64_t>>()),
                    g.at("raw").get<std::uint64_t>(), g.at("classes").get<std::size_t>()};
    for (const auto& f : g.at("files")) {
      cat.representatives.push_back(load_ring(dir / f.get<std::string>()));
    }
    cat.groups.push_back(std::move(gc));
  }
  return cat;
}

}  // namespace ringcent
