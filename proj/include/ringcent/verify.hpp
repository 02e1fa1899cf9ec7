#pragma once

// Named property suites run over a universe of rings. Each suite checks one
// structural statement about centralizers, centers or commutativity degree
// on every ring where its hypothesis applies, and records the ring spec of
// any counterexample so it can be replayed.

#include <algorithm>
#include <array>
#include <bitset>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ringcent/abelian.hpp"
#include "ringcent/centralizer.hpp"
#include "ringcent/error.hpp"
#include "ringcent/gallery.hpp"
#include "ringcent/ring.hpp"
#include "ringcent/ring_spec.hpp"

namespace ringcent {

struct UniverseEntry {
  FiniteRing ring;
  CentReport report;
};

struct Universe {
  std::string description;
  std::vector<UniverseEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

inline Universe make_universe(std::string description, std::vector<FiniteRing> rings) {
  Universe u;
  u.description = std::move(description);
  u.entries.reserve(rings.size());
  for (auto& r : rings) {
    auto rep = analyze(r);
    u.entries.push_back({std::move(r), std::move(rep)});
  }
  return u;
}

inline Universe gallery_universe() { return make_universe("gallery", standard_gallery()); }

/// "gallery", a directory (every *.json below it except manifests, in path
/// order) or a single spec file.
inline Universe load_universe(const std::string& where) {
  if (where == "gallery") return gallery_universe();
  const std::filesystem::path path(where);
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::recursive_directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".json" &&
          e.path().filename() != "manifest.json") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<FiniteRing> rings;
    for (const auto& f : files) rings.push_back(load_ring(f));
    return make_universe(where, std::move(rings));
  }
  if (std::filesystem::is_regular_file(path)) return make_universe(where, {load_ring(path)});
  throw RingError(ErrorKind::MalformedSpec, "no universe at '" + where + "'");
}

struct Violation {
  std::string ring_label;
  std::string expected;
  std::string observed;
  RingSpec spec;
};

struct SuiteResult {
  std::string suite_id;
  std::string universe;
  std::size_t universe_size = 0;
  std::size_t checked = 0;  // rings (or pairs) the statement applied to
  std::size_t skipped = 0;  // applicable but over a size limit
  std::vector<Violation> violations;
  std::chrono::duration<double> elapsed{0};

  bool passed() const noexcept { return violations.empty(); }
};

/// Suite ids in their fixed run order.
inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{
      "P1_commutative", "T1_no_2_3",       "P2_product", "T_p2",         "T_p3_unital",
      "T_dc",           "T_pring",         "T_4c",       "L4_index2",    "T_5c",
      "L5C2_counting",  "D_58",            "D_bound",    "D_rc",         "D_conv",
      "L1_intersection", "L2_union",       "L3_two_subrings"};
  return ids;
}

namespace detail {

inline bool is_elementary_square(const AbelianGroupType& t, std::uint64_t* p = nullptr) {
  const auto& f = t.factors();
  if (f.size() != 2 || f[0] != f[1] || !is_prime(f[0])) return false;
  if (p) *p = f[0];
  return true;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// (p^2 + p - 1) / p^3.
inline Fraction degree_bound(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  return Fraction(q * q + q - 1, q * q * q);
}

using Bits = std::bitset<kMaxOrder>;

struct BitsLess {
  bool operator()(const Bits& a, const Bits& b) const {
    for (std::size_t i = kMaxOrder; i-- > 0;) {
      if (a[i] != b[i]) return b[i];
    }
    return false;
  }
};

/// Smallest subring containing `base` (already a subring) and x.
inline Bits subring_closure(const FiniteRing& r, const Bits& base, Element x) {
  Bits in = base;
  std::vector<Element> members;
  for (std::size_t i = 0; i < r.order(); ++i) {
    if (in[i]) members.push_back(static_cast<Element>(i));
  }
  std::vector<Element> pending{x};
  in[x] = true;
  while (!pending.empty()) {
    const Element e = pending.back();
    pending.pop_back();
    members.push_back(e);
    for (std::size_t t = 0; t < members.size(); ++t) {
      const Element m = members[t];
      for (Element v : {r.add(e, m), r.mul(e, m), r.mul(m, e)}) {
        if (!in[v]) {
          in[v] = true;
          pending.push_back(v);
        }
      }
    }
  }
  return in;
}

/// All subrings (as element masks), or nullopt when there are more than
/// `limit` of them.
inline std::optional<std::vector<Bits>> all_subrings(const FiniteRing& r, std::size_t limit) {
  std::set<Bits, BitsLess> seen;
  Bits zero;
  zero[0] = true;
  std::vector<Bits> queue{zero};
  seen.insert(zero);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Bits h = queue[q];
    for (std::size_t x = 1; x < r.order(); ++x) {
      if (h[x]) continue;
      Bits k = subring_closure(r, h, static_cast<Element>(x));
      if (seen.insert(k).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(k);
      }
    }
  }
  return queue;
}

inline ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  const std::size_t m = b.parent_order();
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (Element x : a) {
    for (Element y : b) out.push_back(static_cast<Element>(x * m + y));
  }
  return ElementSet(a.parent_order() * m, std::move(out));
}

}  // namespace detail

/// Subrings considered per ring by L3_two_subrings before the ring is
/// counted as skipped.
inline constexpr std::size_t kSubringLimit = 20000;

/// Pairs drawn by P2_product from one universe.
inline constexpr std::size_t kProductSamples = 64;

namespace detail {

struct SuiteContext {
  SuiteResult& result;

  void fail(const FiniteRing& r, std::string expected, std::string observed) {
    result.violations.push_back(
        {r.label(), std::move(expected), std::move(observed), explicit_spec(r)});
  }
};

using RingCheck = std::function<void(const UniverseEntry&, SuiteContext&)>;

inline std::string cent_str(const CentReport& rep) { return "cent_count " + std::to_string(rep.cent_count); }

inline std::map<std::string, RingCheck> ring_checks() {
  std::map<std::string, RingCheck> m;

  m["P1_commutative"] = [](const UniverseEntry& e, SuiteContext& c) {
    ++c.result.checked;
    if (e.report.is_commutative != (e.report.cent_count == 1)) {
      c.fail(e.ring, "commutative iff cent_count 1",
             "commutative " + yes_no(e.report.is_commutative) + ", " + cent_str(e.report));
    }
  };

  m["T1_no_2_3"] = [](const UniverseEntry& e, SuiteContext& c) {
    ++c.result.checked;
    if (e.report.cent_count == 2 || e.report.cent_count == 3) {
      c.fail(e.ring, "cent_count not in {2, 3}", cent_str(e.report));
    }
  };

  m["T_p2"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    const auto p = prime_power_base(rep.order);
    if (!p || *p * *p != rep.order || rep.is_commutative) return;
    ++c.result.checked;
    if (rep.cent_count != *p + 2 || rep.center.size() != 1) {
      c.fail(e.ring, "cent_count " + std::to_string(*p + 2) + ", |Z(R)| 1",
             cent_str(rep) + ", |Z(R)| " + std::to_string(rep.center.size()));
    }
  };

  m["T_p3_unital"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    const auto p = prime_power_base(rep.order);
    if (!p || *p * *p * *p != rep.order || rep.is_commutative || !has_unity(e.ring)) return;
    ++c.result.checked;
    if (rep.cent_count != *p + 2) c.fail(e.ring, "cent_count " + std::to_string(*p + 2), cent_str(rep));
  };

  m["T_dc"] = [](const UniverseEntry& e, SuiteContext& c) {
    std::uint64_t p = 0;
    if (!is_elementary_square(e.report.quotient_type, &p)) return;
    ++c.result.checked;
    if (e.report.cent_count != p + 2) {
      c.fail(e.ring, "cent_count " + std::to_string(p + 2), cent_str(e.report));
    }
  };

  m["T_pring"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    const auto p = prime_power_base(rep.order);
    if (!p || rep.is_commutative) return;
    ++c.result.checked;
    const bool square = is_elementary_square(rep.quotient_type) && rep.quotient_type.factors()[0] == *p;
    if (rep.cent_count < *p + 2 || (rep.cent_count == *p + 2) != square) {
      c.fail(e.ring,
             "cent_count >= " + std::to_string(*p + 2) + ", equality iff R/Z(R) = Z_p x Z_p",
             cent_str(rep) + ", R/Z(R) " + rep.quotient_type.to_string());
    }
  };

  m["T_4c"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    ++c.result.checked;
    const bool klein = rep.quotient_type == AbelianGroupType({2, 2});
    if ((rep.cent_count == 4) != klein) {
      c.fail(e.ring, "cent_count 4 iff R/Z(R) = Z_2 x Z_2",
             cent_str(rep) + ", R/Z(R) " + rep.quotient_type.to_string());
    }
  };

  m["L4_index2"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    if (rep.cent_count != 4) return;
    ++c.result.checked;
    bool found = false;
    for (const auto& a : rep.centralizers) {
      if (!a.is_whole() && 2 * a.size() == rep.order) found = true;
    }
    if (!found) c.fail(e.ring, "a proper centralizer of index 2", "none");
  };

  m["T_5c"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    ++c.result.checked;
    const bool z33 = rep.quotient_type == AbelianGroupType({3, 3});
    if ((rep.cent_count == 5) != z33) {
      c.fail(e.ring, "cent_count 5 iff R/Z(R) = Z_3 x Z_3",
             cent_str(rep) + ", R/Z(R) " + rep.quotient_type.to_string());
    }
  };

  m["L5C2_counting"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    if (rep.cent_count != 5) return;
    ++c.result.checked;
    std::vector<const ElementSet*> proper;
    for (const auto& a : rep.centralizers) {
      if (!a.is_whole()) proper.push_back(&a);
    }
    const std::size_t z = rep.center.size(), n = rep.order;
    std::size_t sum = 0;
    for (const auto* a : proper) sum += a->size();
    if (proper.size() != 4 || sum != n + 3 * z) {
      c.fail(e.ring, "|R| = |A|+|B|+|C|+|D| - 3|Z(R)|",
             std::to_string(proper.size()) + " proper centralizers, sum " + std::to_string(sum) +
                 ", |R| " + std::to_string(n) + ", |Z(R)| " + std::to_string(z));
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      for (std::size_t j = i + 1; j < proper.size(); ++j) {
        if (intersection(*proper[i], *proper[j]) != rep.center) {
          c.fail(e.ring, "pairwise intersections equal Z(R)",
                 "intersection of centralizers " + std::to_string(i) + " and " + std::to_string(j) +
                     " has size " + std::to_string(intersection(*proper[i], *proper[j]).size()));
        }
        if (proper[i]->size() * proper[j]->size() > z * n) {
          c.fail(e.ring, "|S||T|/|R| <= |Z(R)|",
                 std::to_string(proper[i]->size()) + "*" + std::to_string(proper[j]->size()) + "/" +
                     std::to_string(n) + " > " + std::to_string(z));
        }
      }
    }
    if (6 * z > n) {
      c.fail(e.ring, "|Z(R)| <= |R|/6", "|Z(R)| " + std::to_string(z) + ", |R| " + std::to_string(n));
    }
  };

  m["D_58"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    if (rep.is_commutative) return;
    ++c.result.checked;
    if ((rep.cent_count == 4) != (rep.degree == Fraction(5, 8))) {
      c.fail(e.ring, "cent_count 4 iff d(R) = 5/8",
             cent_str(rep) + ", d(R) " + fraction_string(rep.degree));
    }
  };

  m["D_bound"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    if (rep.is_commutative) return;
    ++c.result.checked;
    const auto p = *smallest_prime_factor(rep.order);
    const Fraction bound = degree_bound(p);
    const std::size_t idx = rep.order / rep.center.size();
    if (rep.degree > bound || (rep.degree == bound) != (idx == p * p)) {
      c.fail(e.ring,
             "d(R) <= " + fraction_string(bound) + ", equality iff |R:Z(R)| = " + std::to_string(p * p),
             "d(R) " + fraction_string(rep.degree) + ", |R:Z(R)| " + std::to_string(idx));
    }
  };

  m["D_rc"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    if (rep.is_commutative) return;
    const auto p = *smallest_prime_factor(rep.order);
    if (rep.degree != degree_bound(p)) return;
    ++c.result.checked;
    if (rep.cent_count != p + 2) c.fail(e.ring, "cent_count " + std::to_string(p + 2), cent_str(rep));
  };

  m["D_conv"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto& rep = e.report;
    const auto p = prime_power_base(rep.order);
    if (!p || rep.is_commutative || rep.cent_count != *p + 2) return;
    ++c.result.checked;
    if (rep.degree != degree_bound(*p)) {
      c.fail(e.ring, "d(R) " + fraction_string(degree_bound(*p)), "d(R) " + fraction_string(rep.degree));
    }
  };

  m["L1_intersection"] = [](const UniverseEntry& e, SuiteContext& c) {
    ++c.result.checked;
    auto acc = ElementSet::whole(e.ring.order());
    for (std::size_t x = 0; x < e.ring.order(); ++x) acc = intersection(acc, centralizer(e.ring, x));
    if (acc != e.report.center) {
      c.fail(e.ring, "Z(R) = intersection of all C(r), size " + std::to_string(e.report.center.size()),
             "intersection size " + std::to_string(acc.size()));
    }
  };

  // For commutative R there are no non-central elements and the union is
  // empty, so only noncommutative rings are in scope.
  m["L2_union"] = [](const UniverseEntry& e, SuiteContext& c) {
    if (e.report.is_commutative) return;
    ++c.result.checked;
    ElementSet acc(e.ring.order(), {});
    for (std::size_t x = 0; x < e.ring.order(); ++x) {
      if (!e.report.center.contains(x)) acc = set_union(acc, centralizer(e.ring, x));
    }
    if (!acc.is_whole()) {
      c.fail(e.ring, "union of C(r), r not central, is R",
             "union has " + std::to_string(acc.size()) + " of " + std::to_string(e.ring.order()));
    }
  };

  m["L3_two_subrings"] = [](const UniverseEntry& e, SuiteContext& c) {
    const auto subs = all_subrings(e.ring, kSubringLimit);
    if (!subs) {
      ++c.result.skipped;
      return;
    }
    ++c.result.checked;
    const std::size_t n = e.ring.order();
    std::vector<Bits> proper;
    for (const auto& s : *subs) {
      if (s.count() < n) proper.push_back(s);
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      for (std::size_t j = i; j < proper.size(); ++j) {
        if ((proper[i] | proper[j]).count() == n) {
          c.fail(e.ring, "R is not a union of two proper subrings",
                 "subrings of size " + std::to_string(proper[i].count()) + " and " +
                     std::to_string(proper[j].count()) + " cover R");
          return;
        }
      }
    }
  };

  return m;
}

/// Pairs for the product suite: those with |R||S| within the size limit and
/// at least one noncommutative factor (all pairs if none is), thinned by a
/// fixed stride to at most kProductSamples.
inline std::vector<std::pair<std::size_t, std::size_t>> product_pairs(const Universe& u) {
  std::vector<std::pair<std::size_t, std::size_t>> all, mixed;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      if (u.entries[i].report.order * u.entries[j].report.order > kMaxOrder) continue;
      all.emplace_back(i, j);
      if (!u.entries[i].report.is_commutative || !u.entries[j].report.is_commutative) {
        mixed.emplace_back(i, j);
      }
    }
  }
  auto& pool = mixed.empty() ? all : mixed;
  if (pool.size() <= kProductSamples) return pool;
  std::vector<std::pair<std::size_t, std::size_t>> picked;
  for (std::size_t t = 0; t < kProductSamples; ++t) picked.push_back(pool[t * pool.size() / kProductSamples]);
  return picked;
}

inline void run_product_suite(const Universe& u, SuiteContext& c) {
  for (const auto& [i, j] : product_pairs(u)) {
    const auto& a = u.entries[i];
    const auto& b = u.entries[j];
    const auto prod = direct_product(a.ring, b.ring);
    const auto cents = cent_set(prod);
    ++c.result.checked;
    std::vector<ElementSet> expected;
    for (const auto& x : a.report.centralizers) {
      for (const auto& y : b.report.centralizers) expected.push_back(product_set(x, y));
    }
    std::sort(expected.begin(), expected.end());
    if (cents.size() != a.report.cent_count * b.report.cent_count || cents != expected) {
      c.fail(prod, "cent_count " + std::to_string(a.report.cent_count * b.report.cent_count) +
                       ", Cent(RxS) = Cent(R) x Cent(S)",
             "cent_count " + std::to_string(cents.size()) +
                 (cents == expected ? "" : ", centralizer sets differ"));
    }
  }
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& suite_id, const Universe& universe) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), suite_id) == ids.end()) {
    throw RingError(ErrorKind::UnknownSuite, suite_id);
  }
  if (universe.entries.empty()) throw RingError(ErrorKind::EmptyUniverse, universe.description);

  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.suite_id = suite_id;
  result.universe = universe.description;
  result.universe_size = universe.size();
  detail::SuiteContext ctx{result};
  if (suite_id == "P2_product") {
    detail::run_product_suite(universe, ctx);
  } else {
    static const auto checks = detail::ring_checks();
    const auto& check = checks.at(suite_id);
    for (const auto& e : universe.entries) check(e, ctx);
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

inline std::vector<SuiteResult> run_all_suites(const Universe& universe) {
  std::vector<SuiteResult> out;
  for (const auto& id : suite_ids()) out.push_back(run_suite(id, universe));
  return out;
}

/// One summary line per suite plus one line per violation. Timing is left
/// out unless asked for, so output is stable across runs.
inline std::string render_result(const SuiteResult& r, bool with_elapsed = false) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.suite_id << "  universe " << r.universe << " ("
     << r.universe_size << " rings)  checked " << r.checked;
  if (r.skipped) os << "  skipped " << r.skipped;
  os << "  violations " << r.violations.size();
  if (with_elapsed) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << r.elapsed.count();
    os << "  " << t.str() << "s";
  }
  os << "\n";
  for (const auto& v : r.violations) {
    os << "  " << v.ring_label << ": expected " << v.expected << "; observed " << v.observed << "\n";
  }
  return os.str();
}

/// Writes the spec of every violating ring to `dir` as
/// <suite>_<n>_<label>.json; returns the paths written.
inline std::vector<std::filesystem::path> dump_violations(const SuiteResult& r,
                                                          const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  if (r.violations.empty()) return written;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    std::string label = r.violations[i].ring_label;
    for (auto& ch : label) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') ch = '_';
    }
    const auto path = dir / (r.suite_id + "_" + std::to_string(i + 1) + "_" + label + ".json");
    save_spec(path, r.violations[i].spec);
    written.push_back(path);
  }
  return written;
}

// ---------------------------------------------------------------------------
// Mutation harness: corrupt one multiplication entry at a time. A mutant
// counts as detected when validation rejects it or a suite reports a
// violation. The suites are also run on the unvalidated table, so their own
// sensitivity is measured even when validation already caught the change.

struct MutationTrial {
  std::size_t row = 0, col = 0;
  Element from = 0, to = 0;
  bool rejected = false;               // validation threw
  std::string rejection;               // its message
  std::vector<std::string> caught_by;  // suites reporting a violation
  std::vector<std::string> raised_by;  // suites that threw on the table
  std::string analysis_error;          // set when the table could not be analysed

  bool detected() const noexcept { return rejected || !caught_by.empty(); }
};

struct MutationReport {
  std::string base_label;
  std::vector<MutationTrial> trials;

  std::size_t detected() const {
    return static_cast<std::size_t>(
        std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.detected(); }));
  }
  std::size_t caught_by_suites() const {
    return static_cast<std::size_t>(
        std::count_if(trials.begin(), trials.end(), [](const auto& t) { return !t.caught_by.empty(); }));
  }
};

inline MutationReport run_mutation_harness(const FiniteRing& base, std::size_t count = 50,
                                           std::uint64_t seed = 20240611) {
  MutationReport report;
  report.base_label = base.label();
  const std::size_t n = base.order();
  if (n < 2) throw RingError(ErrorKind::MalformedSpec, "mutation needs a ring with at least 2 elements");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1), shift(1, n - 1);
  const std::vector<Element> add(base.add_table().begin(), base.add_table().end());
  for (std::size_t t = 0; t < count; ++t) {
    MutationTrial trial;
    trial.row = pick(rng);
    trial.col = pick(rng);
    std::vector<Element> mul(base.mul_table().begin(), base.mul_table().end());
    auto& cell = mul[trial.row * n + trial.col];
    trial.from = cell;
    trial.to = static_cast<Element>((cell + shift(rng)) % n);
    cell = trial.to;
    const std::string label = base.label() + "#mut" + std::to_string(t + 1);
    try {
      FiniteRing::from_tables(n, add, mul, label);
    } catch (const RingError& ex) {
      trial.rejected = true;
      trial.rejection = ex.what();
    }
    std::optional<Universe> universe;
    try {
      universe = make_universe(label, {FiniteRing::unchecked(n, add, std::move(mul), label)});
    } catch (const RingError& ex) {
      trial.analysis_error = ex.what();
    }
    for (const auto& id : suite_ids()) {
      if (!universe) break;
      try {
        if (!run_suite(id, *universe).passed()) trial.caught_by.push_back(id);
      } catch (const RingError&) {
        trial.raised_by.push_back(id);
      }
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

inline std::string render_mutation_report(const MutationReport& r) {
  std::ostringstream os;
  os << "mutation harness on " << r.base_label << ": " << r.detected() << "/" << r.trials.size()
     << " detected, " << r.caught_by_suites() << " also caught by suites\n";
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    os << "  #" << (i + 1) << " mul[" << t.row << "][" << t.col << "] " << t.from << " -> " << t.to
       << ": " << (t.detected() ? "" : "UNDETECTED");
    if (t.rejected) os << "rejected (" << t.rejection << ")";
    if (!t.caught_by.empty()) {
      os << (t.rejected ? "; " : "") << "suites:";
      for (const auto& s : t.caught_by) os << " " << s;
    }
    if (!t.raised_by.empty()) {
      os << "; raised:";
      for (const auto& s : t.raised_by) os << " " << s;
    }
    if (!t.analysis_error.empty()) os << "; analysis failed (" << t.analysis_error << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace ringcent
