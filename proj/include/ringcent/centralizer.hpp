#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "ringcent/abelian.hpp"
#include "ringcent/ring.hpp"

namespace ringcent {

using Fraction = boost::rational<std::int64_t>;

/// C(r) = {s : rs = sr}.
inline ElementSet centralizer(const FiniteRing& r, std::size_t x) {
  if (x >= r.order()) {
    throw RingError(ErrorKind::IndexOutOfRange,
                    "element " + std::to_string(x) + " of a ring of order " + std::to_string(r.order()));
  }
  const auto e = static_cast<Element>(x);
  std::vector<Element> members;
  for (std::size_t s = 0; s < r.order(); ++s) {
    const auto y = static_cast<Element>(s);
    if (r.mul(e, y) == r.mul(y, e)) members.push_back(y);
  }
  ElementSet c(r.order(), std::move(members));
#ifndef NDEBUG
  if (!is_subring(r, c)) throw std::logic_error("centralizer is not a subring");
#endif
  return c;
}

/// Z(R): elements commuting with every element.
inline ElementSet center(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Element> members;
  for (std::size_t s = 0; s < n; ++s) {
    bool central = true;
    for (std::size_t t = 0; t < n && central; ++t) {
      central = r.mul(static_cast<Element>(s), static_cast<Element>(t)) ==
                r.mul(static_cast<Element>(t), static_cast<Element>(s));
    }
    if (central) members.push_back(static_cast<Element>(s));
  }
  return ElementSet(n, std::move(members));
}

/// Cent(R): the distinct centralizers, sorted lexicographically by members.
/// Includes R itself (= C(0)).
inline std::vector<ElementSet> cent_set(const FiniteRing& r) {
  std::vector<ElementSet> all;
  all.reserve(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) all.push_back(centralizer(r, x));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

/// d(R) = sum_r |C(r)| / |R|^2, reduced.
inline Fraction commutativity_degree(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::int64_t commuting = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r.mul(static_cast<Element>(i), static_cast<Element>(j)) ==
          r.mul(static_cast<Element>(j), static_cast<Element>(i))) {
        ++commuting;
      }
    }
  }
  return Fraction(commuting, static_cast<std::int64_t>(n * n));
}

struct CentReport {
  std::string ring_label;
  std::size_t order = 1;
  bool is_commutative = true;
  ElementSet center;
  std::vector<ElementSet> centralizers;
  std::size_t cent_count = 1;
  Fraction degree{1};
  AbelianGroupType quotient_type;
  AbelianGroupType additive_type;
};

inline CentReport analyze(const FiniteRing& r) {
  CentReport rep;
  rep.ring_label = r.label();
  rep.order = r.order();
  rep.center = center(r);
  rep.centralizers = cent_set(r);
  rep.cent_count = rep.centralizers.size();
  rep.is_commutative = is_commutative(r);
  rep.degree = commutativity_degree(r);
  rep.quotient_type = quotient_type(r, rep.center);
  rep.additive_type = classify_additive(r);
  return rep;
}

inline nlohmann::json to_json(const AbelianGroupType& t) { return t.factors(); }

inline nlohmann::json to_json(const ElementSet& s) { return s.members(); }

inline nlohmann::json to_json(const CentReport& rep) {
  nlohmann::json cents = nlohmann::json::array();
  for (const auto& c : rep.centralizers) cents.push_back(to_json(c));
  return {
      {"ring_label", rep.ring_label},
      {"order", rep.order},
      {"is_commutative", rep.is_commutative},
      {"center", to_json(rep.center)},
      {"centralizers", cents},
      {"cent_count", rep.cent_count},
      {"degree", {{"num", rep.degree.numerator()}, {"den", rep.degree.denominator()}}},
      {"quotient_type", to_json(rep.quotient_type)},
      {"additive_type", to_json(rep.additive_type)},
  };
}

inline std::string fraction_string(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

namespace detail {

inline std::string set_string(const ElementSet& s, std::size_t limit = 16) {
  std::ostringstream os;
  os << "{";
  std::size_t i = 0;
  for (Element e : s) {
    if (i == limit) {
      os << ", ...";
      break;
    }
    os << (i ? ", " : "") << e;
    ++i;
  }
  os << "}";
  return os.str();
}

}  // namespace detail

/// Human-readable report; byte-stable for a given ring.
inline std::string render_text(const CentReport& rep) {
  std::ostringstream os;
  os << "ring            " << (rep.ring_label.empty() ? "(unnamed)" : rep.ring_label) << "\n";
  os << "order           " << rep.order << "\n";
  os << "additive group  " << rep.additive_type.to_string() << "\n";
  os << "commutative     " << (rep.is_commutative ? "yes" : "no") << "\n";
  os << "|Z(R)|          " << rep.center.size() << "  " << detail::set_string(rep.center) << "\n";
  os << "R/Z(R)          " << rep.quotient_type.to_string() << "\n";
  os << "|Cent(R)|       " << rep.cent_count << "\n";
  os << "d(R)            " << fraction_string(rep.degree) << "\n";
  os << "centralizers\n";
  for (std::size_t i = 0; i < rep.centralizers.size(); ++i) {
    const auto& c = rep.centralizers[i];
    os << "  [" << i << "] size " << c.size() << "  " << detail::set_string(c) << "\n";
  }
  return os.str();
}

}  // namespace ringcent
