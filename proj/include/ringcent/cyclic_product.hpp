#pragma once

// Arithmetic in Z_{d1} x ... x Z_{dk} with mixed-radix element encoding:
// the coefficient vector (c1..ck) has index sum_i c_i * prod_{j>i} d_j, so
// the first generator is the most significant digit.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ringcent/error.hpp"
#include "ringcent/ring.hpp"

namespace ringcent {

class CyclicProduct {
 public:
  explicit CyclicProduct(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (auto d : moduli_) {
      if (d < 2) throw RingError(ErrorKind::MalformedSpec, "cyclic factor orders must be >= 2");
      order_ *= d;
      if (order_ > kMaxOrder) {
        throw RingError(ErrorKind::TooLarge, "group order exceeds " + std::to_string(kMaxOrder));
      }
    }
    const std::size_t k = moduli_.size();
    place_.assign(k, 1);
    for (std::size_t i = k; i-- > 1;) place_[i - 1] = place_[i] * moduli_[i];

    coeffs_.assign(order_ * k, 0);
    for (std::size_t x = 0; x < order_; ++x) {
      std::size_t rest = x;
      for (std::size_t i = 0; i < k; ++i) {
        coeffs_[x * k + i] = static_cast<std::uint32_t>(rest / place_[i]);
        rest %= place_[i];
      }
    }
    add_.resize(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x) {
      for (std::size_t y = 0; y < order_; ++y) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) {
          idx += ((coeffs_[x * k + i] + coeffs_[y * k + i]) % moduli_[i]) * place_[i];
        }
        add_[x * order_ + y] = static_cast<Element>(idx);
      }
    }
    exponent_ = 1;
    for (auto d : moduli_) exponent_ = std::lcm(exponent_, d);
    smul_.resize(exponent_ * order_);
    for (std::size_t x = 0; x < order_; ++x) {
      Element acc = 0;
      for (std::size_t a = 0; a < exponent_; ++a) {
        smul_[a * order_ + x] = acc;
        acc = add_[acc * order_ + x];
      }
    }
    orders_.assign(order_, 1);
    for (std::size_t x = 1; x < order_; ++x) {
      std::uint64_t o = 1;
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t c = coeffs_[x * k + i];
        o = std::lcm(o, moduli_[i] / std::gcd(moduli_[i], c));
      }
      orders_[x] = o;
    }
  }

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }

  Element add(Element x, Element y) const noexcept { return add_[x * order_ + y]; }

  /// a * x for 0 <= a; reduced modulo the group exponent.
  Element scale(std::uint64_t a, Element x) const noexcept {
    return smul_[(a % exponent_) * order_ + x];
  }

  std::uint32_t coeff(Element x, std::size_t i) const noexcept { return coeffs_[x * rank() + i]; }
  std::span<const std::uint32_t> coeffs(Element x) const noexcept {
    return {coeffs_.data() + x * rank(), rank()};
  }

  Element generator(std::size_t i) const noexcept { return static_cast<Element>(place_[i]); }

  Element encode(std::span<const std::uint64_t> c) const {
    if (c.size() != rank()) throw RingError(ErrorKind::MalformedSpec, "coefficient vector length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx += (c[i] % moduli_[i]) * place_[i];
    return static_cast<Element>(idx);
  }

  std::uint64_t element_order(Element x) const noexcept { return orders_[x]; }

  std::vector<Element> add_table() const { return add_; }

  /// Bilinear product x*y from generator products gen_products[i*k+j] = g_i g_j.
  Element bilinear(std::span<const Element> gen_products, Element x, Element y) const noexcept {
    const std::size_t k = rank();
    Element acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto xi = coeff(x, i);
      if (xi == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const auto yj = coeff(y, j);
        if (yj == 0) continue;
        acc = add(acc, scale(std::uint64_t{xi} * yj, gen_products[i * k + j]));
      }
    }
    return acc;
  }

  /// Full multiplication table induced by the generator products.
  std::vector<Element> mul_table(std::span<const Element> gen_products) const {
    std::vector<Element> mul(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x) {
      for (std::size_t y = 0; y < order_; ++y) {
        mul[x * order_ + y] =
            bilinear(gen_products, static_cast<Element>(x), static_cast<Element>(y));
      }
    }
    return mul;
  }

  /// All automorphisms, each as the image permutation of element indices.
  std::vector<std::vector<Element>> automorphisms() const {
    const std::size_t k = rank();
    std::vector<std::vector<Element>> choices(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t x = 0; x < order_; ++x) {
        if (moduli_[i] % orders_[x] == 0) choices[i].push_back(static_cast<Element>(x));
      }
    }
    std::vector<std::vector<Element>> out;
    std::vector<Element> images(k, 0);
    std::vector<Element> perm(order_);
    std::vector<bool> seen(order_);
    auto emit = [&] {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t x = 0; x < order_; ++x) {
        Element acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc = add(acc, scale(coeff(static_cast<Element>(x), i), images[i]));
        if (seen[acc]) return;
        seen[acc] = true;
        perm[x] = acc;
      }
      out.push_back(perm);
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        emit();
        return;
      }
      for (Element h : choices[i]) {
        images[i] = h;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

 private:
  std::vector<std::uint64_t> moduli_;
  std::size_t order_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<std::size_t> place_;
  std::vector<std::uint32_t> coeffs_;
  std::vector<Element> add_;
  std::vector<Element> smul_;
  std::vector<std::uint64_t> orders_;
};

}  // namespace ringcent
