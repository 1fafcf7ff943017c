#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"

namespace hgroup {

/// Arithmetic in GF(p^k) for p^k <= 64.
///
/// An element is coded as sum c_i p^i with c_i the coefficient of x^i of
/// its polynomial representative. For k > 1 products are reduced modulo the
/// Conway polynomial of (p, k), so the tables are fixed and reproducible:
///   GF(4)  x^2+x+1          GF(8)  x^3+x+1          GF(16) x^4+x+1
///   GF(32) x^5+x^2+1        GF(64) x^6+x^4+x^3+x+1
///   GF(9)  x^2+2x+2         GF(27) x^3+2x+1
///   GF(25) x^2+4x+2         GF(49) x^2+6x+3
class GaloisField {
 public:
  static constexpr std::size_t kMaxSize = 64;

  GaloisField(std::size_t p, std::size_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(Errc::UnsupportedParameter, "exponent must be positive");
    q_ = 1;
    for (std::size_t i = 0; i < k; ++i) {
      q_ *= p;
      if (q_ > kMaxSize)
        throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(k) + " exceeds " +
                                        std::to_string(kMaxSize));
    }
    modulus_ = conway_polynomial(p, k);
  }

  std::size_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return k_; }
  std::size_t size() const noexcept { return q_; }
  /// Ascending coefficients of the reducing polynomial (monic, length k+1).
  const std::vector<std::size_t>& modulus() const noexcept { return modulus_; }

  std::size_t add(std::size_t u, std::size_t v) const {
    auto a = digits(u), b = digits(v);
    for (std::size_t i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
    return code(a);
  }

  std::size_t mul(std::size_t u, std::size_t v) const {
    const auto a = digits(u), b = digits(v);
    std::vector<std::size_t> prod(2 * k_ - 1, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    // Reduce from the top: x^k = -(c_0 + ... + c_{k-1} x^{k-1}).
    for (std::size_t d = prod.size(); d-- > k_;) {
      const std::size_t lead = prod[d];
      if (!lead) continue;
      prod[d] = 0;
      for (std::size_t i = 0; i < k_; ++i)
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * lead) % p_;
    }
    prod.resize(k_);
    return code(prod);
  }

  /// "0".."p-1" for prime fields; polynomial words like "2x^2+x+1" otherwise.
  std::string name(std::size_t u) const {
    if (k_ == 1) return std::to_string(u);
    const auto c = digits(u);
    std::string out;
    for (std::size_t i = k_; i-- > 0;) {
      if (!c[i]) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  static bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  static std::vector<std::size_t> conway_polynomial(std::size_t p, std::size_t k) {
    if (k == 1) return {0, 1};
    struct Entry {
      std::size_t p, k;
      std::vector<std::size_t> coeffs;
    };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},          {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 6, {1, 1, 0, 1, 1, 0, 1}}, {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},    {5, 2, {2, 4, 1}},             {7, 2, {3, 6, 1}},
    };
    for (const auto& e : table)
      if (e.p == p && e.k == k) return e.coeffs;
    throw Error(Errc::UnsupportedParameter,
                "no polynomial for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  }

  std::vector<std::size_t> digits(std::size_t u) const {
    std::vector<std::size_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i, u /= p_) d[i] = u % p_;
    return d;
  }

  std::size_t code(const std::vector<std::size_t>& d) const {
    std::size_t u = 0;
    for (std::size_t i = k_; i-- > 0;) u = u * p_ + d[i];
    return u;
  }

  std::size_t p_, k_, q_ = 1;
  std::vector<std::size_t> modulus_;
};

}  // namespace hgroup
