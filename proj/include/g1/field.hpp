#pragma once

// Small finite fields GF(p^k), q <= 32, as residues modulo a fixed
// irreducible polynomial. Element e encodes the coefficient vector of
// c_0 + c_1 x + ... read as the base-p integer sum c_j p^j.

#include "g1/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

class FieldSpec {
public:
  /// Builds GF(q) for a supported prime power q <= 32 and verifies that the
  /// modulus is irreducible and the multiplicative group is cyclic.
  explicit FieldSpec(unsigned q) : q_(q) {
    auto f = q >= 2 ? factorize(q) : decltype(factorize(1)){};
    if (f.size() != 1)
      throw std::invalid_argument("GF(" + std::to_string(q) +
                                  "): q must be a prime power");
    p_ = static_cast<unsigned>(f[0].first);
    k_ = f[0].second;
    modulus_ = modulus_for(q);
    if (!modulus_irreducible())
      throw std::logic_error("GF(" + std::to_string(q) +
                             "): modulus is reducible");
    build_tables();
    generator_ = find_generator();
  }

  static bool supported(unsigned q) {
    try {
      (void)modulus_for(q);
      return true;
    } catch (const std::invalid_argument &) {
      return false;
    }
  }

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Monic modulus coefficients, constant term first.
  const std::vector<unsigned> &modulus() const { return modulus_; }
  unsigned primitive_element() const { return generator_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const {
    if (a == 0)
      throw std::domain_error("GF: inverse of zero");
    return inv_[a];
  }
  /// The additive basis 1, x, ..., x^{k-1}.
  std::vector<unsigned> additive_basis() const {
    std::vector<unsigned> b;
    unsigned v = 1;
    for (unsigned j = 0; j < k_; ++j, v *= p_)
      b.push_back(v);
    return b;
  }

private:
  static std::vector<unsigned> modulus_for(unsigned q) {
    switch (q) {
    case 4: return {1, 1, 1};          // x^2 + x + 1
    case 8: return {1, 1, 0, 1};       // x^3 + x + 1
    case 16: return {1, 1, 0, 0, 1};   // x^4 + x + 1
    case 32: return {1, 0, 1, 0, 0, 1}; // x^5 + x^2 + 1
    case 9: return {1, 0, 1};          // x^2 + 1
    case 27: return {1, 2, 0, 1};      // x^3 + 2x + 1
    case 25: return {2, 0, 1};         // x^2 + 2
    default:
      if (q <= 32 && is_prime(q))
        return {0, 1}; // x
      throw std::invalid_argument("GF(" + std::to_string(q) +
                                  ") is not supported");
    }
  }

  std::vector<unsigned> digits(unsigned e, unsigned len) const {
    std::vector<unsigned> d(len, 0);
    for (unsigned j = 0; j < len && e; ++j, e /= p_)
      d[j] = e % p_;
    return d;
  }

  /// Remainder of `a` modulo the monic polynomial `m` over GF(p).
  std::vector<unsigned> poly_mod(std::vector<unsigned> a,
                                 const std::vector<unsigned> &m) const {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      unsigned c = a[i] % p_;
      if (c == 0)
        continue;
      for (std::size_t j = 0; j <= dm; ++j)
        a[i - dm + j] = (a[i - dm + j] + p_ * p_ - c * m[j] % p_) % p_;
    }
    a.resize(dm);
    for (auto &c : a)
      c %= p_;
    return a;
  }

  /// No monic factor of degree 1..k/2.
  bool modulus_irreducible() const {
    if (k_ == 1)
      return true;
    for (unsigned d = 1; d <= k_ / 2; ++d) {
      unsigned count = 1;
      for (unsigned j = 0; j < d; ++j)
        count *= p_;
      for (unsigned low = 0; low < count; ++low) {
        auto f = digits(low, d);
        f.push_back(1);
        auto r = poly_mod(modulus_, f);
        bool zero = true;
        for (auto c : r)
          zero = zero && c == 0;
        if (zero)
          return false;
      }
    }
    return true;
  }

  unsigned encode(const std::vector<unsigned> &d) const {
    unsigned e = 0;
    for (std::size_t j = d.size(); j-- > 0;)
      e = e * p_ + d[j];
    return e;
  }

  void build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto da = digits(a, k_);
      std::vector<unsigned> dn(k_);
      for (unsigned j = 0; j < k_; ++j)
        dn[j] = (p_ - da[j]) % p_;
      neg_[a] = encode(dn);
      for (unsigned b = 0; b < q_; ++b) {
        auto db = digits(b, k_);
        std::vector<unsigned> s(k_);
        for (unsigned j = 0; j < k_; ++j)
          s[j] = (da[j] + db[j]) % p_;
        add_[a * q_ + b] = encode(s);
        std::vector<unsigned> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
          for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        mul_[a * q_ + b] = encode(poly_mod(prod, modulus_));
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul(a, b) == 1)
          inv_[a] = b;
    for (unsigned a = 1; a < q_; ++a)
      if (inv_[a] == 0)
        throw std::logic_error("GF: element without inverse");
  }

  unsigned find_generator() const {
    for (unsigned g = 1; g < q_; ++g) {
      unsigned x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q_ - 1)
        return g;
    }
    throw std::logic_error("GF: multiplicative group is not cyclic");
  }

  unsigned q_, p_ = 0, k_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned generator_ = 0;
};

} // namespace g1
