#pragma once

// Exact integer and rational arithmetic, plus the small number-theoretic
// functions used throughout: divisor sums, Euler's totient and Gaussian
// binomial coefficients at base 2.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {} // NOLINT(implicit)
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }
  static Rational from_int(const BigInt &n) { return Rational(n, BigInt(1)); }

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational operator-() const { return {-num_, den_}; }
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
      return std::strong_ordering::less;
    if (lhs > rhs)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den"; integers still carry the "/1".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Decimal rendering truncated (toward zero) to `digits` places. Display
  /// only; never feed it back into a comparison.
  std::string decimal(unsigned digits = 6) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i)
      scale *= 10;
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    BigInt scaled = (a * scale) / den_;
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string f = frac.str();
    if (f.size() < digits)
      f.insert(0, digits - f.size(), '0');
    std::string out = (num_ < 0 && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0)
      out += "." + f;
    return out;
  }

  /// Parses "a/b" or "a".
  static Rational parse(const std::string &text) {
    auto slash = text.find('/');
    auto to_int = [&](const std::string &s) {
      if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos ||
          s.find('-', 1) != std::string::npos || s == "-")
        throw std::invalid_argument("not a rational number: '" + text + "'");
      return BigInt(s);
    };
    if (slash == std::string::npos)
      return from_int(to_int(text));
    return {to_int(text.substr(0, slash)), to_int(text.substr(slash + 1))};
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::strong_ordering rational_compare(const Rational &a,
                                             const Rational &b) {
  return a <=> b;
}

// ---------------------------------------------------------------------------
// Number theory on machine integers. Inputs are group and element orders.

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>>
factorize(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

/// True iff n = p^e for a prime p and e >= 1.
inline bool is_prime_power(std::uint64_t n) {
  return n >= 2 && factorize(n).size() == 1;
}

/// All positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  if (n == 0)
    throw std::invalid_argument("divisors: n must be positive");
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    small.push_back(d);
    if (d != n / d)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("divisor_sum: n must be positive");
  std::uint64_t total = 1;
  for (auto [p, e] : factorize(n)) {
    std::uint64_t term = 1, pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      term += pk;
    }
    total *= term;
  }
  return total;
}

inline std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("euler_totient: n must be positive");
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n))
    result = result / p * (p - 1);
  return result;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  return a / gcd(a, b) * b;
}

/// Number of i-dimensional subspaces of GF(2)^p:
///   (2^p-1)...(2-1) / [(2^i-1)...(2-1) (2^{p-i}-1)...(2-1)].
/// Built as a running quotient that is integral after every step.
inline BigInt gaussian_binomial(unsigned p, unsigned i) {
  if (i > p)
    throw std::invalid_argument("gaussian_binomial: i must not exceed p");
  // prod_{j=0}^{i-1} (2^{p-j} - 1) / (2^{j+1} - 1); after step j the partial
  // product equals binom(p, j+1)_2.
  BigInt value = 1;
  for (unsigned j = 0; j < i; ++j) {
    BigInt top = (BigInt(1) << (p - j)) - 1;
    BigInt bottom = (BigInt(1) << (j + 1)) - 1;
    value *= top;
    if (value % bottom != 0)
      throw std::logic_error("gaussian_binomial: non-integral partial product");
    value /= bottom;
  }
  return value;
}

} // namespace g1
