#pragma once

#include "g1/arith.hpp"

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)), i.e. permutations act on the right.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
  }

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point y : img_) {
      if (y >= img_.size() || seen[y])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[y] = true;
    }
  }

  /// Product of cycles given with 0-based points, applied left to right.
  static Permutation from_cycles(
      std::size_t degree,
      const std::vector<std::vector<std::size_t>> &cycles) {
    Permutation result = identity(degree);
    for (const auto &cycle : cycles) {
      Permutation c = identity(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] >= degree)
          throw std::invalid_argument("Permutation: cycle point out of range");
        for (std::size_t j = 0; j < i; ++j)
          if (cycle[j] == cycle[i])
            throw std::invalid_argument("Permutation: repeated point in cycle");
        c.img_[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
      }
      result = result * c;
    }
    return result;
  }
  static Permutation
  from_cycles(std::size_t degree,
              std::initializer_list<std::initializer_list<std::size_t>> cycles) {
    std::vector<std::vector<std::size_t>> cs;
    for (auto c : cycles)
      cs.emplace_back(c);
    return from_cycles(degree, cs);
  }

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t x) const { return img_[x]; }
  std::span<const Point> images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch in product");
    Permutation r;
    r.img_.resize(a.degree());
    for (std::size_t x = 0; x < a.degree(); ++x)
      r.img_[x] = b.img_[a.img_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      r.img_[img_[x]] = static_cast<Point>(x);
    return r;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;

  /// Disjoint cycles (0-based), each starting at its smallest point, fixed
  /// points omitted.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t x = 0; x < img_.size(); ++x) {
      if (seen[x] || img_[x] == x)
        continue;
      std::vector<std::size_t> c;
      for (std::size_t y = x; !seen[y]; y = img_[y]) {
        seen[y] = true;
        c.push_back(y);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// 1-based cycle notation, e.g. "(1 2)(3 4 5)"; identity is "()".
  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty())
      return "()";
    std::string s;
    for (const auto &c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
          s += ' ';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s;
  }

  /// Returns the permutation extended by fixed points (or shifted into a
  /// larger point set starting at `offset`).
  Permutation embedded(std::size_t new_degree, std::size_t offset) const {
    if (offset + degree() > new_degree)
      throw std::invalid_argument("Permutation: embedding does not fit");
    Permutation r = identity(new_degree);
    for (std::size_t x = 0; x < degree(); ++x)
      r.img_[offset + x] = static_cast<Point>(offset + img_[x]);
    return r;
  }

private:
  std::vector<Point> img_;
};

/// Least k >= 1 with g^k = 1: the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation &g) {
  std::uint64_t order = 1;
  for (const auto &c : g.cycles())
    order = lcm(order, c.size());
  return order;
}

} // namespace g1
