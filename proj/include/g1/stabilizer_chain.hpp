#pragma once

// Deterministic Schreier-Sims: base and strong generating set for a
// permutation group given by generators.

#include "g1/arith.hpp"
#include "g1/errors.hpp"
#include "g1/permutation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace g1 {

class StabilizerChain {
public:
  /// Builds the chain. If `order_cap` is nonzero and the group order is
  /// provably larger, throws ResourceBoundError as soon as that is known.
  StabilizerChain(std::size_t degree, const std::vector<Permutation> &gens,
                  const BigInt &order_cap = 0)
      : degree_(degree) {
    std::vector<Permutation> strong;
    for (const auto &g : gens)
      if (!g.is_identity())
        strong.push_back(g);
    for (const auto &g : strong) {
      bool fixes_all = true;
      for (const auto &lv : levels_)
        if (g[lv.base_point] != lv.base_point)
          fixes_all = false;
      if (fixes_all)
        push_level(first_moved(g));
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto &g : strong) {
        bool fixes_prefix = true;
        for (std::size_t l = 0; l < i; ++l)
          if (g[levels_[l].base_point] != levels_[l].base_point)
            fixes_prefix = false;
        if (fixes_prefix)
          levels_[i].gens.push_back(g);
      }
      rebuild_orbit(i);
    }
    check_cap(order_cap);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      auto lvl = static_cast<std::size_t>(i);
      auto jump = schreier_pass(lvl);
      if (jump) {
        check_cap(order_cap);
        i = static_cast<std::ptrdiff_t>(*jump);
      } else {
        --i;
      }
    }
  }

  std::size_t degree() const { return degree_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto &lv : levels_)
      b.push_back(lv.base_point);
    return b;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto &lv : levels_)
      o *= lv.orbit.size();
    return o;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> out;
    for (const auto &lv : levels_)
      out.push_back(lv.orbit.size());
    return out;
  }

  bool contains(const Permutation &g) const {
    if (g.degree() != degree_)
      return false;
    auto [residue, level] = strip(g, 0);
    return level == levels_.size() && residue.is_identity();
  }

private:
  struct Level {
    Point base_point;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;                   // point -> index in transversal
    std::vector<Permutation> transversal;    // u_b maps base_point to b
    std::vector<Permutation> inv_transversal;
  };

  static Point first_moved(const Permutation &g) {
    for (std::size_t x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return static_cast<Point>(x);
    throw std::logic_error("StabilizerChain: identity has no moved point");
  }

  void push_level(Point b) {
    Level lv;
    lv.base_point = b;
    levels_.push_back(std::move(lv));
    rebuild_orbit(levels_.size() - 1);
  }

  void rebuild_orbit(std::size_t i) {
    Level &lv = levels_[i];
    lv.orbit.assign(1, lv.base_point);
    lv.slot.assign(degree_, -1);
    lv.transversal.assign(1, Permutation::identity(degree_));
    lv.slot[lv.base_point] = 0;
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      Point b = lv.orbit[k];
      for (const auto &s : lv.gens) {
        Point c = s[b];
        if (lv.slot[c] >= 0)
          continue;
        lv.slot[c] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(c);
        lv.transversal.push_back(lv.transversal[k] * s);
      }
    }
    lv.inv_transversal.clear();
    for (const auto &u : lv.transversal)
      lv.inv_transversal.push_back(u.inverse());
  }

  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Level &lv = levels_[l];
      int k = lv.slot[g[lv.base_point]];
      if (k < 0)
        return {std::move(g), l};
      g = g * lv.inv_transversal[static_cast<std::size_t>(k)];
    }
    return {std::move(g), levels_.size()};
  }

  /// Sifts all Schreier generators of level i. On the first one that does
  /// not sift, extends the chain and returns the level to resume from.
  std::optional<std::size_t> schreier_pass(std::size_t i) {
    const std::size_t norbit = levels_[i].orbit.size();
    const std::size_t ngens = levels_[i].gens.size();
    for (std::size_t k = 0; k < norbit; ++k) {
      for (std::size_t s = 0; s < ngens; ++s) {
        const Level &lv = levels_[i];
        Permutation us = lv.transversal[k] * lv.gens[s];
        int target = lv.slot[us[lv.base_point]];
        const Permutation &ut = lv.transversal[static_cast<std::size_t>(target)];
        if (us == ut)
          continue;
        Permutation h = us * lv.inv_transversal[static_cast<std::size_t>(target)];
        auto [residue, j] = strip(std::move(h), i + 1);
        if (j == levels_.size()) {
          if (residue.is_identity())
            continue;
          push_level(first_moved(residue));
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(l);
        }
        return j;
      }
    }
    return std::nullopt;
  }

  void check_cap(const BigInt &cap) const {
    if (cap == 0)
      return;
    BigInt lower = order();
    if (lower > cap)
      throw ResourceBoundError("group order exceeds the hard safety cap of " +
                                   cap.str(),
                               ">= " + lower.str());
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace g1
