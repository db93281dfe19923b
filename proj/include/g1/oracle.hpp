#pragma once

// Exhaustive subgroup search used to cross-check lattice enumeration on tiny
// groups. Deliberately shares nothing with the lattice code path: products
// come from a Cayley table built by composing raw permutations and looking
// them up in an ordered map.

#include "g1/bitset.hpp"
#include "g1/perm_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace g1::oracle {

/// Cayley table of the tabled group G, indexed like G's element table.
inline std::vector<std::vector<Elem>> cayley_table(const PermGroup &g) {
  g.require_table("cayley_table");
  std::map<std::vector<Point>, Elem> index;
  std::vector<Permutation> elems;
  for (Elem e = 0; e < g.size(); ++e) {
    elems.push_back(g.element(e));
    auto im = elems.back().images();
    index.emplace(std::vector<Point>(im.begin(), im.end()), e);
  }
  std::vector<std::vector<Elem>> t(g.size(), std::vector<Elem>(g.size()));
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b) {
      const Permutation ab = elems[a] * elems[b];
      auto im = ab.images();
      t[a][b] = index.at(std::vector<Point>(im.begin(), im.end()));
    }
  return t;
}

/// All subgroups, as membership vectors sorted by size then lexicographically.
/// Walks the binary decision tree "is element x in H?" over elements in index
/// order; a branch dies as soon as the closure of the chosen elements hits an
/// element already decided to be absent. Every leaf is a distinct subgroup.
inline std::vector<Bitset> all_subgroups(const PermGroup &g,
                                         std::size_t max_order = 64) {
  if (g.order() > max_order)
    throw std::invalid_argument("oracle::all_subgroups: group too large");
  const auto table = cayley_table(g);
  const std::size_t n = g.size();
  std::vector<Bitset> out;

  auto close = [&](std::vector<bool> in) {
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n && in[a]; ++b)
          if (in[b] && !in[table[a][b]]) {
            in[table[a][b]] = true;
            grew = true;
          }
    }
    return in;
  };

  // excluded[x]: x was decided to lie outside H.
  auto recurse = [&](auto &self, std::size_t from, const std::vector<bool> &in,
                     std::vector<bool> &excluded) -> void {
    std::size_t x = from;
    while (x < n && in[x])
      ++x;
    if (x == n) {
      Bitset b(n);
      for (std::size_t i = 0; i < n; ++i)
        if (in[i])
          b.set(i);
      out.push_back(std::move(b));
      return;
    }
    excluded[x] = true;
    self(self, x + 1, in, excluded);
    excluded[x] = false;

    std::vector<bool> with = in;
    with[x] = true;
    with = close(std::move(with));
    for (std::size_t i = 0; i < n; ++i)
      if (with[i] && excluded[i])
        return;
    self(self, x + 1, with, excluded);
  };

  std::vector<bool> start(n, false);
  start[0] = true;
  std::vector<bool> excluded(n, false);
  recurse(recurse, 1, start, excluded);

  std::sort(out.begin(), out.end(), [](const Bitset &a, const Bitset &b) {
    if (a.count() != b.count())
      return a.count() < b.count();
    return lex_less(a, b);
  });
  return out;
}

} // namespace g1::oracle
