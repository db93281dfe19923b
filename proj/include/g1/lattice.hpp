#pragma once

// Complete subgroup lattices of tabled permutation groups.
//
// Enumeration works up to conjugacy. Starting from the trivial subgroup, each
// class representative H is joined with every cyclic subgroup of prime-power
// order not already inside H; every new join contributes its whole
// conjugacy class. Since each subgroup is generated by elements of
// prime-power order, and a conjugate of <H, z> is <H^g, z^g>, the fixpoint is
// the full lattice.

#include "g1/arith.hpp"
#include "g1/bitset.hpp"
#include "g1/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace g1 {

class Lattice {
public:
  struct Entry {
    Bitset bits;
    std::vector<Elem> gens;
    std::size_t order = 0;
    std::size_t class_id = 0;
    bool normal = false;
    bool maximal = false;
    bool cyclic = false;
    bool abelian = false;
    bool elementary_abelian = false;
  };

  const PermGroup &group() const { return group_; }
  std::size_t size() const { return entries_.size(); }
  const Entry &entry(std::size_t i) const { return entries_[i]; }
  const std::vector<Entry> &entries() const { return entries_; }

  ElementSet subgroup(std::size_t i) const {
    return ElementSet(group_, entries_[i].bits, entries_[i].gens);
  }
  std::size_t order(std::size_t i) const { return entries_[i].order; }
  bool is_normal(std::size_t i) const { return entries_[i].normal; }
  bool is_maximal(std::size_t i) const { return entries_[i].maximal; }
  bool is_cyclic(std::size_t i) const { return entries_[i].cyclic; }
  bool is_abelian(std::size_t i) const { return entries_[i].abelian; }
  bool is_elementary_abelian(std::size_t i) const {
    return entries_[i].elementary_abelian;
  }

  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return entries_.size() - 1; }

  /// Subgroup `inner` is contained in subgroup `outer`.
  bool includes(std::size_t outer, std::size_t inner) const {
    return entries_[inner].bits.is_subset_of(entries_[outer].bits);
  }

  std::optional<std::size_t> index_of(const Bitset &bits) const {
    auto it = by_hash_.find(bits.hash());
    if (it == by_hash_.end())
      return std::nullopt;
    for (std::size_t i : it->second)
      if (entries_[i].bits == bits)
        return i;
    return std::nullopt;
  }
  std::optional<std::size_t> index_of(const ElementSet &h) const {
    return index_of(h.bits());
  }

  /// Conjugacy classes of subgroups; each sorted, ordered by representative
  /// (the lexicographically least bit vector of the class).
  const std::vector<std::vector<std::size_t>> &classes() const {
    return classes_;
  }

  /// Subgroup order -> number of subgroups of that order.
  std::map<std::size_t, std::size_t> census() const {
    std::map<std::size_t, std::size_t> c;
    for (const auto &e : entries_)
      ++c[e.order];
    return c;
  }

  friend Lattice enumerate_subgroups(const PermGroup &g);

private:
  explicit Lattice(PermGroup g) : group_(std::move(g)) {}

  PermGroup group_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> classes_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

namespace detail {

class SubgroupEnumerator {
public:
  explicit SubgroupEnumerator(const PermGroup &g) : g_(g), n_(g.size()) {
    for (Elem s : g.generator_indices())
      conj_maps_.push_back(g.conjugation_map(s));
    collect_prime_power_cyclics();
  }

  struct Found {
    Bitset bits;
    std::vector<Elem> gens;
    std::size_t class_id;
  };

  std::vector<Found> run() {
    Bitset trivial(n_);
    trivial.set(0);
    add_class(std::move(trivial), {});
    for (std::size_t c = 0; c < class_reps_.size(); ++c) {
      const std::size_t r = class_reps_[c];
      const Bitset rep_bits = found_[r].bits;
      const std::vector<Elem> rep_gens = found_[r].gens;
      const std::vector<Elem> members = rep_bits.members();
      for (Elem z : prime_power_gens_) {
        if (rep_bits.test(z))
          continue;
        auto [bits, gens] = join(rep_bits, members, rep_gens, z);
        add_class(std::move(bits), std::move(gens));
      }
    }
    return std::move(found_);
  }

private:
  void collect_prime_power_cyclics() {
    std::vector<bool> covered(n_, false);
    for (Elem x = 1; x < n_; ++x) {
      if (covered[x])
        continue;
      std::uint64_t o = g_.order_of(x);
      // Mark every generator of <x> so each cyclic subgroup appears once.
      Elem p = x;
      for (std::uint64_t k = 1; k <= o; ++k) {
        if (gcd(k, o) == 1)
          covered[p] = true;
        p = g_.mul(p, x);
      }
      if (is_prime_power(o))
        prime_power_gens_.push_back(x);
    }
  }

  std::pair<Bitset, std::vector<Elem>> join(const Bitset &h_bits,
                                            const std::vector<Elem> &members,
                                            const std::vector<Elem> &h_gens,
                                            Elem z) const {
    Bitset bits = h_bits;
    std::vector<Elem> gens = h_gens;
    gens.push_back(z);
    std::vector<Elem> reps{0};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (Elem s : gens) {
        Elem x = g_.mul(reps[r], s);
        if (bits.test(x))
          continue;
        for (Elem m : members)
          bits.set(g_.mul(m, x));
        reps.push_back(x);
      }
    }
    return {std::move(bits), std::move(gens)};
  }

  std::optional<std::size_t> find(const Bitset &b) const {
    auto it = index_.find(b.hash());
    if (it == index_.end())
      return std::nullopt;
    for (std::size_t i : it->second)
      if (found_[i].bits == b)
        return i;
    return std::nullopt;
  }

  std::size_t insert(Bitset b, std::vector<Elem> gens, std::size_t cls) {
    std::size_t i = found_.size();
    index_[b.hash()].push_back(i);
    found_.push_back({std::move(b), std::move(gens), cls});
    return i;
  }

  void add_class(Bitset b, std::vector<Elem> gens) {
    if (find(b))
      return;
    const std::size_t cls = class_reps_.size();
    const std::size_t first = insert(std::move(b), std::move(gens), cls);
    class_reps_.push_back(first);
    for (std::size_t k = first; k < found_.size(); ++k) {
      for (const auto &m : conj_maps_) {
        Bitset c(n_);
        found_[k].bits.for_each([&](std::size_t x) { c.set(m[x]); });
        if (find(c))
          continue;
        std::vector<Elem> cg;
        for (Elem x : found_[k].gens)
          cg.push_back(m[x]);
        insert(std::move(c), std::move(cg), cls);
      }
    }
  }

  const PermGroup &g_;
  std::size_t n_;
  std::vector<std::vector<Elem>> conj_maps_;
  std::vector<Elem> prime_power_gens_;
  std::vector<Found> found_;
  std::vector<std::size_t> class_reps_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
};

} // namespace detail

/// The complete list of subgroups of G with conjugacy classes and flags.
/// Refuses (ResourceBoundError) when G has no element table.
inline Lattice enumerate_subgroups(const PermGroup &g) {
  g.require_table("enumerate_subgroups");
  auto found = detail::SubgroupEnumerator(g).run();

  std::vector<std::size_t> order_idx(found.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::vector<std::size_t> sizes(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    sizes[i] = found[i].bits.count();
  std::sort(order_idx.begin(), order_idx.end(), [&](auto a, auto b) {
    if (sizes[a] != sizes[b])
      return sizes[a] < sizes[b];
    return lex_less(found[a].bits, found[b].bits);
  });

  Lattice lat(g);
  lat.entries_.resize(found.size());
  std::vector<std::size_t> class_remap(found.size(), SIZE_MAX);
  std::size_t nclasses = 0;
  for (std::size_t pos = 0; pos < order_idx.size(); ++pos) {
    auto &src = found[order_idx[pos]];
    auto &e = lat.entries_[pos];
    if (class_remap[src.class_id] == SIZE_MAX)
      class_remap[src.class_id] = nclasses++;
    e.class_id = class_remap[src.class_id];
    e.order = sizes[order_idx[pos]];
    e.bits = std::move(src.bits);
    e.gens = std::move(src.gens);
    lat.by_hash_[e.bits.hash()].push_back(pos);
  }
  lat.classes_.assign(nclasses, {});
  for (std::size_t i = 0; i < lat.entries_.size(); ++i)
    lat.classes_[lat.entries_[i].class_id].push_back(i);

  const std::size_t n = g.size();
  for (const auto &cls : lat.classes_) {
    const std::size_t rep = cls.front();
    auto &r = lat.entries_[rep];
    const bool normal = cls.size() == 1;
    bool maximal = r.order < n;
    for (std::size_t k = rep + 1; maximal && k < lat.entries_.size(); ++k) {
      const auto &o = lat.entries_[k];
      if (o.order > r.order && o.order < n && o.order % r.order == 0 &&
          r.bits.is_subset_of(o.bits))
        maximal = false;
    }
    bool cyclic = false;
    std::uint64_t prime = 0;
    bool same_prime = r.order > 1;
    r.bits.for_each([&](std::size_t x) {
      std::uint64_t o = g.order_of(static_cast<Elem>(x));
      if (o == r.order)
        cyclic = true;
      if (x != 0) {
        if (prime == 0)
          prime = o;
        if (o != prime || !is_prime(o))
          same_prime = false;
      }
    });
    bool abelian = true;
    for (std::size_t a = 0; a < r.gens.size() && abelian; ++a)
      for (std::size_t b = a + 1; b < r.gens.size(); ++b)
        if (g.mul(r.gens[a], r.gens[b]) != g.mul(r.gens[b], r.gens[a])) {
          abelian = false;
          break;
        }
    for (std::size_t i : cls) {
      auto &e = lat.entries_[i];
      e.normal = normal;
      e.maximal = maximal;
      e.cyclic = cyclic;
      e.abelian = abelian;
      e.elementary_abelian = abelian && same_prime;
    }
  }
  return lat;
}

/// N_G(H) by scanning every element of G.
inline ElementSet normalizer(const PermGroup &g, const ElementSet &h) {
  g.require_table("normalizer");
  Bitset bits(g.size());
  for (Elem x = 0; x < g.size(); ++x) {
    bool stabilizes = true;
    for (Elem y : h.generators())
      if (!h.contains(g.conj(y, x))) {
        stabilizes = false;
        break;
      }
    if (stabilizes)
      bits.set(x);
  }
  return subgroup_from_bits(g, bits);
}

inline const std::vector<std::vector<std::size_t>> &
conjugacy_classes_of_subgroups(const Lattice &lat) {
  return lat.classes();
}

struct MaximalClasses {
  std::size_t k = 0;
  std::size_t k_prime = 0;
  std::vector<std::size_t> classes; // class ids, ascending
};

/// k(G) and k'(G): conjugacy classes of maximal, and of non-normal maximal,
/// subgroups.
inline MaximalClasses maximal_subgroup_classes(const Lattice &lat) {
  MaximalClasses out;
  for (std::size_t c = 0; c < lat.classes().size(); ++c) {
    std::size_t rep = lat.classes()[c].front();
    if (!lat.is_maximal(rep))
      continue;
    ++out.k;
    if (!lat.is_normal(rep))
      ++out.k_prime;
    out.classes.push_back(c);
  }
  return out;
}

/// Intersection of all maximal subgroups. The trivial group has none; its
/// Frattini subgroup is taken to be the whole (trivial) group.
inline ElementSet frattini_subgroup(const Lattice &lat) {
  const PermGroup &g = lat.group();
  Bitset bits(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    bits.set(i);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_maximal(i))
      bits &= lat.entry(i).bits;
  return subgroup_from_bits(g, bits);
}

} // namespace g1
