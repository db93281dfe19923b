#pragma once

// Permutation groups with a two-tier representation: a stabilizer chain for
// the order at any size, and (below the enumeration bound) a dense element
// table in which every element has a stable index. Subgroups are ElementSets
// over that table.

#include "g1/bitset.hpp"
#include "g1/errors.hpp"
#include "g1/permutation.hpp"
#include "g1/stabilizer_chain.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationBound = 10000;
inline constexpr std::uint64_t kDefaultOrderCap = 1000000000;

/// Enumeration bound, honouring the G1_MAX_ORDER environment override.
inline std::uint64_t default_enumeration_bound() {
  if (const char *env = std::getenv("G1_MAX_ORDER")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultEnumerationBound;
}

struct GroupOptions {
  std::uint64_t enumeration_bound = default_enumeration_bound();
  std::uint64_t order_cap = kDefaultOrderCap;
};

class PermGroup {
  struct Data;

public:
  /// Order via Schreier-Sims; element table by breadth-first closure from
  /// the generators when the order is within the enumeration bound. Index 0
  /// is the identity and indices follow discovery order.
  static PermGroup from_generators(std::size_t degree,
                                   std::vector<Permutation> gens,
                                   const GroupOptions &opts = {}) {
    if (degree == 0)
      throw std::invalid_argument("group degree must be positive");
    if (degree > 65535)
      throw std::invalid_argument("group degree too large");
    for (const auto &g : gens)
      if (g.degree() != degree)
        throw std::invalid_argument(
            "generator " + g.to_cycle_string() + " has degree " +
            std::to_string(g.degree()) + ", expected " + std::to_string(degree));

    auto d = std::make_shared<Data>(degree, gens, BigInt(opts.order_cap));
    BigInt order = d->chain.order();
    d->order = static_cast<std::uint64_t>(order);
    if (d->order <= opts.enumeration_bound)
      d->build_table();
    return PermGroup(std::move(d));
  }

  std::size_t degree() const { return d_->degree; }
  const std::vector<Permutation> &generators() const { return d_->gens; }
  std::uint64_t order() const { return d_->order; }
  const StabilizerChain &chain() const { return d_->chain; }
  bool has_table() const { return d_->has_table; }

  /// Throws ResourceBoundError unless the element table exists.
  void require_table(const char *what) const {
    if (!has_table())
      throw ResourceBoundError(std::string(what) +
                                   ": group order exceeds the enumeration bound",
                               std::to_string(order()));
  }

  std::size_t size() const { return d_->order; }
  std::span<const Point> images(Elem e) const {
    return {d_->images.data() + std::size_t{e} * d_->degree, d_->degree};
  }
  Permutation element(Elem e) const {
    auto im = images(e);
    return Permutation(std::vector<Point>(im.begin(), im.end()));
  }

  Elem mul(Elem a, Elem b) const {
    const Data &d = *d_;
    std::array<Point, kMaxBase> key{};
    const Point *ia = d.images.data() + std::size_t{a} * d.degree;
    const Point *ib = d.images.data() + std::size_t{b} * d.degree;
    for (std::size_t i = 0; i < d.base.size(); ++i)
      key[i] = ib[ia[d.base[i]]];
    return d.lookup_base_images(key.data());
  }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  /// x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  std::uint64_t order_of(Elem e) const { return d_->elem_order[e]; }
  static constexpr Elem identity() { return 0; }

  std::optional<Elem> index_of(const Permutation &p) const {
    if (!has_table() || p.degree() != degree())
      return std::nullopt;
    std::array<Point, kMaxBase> key{};
    for (std::size_t i = 0; i < d_->base.size(); ++i)
      key[i] = p[d_->base[i]];
    auto e = d_->find_base_images(key.data());
    if (!e)
      return std::nullopt;
    auto im = images(*e);
    if (!std::equal(im.begin(), im.end(), p.images().begin()))
      return std::nullopt;
    return e;
  }

  /// Table indices of the generators (table required).
  const std::vector<Elem> &generator_indices() const { return d_->gen_index; }

  /// x -> g^-1 x g over the whole table.
  std::vector<Elem> conjugation_map(Elem g) const {
    std::vector<Elem> m(size());
    for (Elem x = 0; x < size(); ++x)
      m[x] = conj(x, g);
    return m;
  }

  bool same_group(const PermGroup &o) const { return d_ == o.d_; }

private:
  static constexpr std::size_t kMaxBase = 64;

  struct Data {
    Data(std::size_t deg, std::vector<Permutation> g, const BigInt &cap)
        : degree(deg), gens(std::move(g)), chain(deg, gens, cap) {}

    std::size_t degree;
    std::vector<Permutation> gens;
    StabilizerChain chain;
    std::uint64_t order = 0;
    bool has_table = false;
    std::vector<Point> base;
    std::vector<Point> images;
    std::vector<Elem> inverse;
    std::vector<std::uint64_t> elem_order;
    std::vector<Elem> gen_index;
    std::vector<Elem> slots; // open addressing, stores index + 1
    std::size_t mask = 0;

    std::size_t hash_key(const Point *key) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::size_t i = 0; i < base.size(); ++i) {
        h ^= key[i];
        h *= 1099511628211ull;
      }
      h ^= h >> 29;
      return static_cast<std::size_t>(h);
    }
    bool key_matches(Elem e, const Point *key) const {
      const Point *im = images.data() + std::size_t{e} * degree;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (im[base[i]] != key[i])
          return false;
      return true;
    }
    std::optional<Elem> find_base_images(const Point *key) const {
      for (std::size_t s = hash_key(key) & mask;; s = (s + 1) & mask) {
        Elem v = slots[s];
        if (v == 0)
          return std::nullopt;
        if (key_matches(v - 1, key))
          return v - 1;
      }
    }
    Elem lookup_base_images(const Point *key) const {
      for (std::size_t s = hash_key(key) & mask;; s = (s + 1) & mask) {
        Elem v = slots[s];
        if (v != 0 && key_matches(v - 1, key))
          return v - 1;
        if (v == 0)
          throw std::logic_error("element table lookup of a non-member");
      }
    }
    void insert(Elem e) {
      std::array<Point, kMaxBase> key{};
      const Point *im = images.data() + std::size_t{e} * degree;
      for (std::size_t i = 0; i < base.size(); ++i)
        key[i] = im[base[i]];
      std::size_t s = hash_key(key.data()) & mask;
      while (slots[s] != 0)
        s = (s + 1) & mask;
      slots[s] = e + 1;
    }

    void build_table() {
      base = chain.base();
      if (base.size() > kMaxBase)
        throw std::logic_error("stabilizer chain base too long for table");
      std::size_t cap = 16;
      while (cap < 2 * order)
        cap <<= 1;
      slots.assign(cap, 0);
      mask = cap - 1;
      images.reserve(order * degree);

      auto add = [&](std::span<const Point> im) {
        images.insert(images.end(), im.begin(), im.end());
        Elem e = static_cast<Elem>(images.size() / degree - 1);
        insert(e);
        return e;
      };
      Permutation id = Permutation::identity(degree);
      add(id.images());
      std::vector<Point> buf(degree);
      std::array<Point, kMaxBase> key{};
      for (std::size_t e = 0; e < images.size() / degree; ++e) {
        for (const auto &s : gens) {
          for (std::size_t x = 0; x < degree; ++x)
            buf[x] = s[images[e * degree + x]];
          for (std::size_t i = 0; i < base.size(); ++i)
            key[i] = buf[base[i]];
          if (!find_base_images(key.data()))
            add(buf);
        }
      }
      if (images.size() / degree != order)
        throw std::logic_error("element closure disagrees with chain order");

      inverse.resize(order);
      elem_order.resize(order);
      for (Elem e = 0; e < order; ++e) {
        const Point *im = images.data() + std::size_t{e} * degree;
        for (std::size_t i = 0; i < base.size(); ++i) {
          // inverse maps im[x] -> x; base images of the inverse.
          Point b = base[i];
          Point x = 0;
          while (im[x] != b)
            ++x;
          key[i] = x;
        }
        inverse[e] = lookup_base_images(key.data());
        std::vector<Point> v(im, im + degree);
        elem_order[e] = element_order(Permutation(std::move(v)));
      }
      for (const auto &s : gens) {
        for (std::size_t i = 0; i < base.size(); ++i)
          key[i] = s[base[i]];
        gen_index.push_back(lookup_base_images(key.data()));
      }
      has_table = true;
    }
  };

  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup of a tabled PermGroup: membership bits plus a generating set.
class ElementSet {
public:
  /// Trusted constructor: `bits` must be the subgroup generated by `gens`.
  ElementSet(PermGroup group, Bitset bits, std::vector<Elem> gens)
      : group_(std::move(group)), bits_(std::move(bits)),
        gens_(std::move(gens)), size_(bits_.count()) {
    if (group_.order() % size_ != 0)
      throw std::logic_error("ElementSet: size does not divide group order");
  }

  const PermGroup &group() const { return group_; }
  const Bitset &bits() const { return bits_; }
  const std::vector<Elem> &generators() const { return gens_; }
  std::size_t size() const { return size_; }
  bool contains(Elem e) const { return bits_.test(e); }
  std::vector<Elem> members() const { return bits_.members(); }
  bool is_trivial() const { return size_ == 1; }
  bool is_whole() const { return size_ == group_.order(); }
  bool is_subset_of(const ElementSet &o) const {
    return bits_.is_subset_of(o.bits_);
  }

  friend bool operator==(const ElementSet &a, const ElementSet &b) {
    return a.group_.same_group(b.group_) && a.bits_ == b.bits_;
  }

private:
  PermGroup group_;
  Bitset bits_;
  std::vector<Elem> gens_;
  std::size_t size_;
};

inline ElementSet trivial_subgroup(const PermGroup &g) {
  g.require_table("trivial_subgroup");
  Bitset b(g.size());
  b.set(0);
  return ElementSet(g, std::move(b), {});
}

/// <H, z> by Dimino's coset-wise closure.
inline ElementSet extend_subgroup(const ElementSet &h, Elem z) {
  if (h.contains(z))
    return h;
  const PermGroup &g = h.group();
  Bitset bits = h.bits();
  std::vector<Elem> members = h.members();
  std::vector<Elem> gens = h.generators();
  gens.push_back(z);
  std::vector<Elem> reps{PermGroup::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Elem s : gens) {
      Elem x = g.mul(reps[r], s);
      if (bits.test(x))
        continue;
      for (Elem m : members)
        bits.set(g.mul(m, x));
      reps.push_back(x);
    }
  }
  return ElementSet(g, std::move(bits), std::move(gens));
}

/// Smallest subgroup containing the given element indices.
inline ElementSet subgroup_generated(const PermGroup &g,
                                     std::span<const Elem> seed) {
  g.require_table("subgroup_generated");
  ElementSet h = trivial_subgroup(g);
  for (Elem e : seed) {
    if (e >= g.size())
      throw std::out_of_range("subgroup_generated: element index " +
                              std::to_string(e) + " out of range");
    h = extend_subgroup(h, e);
  }
  return h;
}

inline ElementSet whole_group(const PermGroup &g) {
  return subgroup_generated(g, g.generator_indices());
}

/// Validates that `bits` is a subgroup and returns it with a small
/// generating set; throws std::invalid_argument otherwise.
inline ElementSet subgroup_from_bits(const PermGroup &g, const Bitset &bits) {
  g.require_table("subgroup_from_bits");
  if (bits.size() != g.size() || !bits.test(0))
    throw std::invalid_argument("subgroup_from_bits: not a subgroup");
  ElementSet h = trivial_subgroup(g);
  bool ok = true;
  bits.for_each([&](std::size_t e) {
    if (ok && !h.contains(static_cast<Elem>(e))) {
      h = extend_subgroup(h, static_cast<Elem>(e));
      if (!h.bits().is_subset_of(bits))
        ok = false;
    }
  });
  if (!ok || !(h.bits() == bits))
    throw std::invalid_argument("subgroup_from_bits: set is not closed");
  return h;
}

inline ElementSet intersection(const ElementSet &a, const ElementSet &b) {
  Bitset bits = a.bits();
  bits &= b.bits();
  return subgroup_from_bits(a.group(), bits);
}

inline bool is_abelian(const ElementSet &h) {
  const auto &g = h.group();
  const auto &gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
        return false;
  return true;
}

/// True iff x^{-1} n x lies in N for every generator n of N and x of `by`.
inline std::optional<Elem> find_non_normalizing(const ElementSet &n,
                                                std::span<const Elem> by) {
  const auto &g = n.group();
  for (Elem x : by)
    for (Elem m : n.generators())
      if (!n.contains(g.conj(m, x)))
        return x;
  return std::nullopt;
}

inline bool is_normal_in(const ElementSet &n, const ElementSet &k) {
  return !find_non_normalizing(n, k.generators());
}

/// Normal closure of `seed` in the subgroup `within`.
inline ElementSet normal_closure(const ElementSet &within,
                                 std::span<const Elem> seed) {
  const auto &g = within.group();
  ElementSet n = subgroup_generated(g, seed);
  for (;;) {
    bool grew = false;
    for (Elem x : within.generators()) {
      for (Elem m : std::vector<Elem>(n.generators())) {
        Elem c = g.conj(m, x);
        if (!n.contains(c)) {
          n = extend_subgroup(n, c);
          grew = true;
        }
      }
    }
    if (!grew)
      return n;
  }
}

/// [A, B] = < a^-1 b^-1 a b >, computed as the normal closure in <A, B> of
/// the commutators of generators.
inline ElementSet commutator_subgroup(const ElementSet &a,
                                      const ElementSet &b) {
  const auto &g = a.group();
  std::vector<Elem> comms;
  for (Elem x : a.generators())
    for (Elem y : b.generators())
      comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  ElementSet ab = a;
  for (Elem y : b.generators())
    ab = extend_subgroup(ab, y);
  return normal_closure(ab, comms);
}

inline std::vector<ElementSet> derived_series(const PermGroup &g) {
  g.require_table("derived_series");
  std::vector<ElementSet> series{whole_group(g)};
  for (;;) {
    ElementSet next = commutator_subgroup(series.back(), series.back());
    if (next.size() == series.back().size())
      return series;
    series.push_back(std::move(next));
  }
}

inline std::vector<ElementSet> lower_central_series(const PermGroup &g) {
  g.require_table("lower_central_series");
  ElementSet whole = whole_group(g);
  std::vector<ElementSet> series{whole};
  for (;;) {
    ElementSet next = commutator_subgroup(whole, series.back());
    if (next.size() == series.back().size())
      return series;
    series.push_back(std::move(next));
  }
}

inline bool is_solvable(const PermGroup &g) {
  return derived_series(g).back().is_trivial();
}

inline bool is_nilpotent(const PermGroup &g) {
  return lower_central_series(g).back().is_trivial();
}

/// H as a permutation group in its own right (same points).
inline PermGroup subgroup_as_group(const ElementSet &h,
                                   const GroupOptions &opts = {}) {
  std::vector<Permutation> gens;
  for (Elem e : h.generators())
    gens.push_back(h.group().element(e));
  return PermGroup::from_generators(h.group().degree(), std::move(gens), opts);
}

/// G acting on the right cosets of a normal subgroup N.
inline PermGroup quotient_group(const PermGroup &g, const ElementSet &n,
                                const GroupOptions &opts = {}) {
  g.require_table("quotient_group");
  if (!n.group().same_group(g))
    throw std::invalid_argument("quotient_group: N is not a subgroup of G");
  if (auto x = find_non_normalizing(n, g.generator_indices()))
    throw std::invalid_argument("quotient_group: subgroup is not normal; "
                                "conjugating by " +
                                g.element(*x).to_cycle_string() +
                                " leaves it");
  // Right cosets of the trivial group are singletons: the coset action is the
  // regular representation, so G itself is returned instead.
  if (n.is_trivial())
    return g;
  std::vector<int> label(g.size(), -1);
  std::vector<Elem> reps;
  std::vector<Elem> members = n.members();
  for (Elem x = 0; x < g.size(); ++x) {
    if (label[x] >= 0)
      continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem m : members)
      label[g.mul(m, x)] = id;
  }
  std::size_t index = reps.size();
  std::vector<Permutation> gens;
  for (Elem s : g.generator_indices()) {
    std::vector<Point> im(index);
    for (std::size_t c = 0; c < index; ++c)
      im[c] = static_cast<Point>(label[g.mul(reps[c], s)]);
    gens.emplace_back(std::move(im));
  }
  PermGroup q = PermGroup::from_generators(index, std::move(gens), opts);
  if (q.order() * n.size() != g.order())
    throw std::logic_error("quotient_group: coset action is not faithful");
  return q;
}

/// Conjugacy classes of elements, each sorted, ordered by least member.
inline std::vector<std::vector<Elem>>
conjugacy_classes_of_elements(const PermGroup &g) {
  g.require_table("conjugacy_classes_of_elements");
  std::vector<std::vector<Elem>> maps;
  for (Elem s : g.generator_indices())
    maps.push_back(g.conjugation_map(s));
  std::vector<bool> seen(g.size(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.size(); ++x) {
    if (seen[x])
      continue;
    std::vector<Elem> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto &m : maps) {
        Elem y = m[cls[i]];
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace g1
