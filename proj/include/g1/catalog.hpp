#pragma once

// The built-in family catalog: the search domain for verification sweeps.

#include "g1/group_spec.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace g1 {

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::uint64_t order = 0;
  /// For coprime products: indices of the two factors in the catalog.
  std::vector<std::size_t> factors;
};

class Catalog {
public:
  /// C n (n <= 100), D n (even n <= 100), S n and A n (n <= 6), Q8, SL(2,3),
  /// SL(2,5), PSL(2,q) for q in {4,5,7,8,9}, then products X x Y of two base
  /// entries with coprime orders and |X||Y| <= bound. Products skip trivial
  /// factors, pairs of cyclic groups (C_a x C_b is cyclic) and factors that
  /// merely re-name another base group (S2, A3, D6, PSL(2,4), PSL(2,5),
  /// PSL(2,9), ...).
  static Catalog default_catalog(std::uint64_t bound = default_enumeration_bound()) {
    Catalog cat;
    auto add = [&](Factor f) {
      CatalogEntry e;
      e.spec.factors.push_back(f);
      e.name = render(e.spec);
      e.order = expected_order(f);
      cat.entries_.push_back(std::move(e));
    };
    for (unsigned n = 1; n <= 100; ++n)
      add(NamedGroup{Family::Cyclic, n});
    for (unsigned n = 4; n <= 100; n += 2)
      add(NamedGroup{Family::Dihedral, n});
    for (unsigned n = 1; n <= 6; ++n)
      add(NamedGroup{Family::Symmetric, n});
    for (unsigned n = 1; n <= 6; ++n)
      add(NamedGroup{Family::Alternating, n});
    add(NamedGroup{Family::Quaternion, 8});
    add(NamedGroup{Family::SL2, 3});
    add(NamedGroup{Family::SL2, 5});
    for (unsigned q : {4u, 5u, 7u, 8u, 9u})
      add(NamedGroup{Family::PSL2, q});

    static const std::set<std::string> aliases = {
        "S1", "S2", "A1", "A2", "A3", "D6", "PSL(2,4)", "PSL(2,5)", "PSL(2,9)"};
    const std::size_t nbase = cat.entries_.size();
    auto is_cyclic_entry = [&](std::size_t i) {
      const auto &f = std::get<NamedGroup>(cat.entries_[i].spec.factors[0]);
      return f.family == Family::Cyclic;
    };
    for (std::size_t a = 0; a < nbase; ++a) {
      for (std::size_t b = a + 1; b < nbase; ++b) {
        const auto &ea = cat.entries_[a];
        const auto &eb = cat.entries_[b];
        if (ea.order < 2 || eb.order < 2 || aliases.count(ea.name) ||
            aliases.count(eb.name))
          continue;
        if (is_cyclic_entry(a) && is_cyclic_entry(b))
          continue;
        if (gcd(ea.order, eb.order) != 1 || ea.order * eb.order > bound)
          continue;
        CatalogEntry e;
        e.spec.factors = {ea.spec.factors[0], eb.spec.factors[0]};
        e.name = render(e.spec);
        e.order = ea.order * eb.order;
        e.factors = {a, b};
        cat.entries_.push_back(std::move(e));
      }
    }
    return cat;
  }

  const std::vector<CatalogEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const CatalogEntry &operator[](std::size_t i) const { return entries_[i]; }

  std::optional<std::size_t> find(const std::string &name) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].name == name)
        return i;
    return std::nullopt;
  }

  /// Indices of entries with order <= max_order, in catalog order.
  std::vector<std::size_t> up_to(std::uint64_t max_order) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].order <= max_order)
        out.push_back(i);
    return out;
  }

private:
  std::vector<CatalogEntry> entries_;
};

} // namespace g1
