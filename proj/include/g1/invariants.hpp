#pragma once

#include "g1/arith.hpp"
#include "g1/lattice.hpp"
#include "g1/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

/// sigma_1(G) = (sum over all subgroups H of |H|) / |G|.
inline Rational sigma1(const Lattice &lat) {
  BigInt total = 0;
  for (const auto &e : lat.entries())
    total += e.order;
  return Rational(total, BigInt(lat.group().order()));
}

inline Rational sigma1(const PermGroup &g, const Lattice &lat) {
  if (!lat.group().same_group(g))
    throw std::invalid_argument("sigma1: lattice belongs to another group");
  return sigma1(lat);
}

/// Sum of subgroup orders (the numerator of sigma_1 before reduction).
inline BigInt subgroup_order_sum(const Lattice &lat) {
  BigInt total = 0;
  for (const auto &e : lat.entries())
    total += e.order;
  return total;
}

/// psi(G) = sum of element orders.
inline std::uint64_t psi(const PermGroup &g) {
  g.require_table("psi");
  std::uint64_t total = 0;
  for (Elem x = 0; x < g.size(); ++x)
    total += g.order_of(x);
  return total;
}

struct CyclicOrderSum {
  std::uint64_t via_lattice = 0;
  std::uint64_t via_elements = 0;
};

/// Sum of |H| over cyclic subgroups, computed twice: from the lattice, and as
/// the sum over elements a of o(a)/phi(o(a)).
inline CyclicOrderSum cyclic_order_sum(const Lattice &lat) {
  CyclicOrderSum out;
  for (const auto &e : lat.entries())
    if (e.cyclic)
      out.via_lattice += e.order;
  const PermGroup &g = lat.group();
  Rational acc = 0;
  for (Elem x = 0; x < g.size(); ++x) {
    std::uint64_t o = g.order_of(x);
    acc += Rational(BigInt(o), BigInt(euler_totient(o)));
  }
  if (!acc.is_integer())
    throw std::logic_error("cyclic_order_sum: non-integral element sum " +
                           acc.str());
  out.via_elements = static_cast<std::uint64_t>(acc.num());
  return out;
}

/// True iff G has no nontrivial abelian normal subgroup.
inline bool is_fitting_free(const Lattice &lat) {
  for (std::size_t i = 1; i < lat.size(); ++i)
    if (lat.is_normal(i) && lat.is_abelian(i))
      return false;
  return true;
}

inline bool has_abelian_maximal(const Lattice &lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_maximal(i) && lat.is_abelian(i))
      return true;
  return false;
}

inline bool has_cyclic_maximal(const Lattice &lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_maximal(i) && lat.is_cyclic(i))
      return true;
  return false;
}

struct InvariantReport {
  std::string name;
  std::uint64_t order = 0;
  Rational sigma1;
  std::uint64_t psi = 0;
  std::size_t k = 0;
  std::size_t k_prime = 0;
  std::size_t frattini_order = 0;
  bool solvable = false;
  bool nilpotent = false;
  std::vector<std::size_t> element_class_sizes; // ascending
  std::size_t subgroup_count = 0;
  std::size_t subgroup_class_count = 0;
  bool fitting_free = false;
};

/// Invariants used as an isomorphism proxy. Equal fingerprints do not prove
/// isomorphism.
struct Fingerprint {
  std::uint64_t order;
  std::vector<std::size_t> class_sizes;
  Rational sigma1;
  std::uint64_t psi;
  std::size_t k;
  std::size_t k_prime;
  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

inline Fingerprint fingerprint(const InvariantReport &r) {
  return {r.order, r.element_class_sizes, r.sigma1, r.psi, r.k, r.k_prime};
}

inline InvariantReport build_report(const std::string &name, const PermGroup &g,
                                    const Lattice &lat) {
  if (!lat.group().same_group(g))
    throw std::invalid_argument("build_report: lattice belongs to another group");
  InvariantReport r;
  r.name = name;
  r.order = g.order();
  r.sigma1 = sigma1(lat);
  r.psi = psi(g);
  auto mc = maximal_subgroup_classes(lat);
  r.k = mc.k;
  r.k_prime = mc.k_prime;
  r.frattini_order = frattini_subgroup(lat).size();
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(g);
  for (const auto &c : conjugacy_classes_of_elements(g))
    r.element_class_sizes.push_back(c.size());
  std::sort(r.element_class_sizes.begin(), r.element_class_sizes.end());
  r.subgroup_count = lat.size();
  r.subgroup_class_count = lat.classes().size();
  r.fitting_free = is_fitting_free(lat);
  return r;
}

inline InvariantReport build_report(const std::string &name,
                                    const PermGroup &g) {
  return build_report(name, g, enumerate_subgroups(g));
}

} // namespace g1
