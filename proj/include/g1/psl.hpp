#pragma once

// PSL(2,q) and SL(2,q) as permutation groups, the subgroup census of
// PSL(2,2^p) and the exact lower-bound chain for its sigma_1.

#include "g1/arith.hpp"
#include "g1/field.hpp"
#include "g1/invariants.hpp"
#include "g1/lattice.hpp"
#include "g1/perm_group.hpp"

#include <string>
#include <vector>

namespace g1 {

/// PSL(2,q) on the projective line: point x < q is [x:1], point q is [1:0].
/// Generators: x -> x + b for b in the additive basis, and x -> -1/x.
inline PermGroup construct_psl2(unsigned q, const GroupOptions &opts = {}) {
  if (!FieldSpec::supported(q))
    throw std::invalid_argument("PSL(2," + std::to_string(q) +
                                "): unsupported q");
  FieldSpec f(q);
  const std::size_t degree = q + 1;
  const Point inf = static_cast<Point>(q);
  std::vector<Permutation> gens;
  for (unsigned b : f.additive_basis()) {
    std::vector<Point> im(degree);
    for (unsigned x = 0; x < q; ++x)
      im[x] = static_cast<Point>(f.add(x, b));
    im[inf] = inf;
    gens.emplace_back(std::move(im));
  }
  std::vector<Point> w(degree);
  w[0] = inf;
  w[inf] = 0;
  for (unsigned x = 1; x < q; ++x)
    w[x] = static_cast<Point>(f.neg(f.inv(x)));
  gens.emplace_back(std::move(w));
  return PermGroup::from_generators(degree, std::move(gens), opts);
}

/// SL(2,q) acting on the q^2-1 nonzero row vectors (a,b), point a*q+b-1.
/// Generators: [[1,b],[0,1]] for b in the additive basis, and [[0,-1],[1,0]].
inline PermGroup construct_sl2(unsigned q, const GroupOptions &opts = {}) {
  if (!FieldSpec::supported(q))
    throw std::invalid_argument("SL(2," + std::to_string(q) +
                                "): unsupported q");
  FieldSpec f(q);
  const std::size_t degree = std::size_t{q} * q - 1;
  auto point = [q](unsigned a, unsigned b) {
    return static_cast<Point>(a * q + b - 1);
  };
  std::vector<Permutation> gens;
  for (unsigned beta : f.additive_basis()) {
    std::vector<Point> im(degree);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        if (a || b)
          im[point(a, b)] = point(a, f.add(f.mul(a, beta), b));
    gens.emplace_back(std::move(im));
  }
  std::vector<Point> w(degree);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      if (a || b)
        w[point(a, b)] = point(b, f.neg(a));
  gens.emplace_back(std::move(w));
  return PermGroup::from_generators(degree, std::move(gens), opts);
}

/// Expected subgroup counts of PSL(2,2^p) for the families entering the
/// sigma_1 bound. The list is not a full classification.
struct Census {
  struct Row {
    std::uint64_t order;
    BigInt count;
  };
  unsigned p = 0;
  std::uint64_t q = 0;
  std::vector<Row> cyclic;             // m | q-1 or m | q+1, m != 1
  std::vector<Row> elementary_abelian; // order 2^i, i = 1..p
  std::size_t maximal_classes = 3;
};

inline void require_census_prime(unsigned p, unsigned min_p, const char *what) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(what) + ": p = " +
                                std::to_string(p) + " is not prime");
  if (p < min_p)
    throw std::invalid_argument(std::string(what) + ": requires p >= " +
                                std::to_string(min_p));
  if (p > 31)
    throw std::invalid_argument(std::string(what) + ": p too large");
}

inline Census dickson_census(unsigned p) {
  require_census_prime(p, 2, "dickson_census");
  Census c;
  c.p = p;
  c.q = std::uint64_t{1} << p;
  const BigInt q = c.q;
  for (auto m : divisors(c.q - 1))
    if (m != 1)
      c.cyclic.push_back({m, q * (q + 1) / 2});
  for (auto m : divisors(c.q + 1))
    if (m != 1)
      c.cyclic.push_back({m, q * (q - 1) / 2});
  std::sort(c.cyclic.begin(), c.cyclic.end(),
            [](const auto &a, const auto &b) { return a.order < b.order; });
  for (unsigned i = 1; i <= p; ++i)
    c.elementary_abelian.push_back(
        {std::uint64_t{1} << i, (q + 1) * gaussian_binomial(p, i)});
  return c;
}

/// The lower-bound chain for sigma_1(PSL(2,q)), q = 2^p, p >= 3:
///   full         uses the exact divisor sums and every Gaussian term;
///   truncated    keeps only sum m >= q -+ 1 and the i = 1, 2, 3 terms;
///   intermediate 5 + [1 + (q+1)(q-1)(q^2+8q+22)/21] / (q^3 - q);
///   simplified   5 + (q^2+8q+22)/(21q).
/// full >= truncated = intermediate > simplified.
struct PslBound {
  unsigned p = 0;
  BigInt q;
  Rational full;
  Rational truncated;
  Rational intermediate;
  Rational simplified;
};

inline PslBound sigma1_lower_bound(unsigned p) {
  if (p == 2)
    throw std::invalid_argument(
        "sigma1_lower_bound: the chain needs q >= 8; p = 2 gives A5 with "
        "sigma_1 = 117/20 exactly");
  require_census_prime(p, 3, "sigma1_lower_bound");
  const std::uint64_t qq = std::uint64_t{1} << p;
  const BigInt q = qq;
  const BigInt order = q * q * q - q;
  const Rational inv_order(BigInt(1), order);

  BigInt gauss_full = 0;
  for (unsigned i = 1; i <= p; ++i)
    gauss_full += gaussian_binomial(p, i) * (BigInt(1) << i);
  const BigInt gauss_first3 = 2 * gaussian_binomial(p, 1) +
                              4 * gaussian_binomial(p, 2) +
                              8 * gaussian_binomial(p, 3);
  const BigInt sum_minus = BigInt(divisor_sum(qq - 1)) - 1;
  const BigInt sum_plus = BigInt(divisor_sum(qq + 1)) - 1;
  // q(q+1)/2 and q(q-1)/2 are integers since q is even.
  const BigInt tori_split = q * (q + 1) / 2;
  const BigInt tori_nonsplit = q * (q - 1) / 2;

  PslBound b;
  b.p = p;
  b.q = q;
  b.full = inv_order * Rational::from_int(1 + 4 * order + tori_split * sum_minus +
                                          tori_nonsplit * sum_plus +
                                          (q + 1) * gauss_full);
  b.truncated =
      inv_order * Rational::from_int(1 + 4 * order + tori_split * (q - 1) +
                                     tori_nonsplit * (q + 1) +
                                     (q + 1) * gauss_first3);
  const Rational poly(q * q + 8 * q + 22, BigInt(21));
  b.intermediate =
      Rational(5) + (Rational(1) + Rational::from_int((q + 1) * (q - 1)) * poly) *
                        inv_order;
  b.simplified = Rational(5) + Rational(q * q + 8 * q + 22, 21 * q);
  return b;
}

struct CensusCheck {
  struct Row {
    std::string label;
    std::string expected;
    std::string observed;
    bool ok;
  };
  unsigned p = 0;
  std::vector<Row> rows;
  Rational sigma1;
  bool ok() const {
    for (const auto &r : rows)
      if (!r.ok)
        return false;
    return true;
  }
};

/// Enumerates the lattice of PSL(2,2^p) (p = 2 or 3) and compares it with
/// the census, the maximal-class count, simplicity and the sigma_1 claims.
/// `observed_bias` adds to the first observed cyclic count (fault injection
/// for harness self-tests).
inline CensusCheck verify_census_against_lattice(unsigned p,
                                                 long observed_bias = 0) {
  if (p != 2 && p != 3)
    throw std::invalid_argument(
        "verify_census_against_lattice: p must be 2 or 3 (q = 4 or 8)");
  const Census census = dickson_census(p);
  const PermGroup g = construct_psl2(static_cast<unsigned>(census.q));
  const Lattice lat = enumerate_subgroups(g);

  CensusCheck out;
  out.p = p;
  auto row = [&](std::string label, const BigInt &expected,
                 const BigInt &observed) {
    out.rows.push_back(
        {std::move(label), expected.str(), observed.str(), expected == observed});
  };
  row("order", BigInt(census.q * census.q * census.q - census.q),
      BigInt(g.order()));
  bool first = true;
  for (const auto &r : census.cyclic) {
    BigInt seen = 0;
    for (const auto &e : lat.entries())
      if (e.cyclic && e.order == r.order)
        ++seen;
    if (first)
      seen += observed_bias;
    first = false;
    row("cyclic order " + std::to_string(r.order), r.count, seen);
  }
  for (const auto &r : census.elementary_abelian) {
    BigInt seen = 0;
    for (const auto &e : lat.entries())
      if (e.elementary_abelian && e.order == r.order)
        ++seen;
    row("elementary abelian order " + std::to_string(r.order), r.count, seen);
  }
  auto mc = maximal_subgroup_classes(lat);
  row("maximal classes k", BigInt(census.maximal_classes), BigInt(mc.k));
  row("non-normal maximal classes k'", BigInt(census.maximal_classes),
      BigInt(mc.k_prime));
  std::size_t normals = 0;
  for (const auto &e : lat.entries())
    normals += e.normal ? 1 : 0;
  row("normal subgroups (simple)", BigInt(2), BigInt(normals));

  out.sigma1 = sigma1(lat);
  if (p == 2) {
    const Rational a5(117, 20);
    out.rows.push_back({"sigma1 = 117/20", a5.str(), out.sigma1.str(),
                        out.sigma1 == a5});
  } else {
    const PslBound b = sigma1_lower_bound(p);
    out.rows.push_back({"sigma1 >= full lower bound", ">= " + b.full.str(),
                        out.sigma1.str(), out.sigma1 >= b.full});
  }
  return out;
}

} // namespace g1
