#pragma once

// Machine verification of the sigma_1 results over concrete groups: fixed
// checks on PSL(2,q) and A5, then one sweep over the catalog that applies
// every per-group check while each lattice is in memory.

#include "g1/catalog.hpp"
#include "g1/invariants.hpp"
#include "g1/lattice.hpp"
#include "g1/oracle.hpp"
#include "g1/psl.hpp"
#include "g1/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g1 {

struct CheckResult {
  std::string id;
  std::string title;
  std::size_t tested = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failure_details; // first few only
  double seconds = 0;
  double limit_seconds = 0; // 0: no runtime limit

  bool within_time() const {
    return limit_seconds <= 0 || seconds <= limit_seconds;
  }
  bool passed() const { return failures == 0 && within_time(); }

  void fail(std::string detail) {
    ++failures;
    if (failure_details.size() < 20)
      failure_details.push_back(std::move(detail));
  }
  void expect(bool ok, const std::string &detail) {
    if (!ok)
      fail(detail);
  }
};

inline Json to_json(const CheckResult &c) {
  return Json{{"check", c.id},
              {"title", c.title},
              {"passed", c.passed()},
              {"groups_tested", c.tested},
              {"failures", c.failures},
              {"seconds", static_cast<double>(static_cast<long long>(c.seconds * 1000)) / 1000},
              {"limit_seconds", c.limit_seconds},
              {"notes", c.notes},
              {"failure_details", c.failure_details}};
}

struct CheckSpec {
  const char *id;
  const char *title;
  double limit_seconds;
};

inline const std::vector<CheckSpec> &check_specs() {
  static const std::vector<CheckSpec> specs = {
      {"V1", "sigma1(PSL(2,7)) = 1499/168 by enumeration", 60},
      {"V2", "sigma1(A5) = 117/20, subgroup order sum 351", 5},
      {"V3", "PSL(2,8) subgroup census, k = k' = 3, simple", 120},
      {"V4", "PSL(2,2^p) bound chain, exact", 1},
      {"V5", "sigma1(PSL(2,8)) >= full lower bound", 0},
      {"V6", "non-normal maximal classes: class order sum = |G|, N_G(M) = M (|G| <= 1000)", 0},
      {"V7", "cyclic subgroup order sum = sum of o(a)/phi(o(a))", 0},
      {"V8", "sigma1 multiplicative on coprime products", 0},
      {"V9", "quotient inequality for every normal subgroup (|G| <= 200)", 0},
      {"V10", "k' <= 2 or an abelian maximal subgroup implies solvable; k = 3 non-solvable quotients by Frattini", 0},
      {"V11", "no non-solvable group with sigma1 < 117/20; counterexample filters empty", 0},
      {"V12", "A5 is the only non-solvable k = 3 group with sigma1 = 117/20; Frattini(A5) = 1", 0},
      {"V13", "lattice enumeration matches exhaustive subgroup search (|G| <= 24)", 120},
  };
  return specs;
}

struct VerifyOptions {
  std::uint64_t max_order = default_enumeration_bound();
  std::vector<std::string> checks; // empty: all
  bool inject_fault = false;       // perturbs one observed census count
  std::function<void(std::size_t, std::size_t)> progress;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t groups_swept = 0;
  double sweep_seconds = 0;
  double total_seconds = 0;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed(); });
  }
  const CheckResult *find(const std::string &id) const {
    for (const auto &c : checks)
      if (c.id == id)
        return &c;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Search

struct SearchFilters {
  std::optional<Rational> sigma1_below;
  bool nonsolvable = false;
  bool fitting_free = false;
  std::optional<std::size_t> k_prime;
  std::optional<std::size_t> k_min;
  std::uint64_t max_order = default_enumeration_bound();
};

inline bool matches(const InvariantReport &r, const SearchFilters &f) {
  if (r.order > f.max_order)
    return false;
  if (f.sigma1_below && !(r.sigma1 < *f.sigma1_below))
    return false;
  if (f.nonsolvable && r.solvable)
    return false;
  if (f.fitting_free && !r.fitting_free)
    return false;
  if (f.k_prime && r.k_prime != *f.k_prime)
    return false;
  if (f.k_min && r.k < *f.k_min)
    return false;
  return true;
}

/// Conditions a minimal counterexample to "sigma1 < 117/20 implies
/// solvable" would have to meet.
inline SearchFilters counterexample_filters(std::uint64_t max_order) {
  SearchFilters f;
  f.sigma1_below = Rational(117, 20);
  f.nonsolvable = true;
  f.fitting_free = true;
  f.k_prime = 3;
  f.k_min = 4;
  f.max_order = max_order;
  return f;
}

struct SearchHit {
  InvariantReport report;
  Json lattice;
};

inline std::vector<SearchHit> run_search(const Catalog &cat,
                                         const SearchFilters &f) {
  std::vector<SearchHit> hits;
  for (std::size_t i : cat.up_to(f.max_order)) {
    const PermGroup g = build_group(cat[i].spec);
    const Lattice lat = enumerate_subgroups(g);
    InvariantReport r = build_report(cat[i].name, g, lat);
    if (matches(r, f))
      hits.push_back({std::move(r), to_json(lat)});
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string chain_note(const PslBound &b) {
  return "p=" + std::to_string(b.p) + ": full " + b.full.str() + " >= truncated " +
         b.truncated.str() + " = intermediate " + b.intermediate.str() +
         " > simplified " + b.simplified.str() + " (" + b.simplified.decimal() +
         ")";
}

inline Fingerprint fingerprint_of(const std::string &name, const PermGroup &g) {
  return fingerprint(build_report(name, g));
}

} // namespace detail

inline VerifyReport run_verify(const VerifyOptions &opts,
                               const Catalog &cat = Catalog::default_catalog()) {
  detail::Stopwatch total;
  std::map<std::string, CheckResult> res;
  for (const auto &s : check_specs()) {
    if (!opts.checks.empty() &&
        std::find(opts.checks.begin(), opts.checks.end(), s.id) ==
            opts.checks.end())
      continue;
    CheckResult c;
    c.id = s.id;
    c.title = s.title;
    c.limit_seconds = s.limit_seconds;
    res.emplace(s.id, std::move(c));
  }
  auto sel = [&](const char *id) -> CheckResult * {
    auto it = res.find(id);
    return it == res.end() ? nullptr : &it->second;
  };
  const Rational a5_value(117, 20);

  if (auto *c = sel("V1")) {
    detail::Stopwatch t;
    const PermGroup g = construct_psl2(7);
    const Rational s = sigma1(enumerate_subgroups(g));
    c->tested = 1;
    c->expect(s == Rational(1499, 168), "sigma1(PSL(2,7)) = " + s.str());
    c->notes.push_back("sigma1(PSL(2,7)) = " + s.str() + " (" + s.decimal() +
                       ") > 117/20");
    c->expect(s > a5_value, "sigma1(PSL(2,7)) not above 117/20");
    c->seconds = t.seconds();
  }

  if (auto *c = sel("V2")) {
    detail::Stopwatch t;
    const PermGroup g = alternating_group(5);
    const Lattice lat = enumerate_subgroups(g);
    const BigInt sum = subgroup_order_sum(lat);
    const Rational s = sigma1(lat);
    c->tested = 1;
    c->expect(sum == 351, "subgroup order sum of A5 = " + sum.str());
    c->expect(s == a5_value, "sigma1(A5) = " + s.str());
    c->notes.push_back("sum |H| = " + sum.str() + ", sigma1(A5) = " + s.str());
    c->seconds = t.seconds();
  }

  if (auto *c = sel("V3")) {
    detail::Stopwatch t;
    const CensusCheck cc = verify_census_against_lattice(3, opts.inject_fault ? 1 : 0);
    c->tested = 1;
    for (const auto &row : cc.rows) {
      if (row.label.rfind("sigma1", 0) == 0)
        continue; // V5
      c->notes.push_back(row.label + ": expected " + row.expected +
                         ", observed " + row.observed);
      c->expect(row.ok, row.label + ": expected " + row.expected +
                            ", observed " + row.observed);
    }
    c->seconds = t.seconds();
  }

  if (auto *c = sel("V4")) {
    detail::Stopwatch t;
    const PslBound b = sigma1_lower_bound(3);
    c->tested = 1;
    c->expect(b.full >= b.truncated && b.truncated == b.intermediate &&
                  b.intermediate > b.simplified,
              "chain order fails at p=3: " + detail::chain_note(b));
    c->expect(b.simplified == Rational(165, 28),
              "simplified bound at q=8 is " + b.simplified.str());
    c->expect(b.simplified > a5_value, "simplified bound at q=8 not above 117/20");
    c->notes.push_back(detail::chain_note(b));
    for (unsigned p : {5u, 7u, 11u, 13u}) {
      const PslBound bp = sigma1_lower_bound(p);
      ++c->tested;
      c->expect(bp.simplified > a5_value,
                "p=" + std::to_string(p) + ": simplified " + bp.simplified.str() +
                    " not above 117/20");
      c->expect(bp.full >= bp.truncated && bp.truncated == bp.intermediate &&
                    bp.intermediate > bp.simplified,
                "chain order fails: " + detail::chain_note(bp));
      c->notes.push_back("p=" + std::to_string(p) + ": simplified " +
                         bp.simplified.str() + " (" + bp.simplified.decimal() +
                         ") > 117/20");
    }
    c->seconds = t.seconds();
  }

  if (auto *c = sel("V5")) {
    detail::Stopwatch t;
    const Rational s = sigma1(enumerate_subgroups(construct_psl2(8)));
    const PslBound b = sigma1_lower_bound(3);
    c->tested = 1;
    c->expect(s >= b.full, "sigma1(PSL(2,8)) = " + s.str() +
                               " below full bound " + b.full.str());
    c->notes.push_back("sigma1(PSL(2,8)) = " + s.str() + " (" + s.decimal() +
                       ") >= full bound " + b.full.str() + " (" +
                       b.full.decimal() + ")");
    c->seconds = t.seconds();
  }

  // ---- catalog sweep ------------------------------------------------------
  const bool sweep = sel("V6") || sel("V7") || sel("V8") || sel("V9") ||
                     sel("V10") || sel("V11") || sel("V12") || sel("V13");
  VerifyReport report;
  std::map<std::size_t, Rational> sigma_of;
  std::optional<Fingerprint> fp_a5;
  std::vector<std::pair<std::string, Fingerprint>> theorem_b_refs;
  auto a5_fingerprint = [&]() -> const Fingerprint & {
    if (!fp_a5)
      fp_a5 = detail::fingerprint_of("A5", alternating_group(5));
    return *fp_a5;
  };
  auto theorem_b_quotients = [&]() -> const auto & {
    if (theorem_b_refs.empty())
      for (unsigned q : {4u, 7u, 8u})
        theorem_b_refs.emplace_back(
            "PSL(2," + std::to_string(q) + ")",
            detail::fingerprint_of("PSL", construct_psl2(q)));
    return theorem_b_refs;
  };
  std::size_t a5_hits = 0;
  std::vector<std::string> counterexample_hits;

  if (sweep) {
    detail::Stopwatch sweep_time;
    const auto indices = cat.up_to(opts.max_order);
    std::size_t done = 0;
    for (std::size_t idx : indices) {
      const CatalogEntry &entry = cat[idx];
      const PermGroup g = build_group(entry.spec);
      const Lattice lat = enumerate_subgroups(g);
      const InvariantReport rep = build_report(entry.name, g, lat);
      sigma_of.emplace(idx, rep.sigma1);
      ++report.groups_swept;
      const std::string &name = entry.name;

      if (auto *c = sel("V6"); c && g.order() <= 1000) {
        detail::Stopwatch t;
        ++c->tested;
        for (const auto &cls : lat.classes()) {
          const std::size_t m = cls.front();
          if (!lat.is_maximal(m) || lat.is_normal(m))
            continue;
          const std::uint64_t sum = cls.size() * lat.order(m);
          c->expect(sum == g.order(), name + ": class of maximal subgroups of order " +
                                          std::to_string(lat.order(m)) +
                                          " sums to " + std::to_string(sum));
          for (std::size_t member : cls) {
            const ElementSet mm = lat.subgroup(member);
            const ElementSet nm = normalizer(g, mm);
            c->expect(nm == mm, name + ": N_G(M) != M for a maximal subgroup of order " +
                                    std::to_string(lat.order(m)));
          }
        }
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V7")) {
        detail::Stopwatch t;
        ++c->tested;
        const CyclicOrderSum cos = cyclic_order_sum(lat);
        c->expect(cos.via_lattice == cos.via_elements,
                  name + ": cyclic order sum " + std::to_string(cos.via_lattice) +
                      " vs element sum " + std::to_string(cos.via_elements));
        c->expect(cos.via_elements >= g.order(),
                  name + ": cyclic order sum below |G|");
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V9"); c && g.order() <= 200) {
        detail::Stopwatch t;
        ++c->tested;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!lat.is_normal(i))
            continue;
          const ElementSet n = lat.subgroup(i);
          const Lattice lq = enumerate_subgroups(quotient_group(g, n));
          const Lattice ln = enumerate_subgroups(subgroup_as_group(n));
          const Rational sq = sigma1(lq);
          const Rational sn = sigma1(ln);
          const Rational index(BigInt(g.order()), BigInt(n.size()));
          const Rational mid = sq + (sn - Rational(1)) / index;
          // Correspondence: subgroups of G/N are the K >= N.
          BigInt above = 0;
          for (std::size_t k = 0; k < lat.size(); ++k)
            if (lat.includes(k, i))
              above += lat.order(k) / n.size();
          const Rational sq_corr = Rational(above, BigInt(1)) / index;
          const std::string tag = name + " / N(order " + std::to_string(n.size()) + ")";
          c->expect(rep.sigma1 >= mid && mid >= sq,
                    tag + ": " + rep.sigma1.str() + " >= " + mid.str() + " >= " +
                        sq.str() + " fails");
          c->expect(sq == sq_corr, tag + ": quotient sigma1 " + sq.str() +
                                       " disagrees with correspondence " +
                                       sq_corr.str());
          if (name == "S4" && n.size() == 4)
            c->notes.push_back("S4 / V4: sigma1(G) = " + rep.sigma1.str() +
                               " >= sigma1(G/N) + (sigma1(N) - 1)/(G:N) = " +
                               mid.str() + " >= sigma1(G/N) = " + sq.str());
        }
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V10")) {
        detail::Stopwatch t;
        ++c->tested;
        if (rep.k_prime <= 2)
          c->expect(rep.solvable, name + ": k' = " + std::to_string(rep.k_prime) +
                                      " but not solvable");
        if (has_abelian_maximal(lat))
          c->expect(rep.solvable, name + ": abelian maximal subgroup but not solvable");
        if (rep.k == 3 && !rep.solvable) {
          const ElementSet phi = frattini_subgroup(lat);
          const Fingerprint fq = detail::fingerprint_of(
              "quotient", quotient_group(g, phi));
          std::string which;
          for (const auto &[ref_name, ref] : theorem_b_quotients())
            if (fq == ref)
              which = ref_name;
          c->expect(!which.empty(),
                    name + ": k = 3, non-solvable, G/Frattini matches no PSL(2,q)");
          if (!which.empty())
            c->notes.push_back(name + ": G/Frattini(G) has the fingerprint of " +
                               which);
        }
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V11")) {
        detail::Stopwatch t;
        ++c->tested;
        c->expect(rep.solvable || rep.sigma1 >= a5_value,
                  name + ": non-solvable with sigma1 = " + rep.sigma1.str());
        if (rep.k_prime >= 4 && !has_cyclic_maximal(lat))
          c->expect(rep.sigma1 >= Rational(6),
                    name + ": k' >= 4, no cyclic maximal, sigma1 = " +
                        rep.sigma1.str() + " < 6");
        if (matches(rep, counterexample_filters(opts.max_order))) {
          counterexample_hits.push_back(name);
          c->fail(name + ": meets every counterexample condition");
        }
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V12")) {
        detail::Stopwatch t;
        ++c->tested;
        if (!rep.solvable && rep.k == 3 && rep.sigma1 == a5_value) {
          ++a5_hits;
          const bool same = fingerprint(rep) == a5_fingerprint();
          c->expect(same, name + ": non-solvable, k = 3, sigma1 = 117/20, "
                                 "but not the fingerprint of A5");
          c->notes.push_back(name + ": non-solvable, k = 3, sigma1 = 117/20" +
                             (same ? ", fingerprint of A5" : ""));
        }
        c->seconds += t.seconds();
      }

      if (auto *c = sel("V13"); c && g.order() <= 24) {
        detail::Stopwatch t;
        ++c->tested;
        const Lattice fresh = enumerate_subgroups(g);
        const auto brute = oracle::all_subgroups(g);
        bool same = brute.size() == fresh.size();
        for (std::size_t i = 0; same && i < brute.size(); ++i)
          same = brute[i] == fresh.entry(i).bits;
        c->expect(same, name + ": enumeration found " + std::to_string(fresh.size()) +
                            " subgroups, exhaustive search " +
                            std::to_string(brute.size()));
        c->seconds += t.seconds();
      }

      ++done;
      if (opts.progress)
        opts.progress(done, indices.size());
    }
    report.sweep_seconds = sweep_time.seconds();
  }

  if (auto *c = sel("V8")) {
    detail::Stopwatch t;
    for (const auto &[idx, s] : sigma_of) {
      const CatalogEntry &e = cat[idx];
      if (e.factors.size() != 2)
        continue;
      auto a = sigma_of.find(e.factors[0]);
      auto b = sigma_of.find(e.factors[1]);
      if (a == sigma_of.end() || b == sigma_of.end())
        continue;
      ++c->tested;
      c->expect(gcd(cat[e.factors[0]].order, cat[e.factors[1]].order) == 1,
                e.name + ": factor orders not coprime");
      c->expect(s == a->second * b->second,
                e.name + ": " + s.str() + " != " + a->second.str() + " * " +
                    b->second.str());
    }
    // The reference instance is checked even when the sweep excludes it.
    const PermGroup prod = build_group(parse_group_spec("C7 x A5"));
    const Rational s = sigma1(enumerate_subgroups(prod));
    const Rational sa = sigma1(enumerate_subgroups(cyclic_group(7)));
    const Rational sb = sigma1(enumerate_subgroups(alternating_group(5)));
    c->expect(s == Rational(234, 35) && s == sa * sb,
              "sigma1(C7 x A5) = " + s.str());
    c->notes.push_back("sigma1(C7 x A5) = " + s.str() + " = " + sa.str() +
                       " * " + sb.str());
    c->notes.push_back(std::to_string(c->tested) + " catalog products checked");
    c->seconds = t.seconds();
  }

  if (auto *c = sel("V11")) {
    c->notes.push_back("counterexample filters (sigma1 < 117/20, non-solvable, "
                       "k' = 3, k >= 4, Fitting-free): " +
                       std::to_string(counterexample_hits.size()) +
                       " catalog hits; evidence over the catalog, not a proof");
  }

  if (auto *c = sel("V12")) {
    detail::Stopwatch t;
    const Lattice lat = enumerate_subgroups(alternating_group(5));
    const ElementSet phi = frattini_subgroup(lat);
    c->expect(phi.is_trivial(), "Frattini(A5) has order " + std::to_string(phi.size()));
    c->notes.push_back("Frattini(A5) has order " + std::to_string(phi.size()));
    if (opts.max_order >= 60)
      c->expect(a5_hits >= 1, "A5 itself not found among catalog hits");
    c->seconds += t.seconds();
  }

  for (const auto &s : check_specs())
    if (auto it = res.find(s.id); it != res.end())
      report.checks.push_back(std::move(it->second));
  report.total_seconds = total.seconds();
  return report;
}

} // namespace g1
