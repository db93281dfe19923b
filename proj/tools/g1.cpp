// g1: subgroup-order-sum invariants of finite permutation groups.

#include "g1/catalog.hpp"
#include "g1/errors.hpp"
#include "g1/invariants.hpp"
#include "g1/lattice.hpp"
#include "g1/psl.hpp"
#include "g1/serialize.hpp"
#include "g1/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kResourceBound = 2, kParseError = 3 };

std::string join(const std::vector<std::size_t> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::string> split_csv(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty())
      out.push_back(item);
  return out;
}

// Builds the group; if it is too large to enumerate, prints what the
// stabilizer chain knows and returns nullopt.
std::optional<g1::PermGroup> build_enumerable(const std::string &text) {
  const g1::GroupSpec spec = g1::parse_group_spec(text);
  g1::PermGroup g = g1::build_group(spec);
  if (g.has_table())
    return g;
  std::vector<std::size_t> base;
  for (auto b : g.chain().base())
    base.push_back(b + 1u);
  std::cerr << "error: " << g1::render(spec) << " has order "
            << g.chain().order().str() << ", above the enumeration bound "
            << g1::default_enumeration_bound() << " (set G1_MAX_ORDER)\n"
            << "  base: " << join(base) << "\n"
            << "  basic orbit sizes: " << join(g.chain().orbit_sizes()) << "\n";
  return std::nullopt;
}

void print_report(const g1::InvariantReport &r) {
  auto line = [](const char *k, const std::string &v) {
    std::cout << std::left << std::setw(18) << k << v << "\n";
  };
  line("group", r.name);
  line("order", std::to_string(r.order));
  line("sigma1", r.sigma1.str() + " (" + r.sigma1.decimal() + ")");
  line("psi", std::to_string(r.psi));
  line("k", std::to_string(r.k));
  line("k'", std::to_string(r.k_prime));
  line("|Frattini|", std::to_string(r.frattini_order));
  line("solvable", r.solvable ? "true" : "false");
  line("nilpotent", r.nilpotent ? "true" : "false");
  line("Fitting-free", r.fitting_free ? "true" : "false");
  line("subgroups", std::to_string(r.subgroup_count) + " in " +
                        std::to_string(r.subgroup_class_count) + " classes");
  line("class sizes", join(r.element_class_sizes));
}

int cmd_report(const std::string &text, bool json) {
  auto g = build_enumerable(text);
  if (!g)
    return kResourceBound;
  const auto r = g1::build_report(g1::render(g1::parse_group_spec(text)), *g);
  if (json)
    std::cout << g1::to_json(r).dump(2) << "\n";
  else
    print_report(r);
  return kOk;
}

int cmd_lattice(const std::string &text, bool json) {
  auto g = build_enumerable(text);
  if (!g)
    return kResourceBound;
  const g1::Lattice lat = g1::enumerate_subgroups(*g);
  if (json) {
    std::cout << g1::to_json(lat).dump(2) << "\n";
    return kOk;
  }
  std::cout << "order " << g->order() << ", " << lat.size() << " subgroups, "
            << lat.classes().size() << " conjugacy classes\n\n";
  std::cout << std::left << std::setw(7) << "order" << std::setw(6) << "size"
            << std::setw(7) << "flags" << "representative\n";
  for (const auto &cls : lat.classes()) {
    const auto &e = lat.entry(cls.front());
    std::string flags;
    flags += e.normal ? 'N' : '-';
    flags += e.maximal ? 'M' : '-';
    flags += e.cyclic ? 'C' : '-';
    flags += e.abelian ? 'A' : '-';
    flags += e.elementary_abelian ? 'E' : '-';
    std::cout << std::setw(7) << e.order << std::setw(6) << cls.size()
              << std::setw(7) << flags << g1::generators_string(lat, cls.front())
              << "\n";
  }
  std::cout << "\nflags: N normal, M maximal, C cyclic, A abelian, E elementary abelian\n";
  return kOk;
}

int cmd_verify(std::uint64_t max_order, const std::string &checks, bool json,
               bool inject_fault) {
  g1::VerifyOptions opts;
  opts.max_order = max_order;
  opts.checks = split_csv(checks);
  for (const auto &c : opts.checks) {
    bool known = false;
    for (const auto &s : g1::check_specs())
      known = known || c == s.id;
    if (!known)
      throw CLI::ValidationError("--checks", "unknown check " + c);
  }
  opts.inject_fault = inject_fault;
  const auto rep = g1::run_verify(opts);

  if (json) {
    for (const auto &c : rep.checks)
      std::cout << g1::to_json(c).dump() << "\n";
  } else {
    for (const auto &c : rep.checks) {
      std::cout << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(4)
                << c.id << " " << c.title << "\n"
                << "     groups tested " << c.tested << ", failures "
                << c.failures << ", " << std::fixed << std::setprecision(2)
                << c.seconds << " s";
      if (c.limit_seconds > 0)
        std::cout << " (limit " << c.limit_seconds << " s)";
      std::cout << "\n";
      for (const auto &n : c.notes)
        std::cout << "     " << n << "\n";
      for (const auto &f : c.failure_details)
        std::cout << "     failure: " << f << "\n";
    }
    std::cout << rep.groups_swept << " catalog groups swept in " << std::fixed
              << std::setprecision(1) << rep.sweep_seconds << " s; total "
              << rep.total_seconds << " s\n";
  }
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_search(const g1::SearchFilters &f, bool json) {
  const auto hits = g1::run_search(g1::Catalog::default_catalog(f.max_order), f);
  if (json) {
    g1::Json out = g1::Json::array();
    for (const auto &h : hits)
      out.push_back(g1::Json{{"report", g1::to_json(h.report)},
                             {"lattice", h.lattice}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto &h : hits)
      std::cout << h.report.name << "  order " << h.report.order << "  sigma1 "
                << h.report.sigma1.str() << "  k " << h.report.k << "  k' "
                << h.report.k_prime
                << (h.report.solvable ? "  solvable" : "  non-solvable") << "\n";
    std::cout << hits.size() << " match(es) over the catalog up to order "
              << f.max_order << " (evidence, not proof)\n";
  }
  return kOk;
}

int cmd_psl_bound(unsigned p) {
  const auto b = g1::sigma1_lower_bound(p);
  std::cout << g1::to_json(b).dump(2) << "\n";
  return kOk;
}

int cmd_psl_verify(unsigned p) {
  const auto census = g1::dickson_census(p);
  if (p != 2 && p != 3) {
    std::cout << g1::to_json(census).dump(2) << "\n";
    std::cerr << "error: PSL(2," << census.q
              << ") is beyond the enumeration bound; only the census is printed\n";
    return kResourceBound;
  }
  const auto check = g1::verify_census_against_lattice(p);
  g1::Json out{{"census", g1::to_json(census)}, {"check", g1::to_json(check)}};
  if (p >= 3)
    out["bound"] = g1::to_json(g1::sigma1_lower_bound(p));
  std::cout << out.dump(2) << "\n";
  return check.ok() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subgroup-order-sum invariants of finite permutation groups"};
  app.require_subcommand(1);

  std::string spec;
  bool json = false;

  auto *report = app.add_subcommand("report", "Invariant report for a group");
  report->add_option("spec", spec, "group, e.g. A5, \"C7 x A5\", \"gens[(1 2), (1 2 3)]\"")
      ->required();
  report->add_flag("--json", json, "JSON output");

  auto *lattice = app.add_subcommand("lattice", "Subgroup classes of a group");
  lattice->add_option("spec", spec, "group")->required();
  lattice->add_flag("--json", json, "JSON output");

  std::uint64_t max_order = g1::default_enumeration_bound();
  std::string checks;
  bool inject_fault = false;
  auto *verify = app.add_subcommand("verify", "Run the verification checks");
  verify->add_option("--max-order", max_order, "largest catalog order swept");
  verify->add_option("--checks", checks, "comma-separated subset, e.g. V1,V3");
  verify->add_flag("--json", json, "one JSON record per check");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  g1::SearchFilters filters;
  std::string below;
  std::size_t k_prime = 0, k_min = 0;
  auto *search = app.add_subcommand("search", "Search the catalog");
  search->add_option("--sigma1-below", below, "rational bound A/B");
  search->add_flag("--nonsolvable", filters.nonsolvable);
  search->add_flag("--fitting-free", filters.fitting_free);
  search->add_option("--k-prime", k_prime, "require k' = N");
  search->add_option("--k-min", k_min, "require k >= N");
  search->add_option("--max-order", max_order, "largest catalog order searched");
  search->add_flag("--json", json, "JSON output");

  unsigned p = 0;
  auto *psl_bound = app.add_subcommand("psl-bound", "Lower bounds for sigma1(PSL(2,2^p))");
  psl_bound->add_option("p", p, "odd prime")->required();
  auto *psl_verify = app.add_subcommand("psl-verify", "Census of PSL(2,2^p) against its lattice");
  psl_verify->add_option("p", p, "prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (*report)
      return cmd_report(spec, json);
    if (*lattice)
      return cmd_lattice(spec, json);
    if (*verify)
      return cmd_verify(max_order, checks, json, inject_fault);
    if (*search) {
      if (!below.empty())
        filters.sigma1_below = g1::Rational::parse(below);
      if (search->count("--k-prime"))
        filters.k_prime = k_prime;
      if (search->count("--k-min"))
        filters.k_min = k_min;
      filters.max_order = max_order;
      return cmd_search(filters, json);
    }
    if (*psl_bound)
      return cmd_psl_bound(p);
    if (*psl_verify)
      return cmd_psl_verify(p);
  } catch (const g1::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n  " << spec << "\n  "
              << std::string(e.position(), ' ') << "^\n";
    return kParseError;
  } catch (const g1::ResourceBoundError &e) {
    std::cerr << "error: " << e.what() << " (order " << e.order_info() << ")\n";
    return kResourceBound;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
