#pragma once

// Textual group descriptions:
//
//   spec    := factor ( 'x' factor )*
//   factor  := 'C' n | 'D' n | 'S' n | 'A' n | 'Q8'
//            | 'SL(2,' q ')' | 'PSL(2,' q ')'
//            | 'gens[' [ perm ( ',' perm )* ] ']'
//   perm    := cycle+          cycle := '(' [ point ( [','] point )* ] ')'
//
// D n is the dihedral group of ORDER n (n even, n >= 4). Points in explicit
// generators are 1-based. Products act on the disjoint union of the factors'
// point sets.

#include "g1/arith.hpp"
#include "g1/field.hpp"
#include "g1/perm_group.hpp"
#include "g1/permutation.hpp"
#include "g1/psl.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace g1 {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  /// 0-based offset into the input, inside the offending token.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, SL2, PSL2 };

struct NamedGroup {
  Family family;
  unsigned n; // order parameter; q for SL2/PSL2; 8 for Q8
  friend bool operator==(const NamedGroup &, const NamedGroup &) = default;
};

struct ExplicitGroup {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
  friend bool operator==(const ExplicitGroup &, const ExplicitGroup &) = default;
};

using Factor = std::variant<NamedGroup, ExplicitGroup>;

struct GroupSpec {
  std::vector<Factor> factors;
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

inline std::string render(const Factor &f) {
  if (auto *g = std::get_if<NamedGroup>(&f)) {
    const std::string n = std::to_string(g->n);
    switch (g->family) {
    case Family::Cyclic: return "C" + n;
    case Family::Dihedral: return "D" + n;
    case Family::Symmetric: return "S" + n;
    case Family::Alternating: return "A" + n;
    case Family::Quaternion: return "Q8";
    case Family::SL2: return "SL(2," + n + ")";
    case Family::PSL2: return "PSL(2," + n + ")";
    }
  }
  const auto &e = std::get<ExplicitGroup>(f);
  std::string s = "gens[";
  for (std::size_t i = 0; i < e.gens.size(); ++i) {
    if (i)
      s += ", ";
    s += e.gens[i].to_cycle_string();
  }
  return s + "]";
}

inline std::string render(const GroupSpec &spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i)
      s += " x ";
    s += render(spec.factors[i]);
  }
  return s;
}

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    skip_ws();
    spec.factors.push_back(factor());
    for (;;) {
      skip_ws();
      if (at_end())
        break;
      if (s_[pos_] != 'x')
        fail("expected 'x' between factors or end of input");
      ++pos_;
      skip_ws();
      spec.factors.push_back(factor());
    }
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string &msg, std::size_t at) const {
    throw ParseError(msg, std::min(at, s_.empty() ? 0 : s_.size() - 1));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool consume(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  /// Decimal number; returns value and start position.
  std::pair<unsigned long, std::size_t> number() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 65535)
        fail_at("number too large", start);
      ++pos_;
    }
    if (pos_ == start)
      fail("expected a number");
    return {v, start};
  }

  Factor factor() {
    const std::size_t start = pos_;
    if (consume("gens"))
      return explicit_gens();
    if (consume("PSL"))
      return linear(Family::PSL2, start);
    if (consume("SL"))
      return linear(Family::SL2, start);
    if (consume("Q8"))
      return NamedGroup{Family::Quaternion, 8};
    if (at_end())
      fail("expected a group");
    const char c = s_[pos_];
    Family fam;
    switch (c) {
    case 'C': fam = Family::Cyclic; break;
    case 'D': fam = Family::Dihedral; break;
    case 'S': fam = Family::Symmetric; break;
    case 'A': fam = Family::Alternating; break;
    default: fail("unknown group family");
    }
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail_at("unknown group family", start);
    auto [n, at] = number();
    if (n < 1)
      fail_at("group parameter must be at least 1", at);
    if (fam == Family::Dihedral && (n % 2 != 0 || n < 4))
      fail_at("D n denotes the dihedral group of order n; n must be even "
              "and at least 4",
              at);
    return NamedGroup{fam, static_cast<unsigned>(n)};
  }

  Factor linear(Family fam, std::size_t start) {
    expect('(');
    auto [two, at2] = number();
    if (two != 2)
      fail_at("only 2x2 linear groups are supported", at2);
    expect(',');
    auto [q, atq] = number();
    if (!FieldSpec::supported(static_cast<unsigned>(q)))
      fail_at("unsupported field size q = " + std::to_string(q), atq);
    expect(')');
    (void)start;
    return NamedGroup{fam, static_cast<unsigned>(q)};
  }

  Factor explicit_gens() {
    expect('[');
    std::vector<std::vector<std::vector<std::size_t>>> perms;
    std::size_t degree = 1;
    skip_ws();
    if (!at_end() && s_[pos_] == ']') {
      ++pos_;
      return ExplicitGroup{1, {}};
    }
    for (;;) {
      std::vector<std::vector<std::size_t>> cycles;
      skip_ws();
      if (at_end() || s_[pos_] != '(')
        fail("expected '(' starting a cycle");
      while (!at_end() && s_[pos_] == '(') {
        ++pos_;
        std::vector<std::size_t> cycle;
        for (;;) {
          skip_ws();
          if (!at_end() && s_[pos_] == ')') {
            ++pos_;
            break;
          }
          if (!cycle.empty() && !at_end() && s_[pos_] == ',') {
            ++pos_;
            skip_ws();
          }
          if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("malformed cycle: expected a point or ')'");
          auto [pt, at] = number();
          if (pt < 1)
            fail_at("points are 1-based", at);
          for (auto prev : cycle)
            if (prev == pt - 1)
              fail_at("point " + std::to_string(pt) + " repeated within a cycle",
                      at);
          cycle.push_back(pt - 1);
          degree = std::max<std::size_t>(degree, pt);
        }
        cycles.push_back(std::move(cycle));
        skip_ws();
      }
      perms.push_back(std::move(cycles));
      skip_ws();
      if (!at_end() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (!at_end() && s_[pos_] == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']' in generator list");
    }
    ExplicitGroup e;
    e.degree = degree;
    for (const auto &cycles : perms) {
      std::vector<std::vector<std::size_t>> nontrivial;
      for (const auto &c : cycles)
        if (c.size() > 1)
          nontrivial.push_back(c);
      e.gens.push_back(Permutation::from_cycles(degree, nontrivial));
    }
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) {
  return detail::SpecParser(text).parse();
}

// ---------------------------------------------------------------------------
// Named constructions.

inline PermGroup cyclic_group(unsigned n, const GroupOptions &opts = {}) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  return PermGroup::from_generators(n, std::move(gens), opts);
}

/// Dihedral group of order n: rotation and reflection of an (n/2)-gon; the
/// Klein four-group (n = 4) acts regularly on 4 points.
inline PermGroup dihedral_group(unsigned n, const GroupOptions &opts = {}) {
  if (n % 2 != 0 || n < 4)
    throw std::invalid_argument("dihedral_group: order must be even and >= 4");
  const unsigned m = n / 2;
  if (m == 2)
    return PermGroup::from_generators(
        4,
        {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
         Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
        opts);
  std::vector<Point> rot(m), ref(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    ref[i] = static_cast<Point>((m - i) % m);
  }
  return PermGroup::from_generators(
      m, {Permutation(std::move(rot)), Permutation(std::move(ref))}, opts);
}

inline PermGroup symmetric_group(unsigned n, const GroupOptions &opts = {}) {
  std::vector<Permutation> gens;
  if (n >= 2)
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  return PermGroup::from_generators(n, std::move(gens), opts);
}

/// (1 2 3) with the n-cycle (n odd) or with (2 3 ... n) (n even).
inline PermGroup alternating_group(unsigned n, const GroupOptions &opts = {}) {
  std::vector<Permutation> gens;
  if (n >= 3)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    std::vector<std::size_t> c;
    for (unsigned i = (n % 2 == 1 ? 0 : 1); i < n; ++i)
      c.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  return PermGroup::from_generators(n, std::move(gens), opts);
}

/// Q8 in its right regular representation. Point 4s + u stands for
/// (-1)^s times unit u of (1, i, j, k).
inline PermGroup quaternion_group(const GroupOptions &opts = {}) {
  // unit product table: sign and unit of u*v.
  static constexpr int sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mul = [&](int v) {
    std::vector<Point> im(8);
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 4; ++u)
        im[4 * s + u] = static_cast<Point>(4 * ((s + sign[u][v]) % 2) + unit[u][v]);
    return Permutation(std::move(im));
  };
  return PermGroup::from_generators(8, {right_mul(1), right_mul(2)}, opts);
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i)
      return UINT64_MAX;
    f *= i;
  }
  return f;
}

/// Order predicted by the family formula (saturating).
inline std::uint64_t expected_order(const Factor &f) {
  if (std::holds_alternative<ExplicitGroup>(f))
    return 0; // unknown without computation
  const auto &g = std::get<NamedGroup>(f);
  const std::uint64_t q = g.n;
  switch (g.family) {
  case Family::Cyclic:
  case Family::Dihedral: return g.n;
  case Family::Symmetric: return factorial(g.n);
  case Family::Alternating: return g.n <= 1 ? 1 : factorial(g.n) / 2;
  case Family::Quaternion: return 8;
  case Family::SL2: return q * (q * q - 1);
  case Family::PSL2: return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
  }
  return 0;
}

inline PermGroup build_factor(const Factor &f, const GroupOptions &opts = {}) {
  if (auto *e = std::get_if<ExplicitGroup>(&f))
    return PermGroup::from_generators(e->degree, e->gens, opts);
  const auto &g = std::get<NamedGroup>(f);
  switch (g.family) {
  case Family::Cyclic: return cyclic_group(g.n, opts);
  case Family::Dihedral: return dihedral_group(g.n, opts);
  case Family::Symmetric: return symmetric_group(g.n, opts);
  case Family::Alternating: return alternating_group(g.n, opts);
  case Family::Quaternion: return quaternion_group(opts);
  case Family::SL2: return construct_sl2(g.n, opts);
  case Family::PSL2: return construct_psl2(g.n, opts);
  }
  throw std::logic_error("build_factor: unknown family");
}

/// Direct product on the disjoint union of the factors' points.
inline PermGroup direct_product(const std::vector<PermGroup> &factors,
                                const GroupOptions &opts = {}) {
  std::size_t degree = 0;
  for (const auto &f : factors)
    degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto &f : factors) {
    for (const auto &s : f.generators())
      gens.push_back(s.embedded(degree, offset));
    offset += f.degree();
  }
  return PermGroup::from_generators(degree, std::move(gens), opts);
}

inline PermGroup build_group(const GroupSpec &spec,
                             const GroupOptions &opts = {}) {
  if (spec.factors.size() == 1)
    return build_factor(spec.factors.front(), opts);
  // Factors are built order-only; only the product needs a table.
  GroupOptions factor_opts = opts;
  factor_opts.enumeration_bound = 0;
  std::vector<PermGroup> parts;
  for (const auto &f : spec.factors)
    parts.push_back(build_factor(f, factor_opts));
  return direct_product(parts, opts);
}

} // namespace g1
