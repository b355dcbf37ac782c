#include "jordkit/audit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jordkit/error.hpp"
#include "jordkit/extensions.hpp"
#include "jordkit/intlin.hpp"
#include "jordkit/quotients.hpp"
#include "jordkit/surfaces.hpp"

namespace jordkit::audit {

using heis::HeisElem;
using heis::HeisParams;
using heis::SubgroupSpec;
using intlin::IntMatrix;

void Report::expect(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++violations;
  if (failures.size() < 10) failures.push_back(what);
}

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Report start(std::string_view name, std::int64_t trials, std::int64_t fallback, std::uint64_t seed) {
  Report r;
  r.suite = std::string(name);
  r.seed = seed;
  r.trials = trials > 0 ? trials : fallback;
  return r;
}

std::string describe(std::int64_t r, const SubgroupSpec& s) {
  return "r=" + std::to_string(r) + " gen1=" + std::to_string(s.a1) + "," + std::to_string(s.a2) + "," +
         std::to_string(s.a3) + " gen2=" + std::to_string(s.b1) + "," + std::to_string(s.b2) + "," +
         std::to_string(s.b3) + " c=" + std::to_string(s.c);
}

void note_max(Report& rep, const std::string& key, std::int64_t v) {
  auto [it, fresh] = rep.stats.emplace(key, v);
  if (!fresh) it->second = std::max(it->second, v);
}

std::int64_t commutator_subgroup_order(const quot::FiniteGroup& g) {
  std::set<quot::Label> seen{0};
  std::vector<quot::Label> elems{0};
  std::vector<quot::Label> gens;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto xl = static_cast<quot::Label>(x), yl = static_cast<quot::Label>(y);
      const quot::Label c = g.mul(g.mul(xl, yl), g.inv(g.mul(yl, xl)));
      if (seen.insert(c).second) {
        gens.push_back(c);
        elems.push_back(c);
      }
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (quot::Label s : gens) {
      const quot::Label y = g.mul(elems[i], s);
      if (seen.insert(y).second) elems.push_back(y);
    }
  return static_cast<std::int64_t>(elems.size());
}

quot::Label label_of(const quot::FiniteGroup& g, const HeisElem& x) {
  const auto& names = g.names();
  const auto it = std::find(names.begin(), names.end(), heis::format_elem(x));
  return it == names.end() ? 0 : static_cast<quot::Label>(it - names.begin());
}

IntMatrix random_unimodular2(std::mt19937_64& rng, std::int64_t bound) {
  while (true) {
    IntMatrix m{{uniform(rng, -bound, bound), uniform(rng, -bound, bound)},
                {uniform(rng, -bound, bound), uniform(rng, -bound, bound)}};
    const std::int64_t d = intlin::det(m);
    if (d == 1 || d == -1) return m;
  }
}

}  // namespace

SubgroupSpec random_valid_spec(std::mt19937_64& rng, std::int64_t r, std::int64_t max_order) {
  while (true) {
    SubgroupSpec s{uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6),
                   uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6), 1};
    const std::int64_t d = std::abs(s.det());
    if (d == 0 || d > max_order) continue;
    const std::int64_t rg = r * std::gcd(std::gcd(s.a1, s.a2), std::gcd(s.b1, s.b2));
    std::vector<std::int64_t> cs;
    for (std::int64_t c = 1; c <= rg; ++c)
      if (rg % c == 0 && d * c <= max_order) cs.push_back(c);
    s.c = cs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(cs.size()) - 1))];
    return s;
  }
}

Report heis_subgroups(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("heis-subgroups", trials, 200, seed);
  std::mt19937_64 rng(seed);
  const auto check = [&](std::int64_t r, const SubgroupSpec& s) {
    const HeisParams hp(r);
    const std::string tag = describe(r, s);
    const auto info = heis::validate_subgroup_spec(hp, s);
    const auto g = quot::heis_quotient(r, s);
    const auto jordan = quot::min_normal_abelian_index(g);
    const auto measured = static_cast<std::int64_t>(jordan.min_normal_abelian_index);
    rep.expect(measured <= info.jordan_bound,
               tag + ": index " + std::to_string(measured) + " > gcd(a1,b1) = " + std::to_string(info.jordan_bound));
    rep.expect(heis::commutator_of_generators(hp, s) == HeisElem{0, 0, r * info.det},
               tag + ": [zeta, xi] != d3^(r D)");
    // r' from the table: |G| = |D| c and d3 has order c in G.
    const auto order = static_cast<std::int64_t>(g.order());
    const auto ord3 = static_cast<std::int64_t>(g.element_order(label_of(g, {0, 0, 1})));
    rep.expect(ord3 == s.c && r * order == info.r_prime * ord3 * ord3,
               tag + ": r' = " + std::to_string(info.r_prime) + " disagrees with the quotient");
    // [G, G] is generated by the image of d3^r.
    rep.expect(commutator_subgroup_order(g) == s.c / std::gcd(r, s.c), tag + ": |[G,G]| != c / gcd(r, c)");
    note_max(rep, "max_measured_index", measured);
    note_max(rep, "max_order", order);
    if (measured == info.jordan_bound) rep.stats["tight"] += 1;
  };
  check(1, {2, 0, 0, 0, 2, 0, 2});
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const std::int64_t r = uniform(rng, 1, 4);
    check(r, random_valid_spec(rng, r, 400));
  }
  return rep;
}

Report heis_quotients(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("heis-quotients", trials, 100, seed);
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const std::int64_t r2 = uniform(rng, 1, 4);
    const HeisParams hp(r2);
    const SubgroupSpec s = random_valid_spec(rng, r2, 400);
    const auto info = heis::validate_subgroup_spec(hp, s);
    const std::int64_t r1 = info.r_prime;
    const std::string tag = describe(r2, s) + " r1=" + std::to_string(r1);
    // The subgroup is H(r1): [zeta, xi] = (d3^c)^(r1 sign D).
    const std::int64_t sign = info.det > 0 ? 1 : -1;
    rep.expect(heis::commutator_of_generators(hp, s) == HeisElem{0, 0, s.c * r1 * sign},
               tag + ": subgroup is not H(r1)");
    const auto audit = quot::audit_bound(quot::heis_quotient(r2, s), static_cast<std::size_t>(r1));
    rep.expect(audit.holds, tag + ": index " + std::to_string(audit.measured) + " > r1");
    note_max(rep, "max_measured_index", static_cast<std::int64_t>(audit.measured));
  }
  return rep;
}

Report heis_direct(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("heis-direct", trials, 50, seed);
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const std::int64_t r = uniform(rng, 1, 4);
    const SubgroupSpec s = random_valid_spec(rng, r, 128);
    const auto info = heis::validate_subgroup_spec(HeisParams(r), s);
    const auto g0 = quot::heis_quotient(r, s);
    const auto k = static_cast<std::size_t>(uniform(rng, 1, std::min<std::int64_t>(4, 512 / static_cast<std::int64_t>(g0.order()))));
    const auto audit = quot::audit_bound(quot::product_with_cyclic(g0, k), static_cast<std::size_t>(info.r_prime));
    rep.expect(audit.holds, describe(r, s) + " k=" + std::to_string(k) + ": index " +
                                std::to_string(audit.measured) + " > r' = " + std::to_string(info.r_prime));
    note_max(rep, "max_measured_index", static_cast<std::int64_t>(audit.measured));
  }
  return rep;
}

Report semidirect_center(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("semidirect-center", trials, 50, seed);
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const IntMatrix m = random_unimodular2(rng, 5);
    const std::int64_t r = uniform(rng, 1, 6);
    const auto d = ext::make_desc(ext::WangKind::HeisSemidirect, r, m, {uniform(rng, -20, 20), uniform(rng, -20, 20)});
    const ext::WangElem g{{0, 0, 0}, 1};
    const auto conj = ext::wang_mul(d, ext::wang_mul(d, g, {{0, 0, 1}, 0}), ext::wang_inv(d, g));
    rep.expect(conj == ext::WangElem{{0, 0, d.det()}, 0},
               "M=" + intlin::format_matrix(m) + ": gamma d3 gamma^-1 != d3^det");
  }
  return rep;
}

Report matrix_root(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("matrix-root", trials, 100, seed);
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const IntMatrix root = random_unimodular2(rng, 2);
    const std::int64_t k = uniform(rng, 2, 4);
    const IntMatrix m = intlin::power(root, k);
    const auto found = intlin::kth_root_search(m, k, 2);
    rep.expect(found && intlin::power(*found, k) == m,
               "R=" + intlin::format_matrix(root) + " k=" + std::to_string(k) + ": no root recovered");
  }
  return rep;
}

Report quasiunipotent_oracle(std::int64_t, std::uint64_t seed) {
  Report rep = start("quasiunipotent-oracle", 625, 625, seed);
  const IntMatrix id = IntMatrix::identity(2);
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t e = -2; e <= 2; ++e) {
          const IntMatrix m{{a, b}, {c, e}};
          bool brute = false;
          IntMatrix mk = id;
          for (int k = 1; k <= 12 && !brute; ++k) {
            mk = mk * m;
            const IntMatrix n = mk - id;
            brute = n * n == IntMatrix(2);
          }
          rep.expect(intlin::is_quasi_unipotent(m) == brute, "M=" + intlin::format_matrix(m));
          if (brute) rep.stats["quasi_unipotent"] += 1;
        }
  return rep;
}

Report group_axioms(std::int64_t trials, std::uint64_t seed) {
  Report rep = start("group-axioms", trials, 10000, seed);
  std::mt19937_64 rng(seed);
  const auto elem = [&](std::int64_t bound) {
    return HeisElem{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
  };
  for (std::int64_t t = 0; t < rep.trials; ++t) {
    const HeisParams hp(uniform(rng, 1, 5));
    const HeisElem x = elem(50), y = elem(50), z = elem(50);
    rep.expect(heis::mul(hp, heis::mul(hp, x, y), z) == heis::mul(hp, x, heis::mul(hp, y, z)),
               "H(r) associativity " + heis::format_elem(x) + " " + heis::format_elem(y) + " " + heis::format_elem(z));
  }
  for (std::int64_t t = 0; t < std::max<std::int64_t>(rep.trials / 10, 1); ++t) {
    const HeisParams hp(uniform(rng, 1, 5));
    const HeisElem x = elem(50), y = elem(50);
    const auto mx = heis::matrix_rep(hp, x), my = heis::matrix_rep(hp, y), mxy = heis::matrix_rep(hp, heis::mul(hp, x, y));
    heis::RationalMatrix3 prod{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) prod[i][j] += mx[i][k] * my[k][j];
    rep.expect(prod == mxy, "matrix_rep not multiplicative at " + heis::format_elem(x) + " " + heis::format_elem(y));
  }
  const std::vector<ext::WangGroupDesc> descs{
      ext::make_desc(ext::WangKind::HeisSemidirect, 2, IntMatrix{{2, 1}, {1, 1}}, {3, -1}),
      ext::make_desc(ext::WangKind::HeisSemidirect, 1, IntMatrix{{1, 1}, {1, 0}}, {0, 2}),
      ext::make_desc(ext::WangKind::LatticeSemidirect, 1, intlin::companion(intlin::IntPoly({-1, -1, 0, 1}))),
      ext::make_desc(ext::WangKind::HeisDirect, 3, std::nullopt),
  };
  const auto fiber = [&](std::int64_t bound) {
    return ext::Fiber{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
  };
  for (const auto& d : descs) {
    const std::string kind(ext::to_string(d.kind()));
    for (std::int64_t t = 0; t < std::max<std::int64_t>(rep.trials / 10, 1); ++t) {
      const ext::Fiber x = fiber(6), y = fiber(6);
      const std::int64_t k1 = uniform(rng, -3, 3), k2 = uniform(rng, -3, 3);
      rep.expect(ext::gamma_action(d, ext::fiber_mul(d, x, y), k1) ==
                     ext::fiber_mul(d, ext::gamma_action(d, x, k1), ext::gamma_action(d, y, k1)),
                 kind + ": gamma action is not a homomorphism");
      rep.expect(ext::gamma_action(d, x, k1 + k2) == ext::gamma_action(d, ext::gamma_action(d, x, k2), k1),
                 kind + ": gamma^(k1+k2) != gamma^k1 gamma^k2");
      const ext::WangElem u{fiber(4), uniform(rng, -2, 2)}, v{fiber(4), uniform(rng, -2, 2)},
          w{fiber(4), uniform(rng, -2, 2)};
      rep.expect(ext::wang_mul(d, ext::wang_mul(d, u, v), w) == ext::wang_mul(d, u, ext::wang_mul(d, v, w)),
                 kind + ": wang_mul is not associative");
    }
  }
  return rep;
}

Report classification_table(std::int64_t, std::uint64_t seed) {
  Report rep = start("classification-table", 1, 1, seed);
  using K = surf::KodairaDim;
  using L = surf::SurfaceLabel;
  struct Case {
    L label;
    K k;
    int a;
    std::optional<std::int64_t> b1;
    std::int64_t chi;
  };
  // Printed values; inequality cells at the least value with b2 >= 0.
  const std::vector<Case> cases{
      {L::Rational, K::NegInf, 2, 0, 3},        {L::Rational, K::NegInf, 2, 0, 4},
      {L::RuledGPositive, K::NegInf, 2, 2, 0},  {L::RuledGPositive, K::NegInf, 2, 4, -4},
      {L::ClassVII, K::NegInf, 0, 1, 0},        {L::ClassVII, K::NegInf, 1, 1, 0},
      {L::Torus, K::Zero, 0, 4, 0},             {L::Torus, K::Zero, 1, 4, 0},
      {L::Torus, K::Zero, 2, 4, 0},             {L::K3, K::Zero, 0, 0, 24},
      {L::K3, K::Zero, 1, 0, 24},               {L::K3, K::Zero, 2, 0, 24},
      {L::Enriques, K::Zero, 2, 0, 12},         {L::Bielliptic, K::Zero, 2, 2, 0},
      {L::PrimaryKodaira, K::Zero, 1, 3, 0},    {L::SecondaryKodaira, K::Zero, 1, 1, 0},
      {L::ProperlyElliptic, K::One, 1, {}, 0},  {L::ProperlyElliptic, K::One, 2, {}, 0},
      {L::GeneralType, K::Two, 2, 0, 3},
  };
  std::set<L> recovered;
  for (const Case& c : cases) {
    surf::SurfaceInvariants inv;
    inv.kodaira = c.k;
    inv.algebraic_dim = c.a;
    inv.b1 = c.b1;
    inv.chi_top = c.chi;
    const auto rows = surf::classify_surface(inv);
    const bool found = std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.label == c.label; });
    rep.expect(found, std::string(surf::to_string(c.label)) + " not recovered from its printed values");
    if (found) recovered.insert(c.label);
  }
  rep.expect(recovered.size() == static_cast<std::size_t>(surf::kRowCount), "not every row recovered");
  for (std::int64_t b1 : {1, 3, 5}) {
    surf::SurfaceInvariants inv;
    inv.kodaira = K::Two;
    inv.b1 = b1;
    rep.expect(surf::classify_surface(inv).empty(), "kodaira 2 with odd b1 matched a row");
  }
  rep.stats["rows_recovered"] = static_cast<std::int64_t>(recovered.size());
  return rep;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "heis-subgroups",   "heis-quotients", "heis-direct",  "semidirect-center",
      "matrix-root",      "quasiunipotent-oracle", "group-axioms", "classification-table"};
  return names;
}

Report run_suite(std::string_view name, std::int64_t trials, std::uint64_t seed) {
  using Fn = Report (*)(std::int64_t, std::uint64_t);
  static const std::map<std::string_view, Fn> table{
      {"heis-subgroups", heis_subgroups},
      {"heis-quotients", heis_quotients},
      {"heis-direct", heis_direct},
      {"semidirect-center", semidirect_center},
      {"matrix-root", matrix_root},
      {"quasiunipotent-oracle", quasiunipotent_oracle},
      {"group-axioms", group_axioms},
      {"classification-table", classification_table},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  return it->second(trials, seed);
}

}  // namespace jordkit::audit
