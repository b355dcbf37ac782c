#include "jordkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jordkit/audit.hpp"
#include "jordkit/error.hpp"
#include "jordkit/extensions.hpp"
#include "jordkit/heisenberg.hpp"
#include "jordkit/intlin.hpp"
#include "jordkit/parse.hpp"
#include "jordkit/quotients.hpp"
#include "jordkit/surfaces.hpp"

namespace jordkit::cli {

namespace {

using json = nlohmann::ordered_json;
using intlin::IntMatrix;

struct Flag {
  Flag(std::string n, bool req, std::string h, std::string fb = "", bool pos = false)
      : name(std::move(n)), required(req), help(std::move(h)), fallback(std::move(fb)), positional(pos) {}
  std::string name;
  bool required;
  std::string help;
  std::string fallback;  // used when the flag is absent
  bool positional;
};

class Args {
 public:
  explicit Args(const std::map<std::string, std::string>& v) : v_(v) {}

  bool has(const std::string& name) const {
    auto it = v_.find(name);
    return it != v_.end() && !it->second.empty();
  }
  const std::string& str(const std::string& name) const {
    static const std::string empty;
    auto it = v_.find(name);
    return it == v_.end() ? empty : it->second;
  }
  std::int64_t integer(const std::string& name) const { return parse_int(str(name)); }
  std::optional<std::int64_t> opt_integer(const std::string& name) const {
    return has(name) ? std::optional<std::int64_t>(integer(name)) : std::nullopt;
  }
  bool boolean(const std::string& name) const {
    const std::string& s = str(name);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw Error(Errc::ParseError, "--" + name + " expects true or false");
  }
  IntMatrix matrix(const std::string& name = "matrix") const { return intlin::parse_matrix(str(name)); }
  heis::HeisElem elem(const std::string& name) const { return heis::parse_elem(str(name)); }
  std::vector<std::int64_t> ints(const std::string& name) const { return parse_int_list(str(name)); }

 private:
  const std::map<std::string, std::string>& v_;
};

struct Leaf {
  std::string group;
  std::string name;  // empty: the group itself is the command
  std::string operation;
  std::string help;
  std::vector<Flag> flags;
  std::function<json(const Args&)> handler;
  bool merge_into_top = false;
};

// ---- JSON encodings ----

json to_json(const IntMatrix& m) { return m.to_rows(); }
json to_json(const intlin::IntPoly& p) { return p.coeffs(); }
json to_json(const heis::HeisElem& x) { return json::array({x.a, x.b, x.c}); }
json to_json(const Rational& q) { return to_string(q); }

json to_json(const ext::WangElem& u) { return {{"h", u.h}, {"k", u.k}}; }

json to_json(const ext::WangGroupDesc& d) {
  json j{{"kind", ext::to_string(d.kind())}};
  if (d.is_heis()) j["r"] = d.r();
  if (d.matrix()) j["matrix"] = to_json(*d.matrix());
  if (d.kind() == ext::WangKind::HeisSemidirect) j["p"] = d.twist();
  j["det"] = d.det();
  return j;
}

json to_json(const intlin::EigenProfile& p) {
  json eig = json::array();
  for (const auto& e : p.eigenvalues)
    eig.push_back({{"real", e.real}, {"abs_cmp_one", e.abs_cmp_one}, {"is_one", e.is_one},
                   {"is_minus_one", e.is_minus_one}});
  return {{"charpoly", to_json(p.charpoly)},
          {"discriminant", p.discriminant},
          {"real_count", p.real_count},
          {"complex_pair_count", p.complex_pair_count},
          {"real_below_minus_one", p.real_below_minus_one},
          {"real_at_minus_one", p.real_at_minus_one},
          {"real_inside", p.real_inside},
          {"real_at_one", p.real_at_one},
          {"real_above_one", p.real_above_one},
          {"complex_modulus_cmp", p.complex_modulus_cmp},
          {"eigenvalues", eig},
          {"has_eigenvalue_one", p.has_eigenvalue_one},
          {"has_eigenvalue_minus_one", p.has_eigenvalue_minus_one},
          {"all_real", p.all_real},
          {"inoue_SM_shape", p.inoue_SM_shape},
          {"inoue_Spm_shape", p.inoue_Spm_shape}};
}

json to_json(const quot::FiniteGroup& g) {
  return {{"order", g.order()},
          {"abelian", g.is_abelian()},
          {"exponent", g.exponent()},
          {"names", g.names()},
          {"table", g.table()}};
}

json to_json(const quot::FiniteGroup& g, const quot::JordanReport& r) {
  json names = json::array();
  for (auto x : r.witness) names.push_back(g.names()[x]);
  return {{"order", g.order()},
          {"min_normal_abelian_index", r.min_normal_abelian_index},
          {"witness_subgroup", r.witness},
          {"witness_names", names},
          {"subgroup_count", r.subgroup_count},
          {"normal_count", r.normal_count},
          {"abelian_normal_count", r.abelian_normal_count}};
}

// ---- argument helpers ----

ext::WangGroupDesc desc_from(const Args& a) {
  std::optional<IntMatrix> m;
  if (a.has("matrix")) m = a.matrix();
  std::array<std::int64_t, 2> p{0, 0};
  if (a.has("p")) {
    const auto v = a.ints("p");
    if (v.size() != 2) throw Error(Errc::ParseError, "--p expects p1,p2");
    p = {v[0], v[1]};
  }
  return ext::make_desc(ext::parse_kind(a.str("kind")), a.integer("r"), m, p);
}

ext::WangElem wang_elem(const Args& a, const std::string& name) {
  const auto v = a.ints(name);
  if (v.size() != 4) throw Error(Errc::ParseError, "--" + name + " expects h1,h2,h3,k");
  return {{v[0], v[1], v[2]}, v[3]};
}

heis::SubgroupSpec spec_from_gens(const Args& a) {
  const auto g1 = a.ints("gen1"), g2 = a.ints("gen2");
  if (g1.size() != 3 || g2.size() != 3) throw Error(Errc::ParseError, "--gen1/--gen2 expect three integers");
  return {g1[0], g1[1], g1[2], g2[0], g2[1], g2[2], a.integer("c")};
}

struct QuotSpec {
  std::int64_t r;
  heis::SubgroupSpec s;
};

QuotSpec quot_spec(const Args& a) {
  std::string text = a.str("spec");
  if (text.empty() || text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw Error(Errc::ParseError, "cannot read spec file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    const json j = json::parse(text);
    const auto g1 = j.at("gen1").get<std::vector<std::int64_t>>();
    const auto g2 = j.at("gen2").get<std::vector<std::int64_t>>();
    if (g1.size() != 3 || g2.size() != 3) throw Error(Errc::ParseError, "gen1/gen2 need three integers");
    return {j.at("r").get<std::int64_t>(),
            {g1[0], g1[1], g1[2], g2[0], g2[1], g2[2], j.at("c").get<std::int64_t>()}};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("spec: ") + e.what());
  }
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  const std::int64_t den = parse_int(std::string_view(s).substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator");
  return Rational(parse_int(std::string_view(s).substr(0, slash))) / den;
}

// ---- command table ----

const Flag kMatrix{"matrix", true, "rows separated by ';', entries by ','"};
const Flag kR{"r", true, "Heisenberg parameter r >= 1"};
const Flag kX{"x", true, "element a,b,c"};
const Flag kY{"y", true, "element a,b,c"};
const Flag kGen1{"gen1", true, "a1,a2,a3"};
const Flag kGen2{"gen2", true, "b1,b2,b3"};
const Flag kC{"c", true, "central exponent c"};
const Flag kKind{"kind", true, "LATTICE_SEMIDIRECT, HEIS_SEMIDIRECT or HEIS_DIRECT"};
const Flag kWangR{"r", false, "Heisenberg parameter", "1"};
const Flag kWangMatrix{"matrix", false, "action matrix (absent for HEIS_DIRECT)"};
const Flag kP{"p", false, "twist exponents p1,p2", "0,0"};
const Flag kSpec{"spec", true, "JSON file or inline {\"r\":..,\"gen1\":[..],\"gen2\":[..],\"c\":..}"};

std::vector<Flag> wang_flags(std::vector<Flag> extra = {}) {
  std::vector<Flag> f{kKind, kWangR, kWangMatrix, kP};
  f.insert(f.end(), extra.begin(), extra.end());
  return f;
}

const std::vector<Leaf>& leaves() {
  static const std::vector<Leaf> table = {
      // ---- integer matrices ----
      {"mat", "det", "intlin::det", "determinant", {kMatrix},
       [](const Args& a) { return json(intlin::det(a.matrix())); }},
      {"mat", "charpoly", "intlin::charpoly", "det(x Id - M), lowest degree first", {kMatrix},
       [](const Args& a) { return to_json(intlin::charpoly(a.matrix())); }},
      {"mat", "hnf", "intlin::hnf", "row Hermite normal form H = U M", {kMatrix},
       [](const Args& a) {
         const auto r = intlin::hnf(a.matrix());
         return json{{"H", to_json(r.h)}, {"U", to_json(r.u)}};
       }},
      {"mat", "snf", "intlin::smith_invariants", "Smith invariant factors", {kMatrix},
       [](const Args& a) { return json(intlin::smith_invariants(a.matrix())); }},
      {"mat", "cyclotomic", "intlin::cyclotomic", "cyclotomic polynomial Phi_d", {{"d", true, "order d >= 1"}},
       [](const Args& a) {
         const std::int64_t d = a.integer("d");
         if (d < 1 || d > 10000) throw Error(Errc::InvalidArgument, "d must be in 1..10000");
         return to_json(intlin::cyclotomic(static_cast<int>(d)));
       }},
      {"mat", "quasiunipotent", "intlin::is_quasi_unipotent", "all eigenvalues roots of unity?", {kMatrix},
       [](const Args& a) { return json(intlin::is_quasi_unipotent(a.matrix())); }},
      {"mat", "profile", "intlin::eigenvalue_profile", "exact eigenvalue profile (n = 2, 3)", {kMatrix},
       [](const Args& a) { return to_json(intlin::eigenvalue_profile(a.matrix())); }},
      {"mat", "kthroot", "intlin::kth_root_search", "bounded search for R with R^k = M",
       {kMatrix, {"k", true, "exponent k >= 1"}, {"height", false, "entry bound", "2"}},
       [](const Args& a) {
         const auto r = intlin::kth_root_search(a.matrix(), a.integer("k"), a.integer("height"));
         return r ? to_json(*r) : json(nullptr);
       }},
      {"mat", "centralizer", "intlin::centralizer_class", "centralizer of [[alpha, lambda], [0, beta]] in GL2(C)",
       {{"alpha-equals-beta", true, "true or false"}, {"lambda-zero", true, "true or false"}},
       [](const Args& a) {
         const auto c = intlin::centralizer_class(a.boolean("alpha-equals-beta"), a.boolean("lambda-zero"));
         return json{{"label", intlin::to_string(c.label)}, {"non_canonical", c.non_canonical}};
       }},

      // ---- Heisenberg group ----
      {"heis", "mul", "heisenberg::mul", "x y", {kR, kX, kY},
       [](const Args& a) { return to_json(heis::mul(heis::HeisParams(a.integer("r")), a.elem("x"), a.elem("y"))); }},
      {"heis", "inv", "heisenberg::inv", "x^-1", {kR, kX},
       [](const Args& a) { return to_json(heis::inv(heis::HeisParams(a.integer("r")), a.elem("x"))); }},
      {"heis", "pow", "heisenberg::pow", "x^n", {kR, kX, {"n", true, "integer exponent"}},
       [](const Args& a) {
         return to_json(heis::pow(heis::HeisParams(a.integer("r")), a.elem("x"), a.integer("n")));
       }},
      {"heis", "comm", "heisenberg::commutator", "x y x^-1 y^-1", {kR, kX, kY},
       [](const Args& a) {
         return to_json(heis::commutator(heis::HeisParams(a.integer("r")), a.elem("x"), a.elem("y")));
       }},
      {"heis", "rep", "heisenberg::matrix_rep", "unitriangular rational matrix", {kR, kX},
       [](const Args& a) {
         const auto m = heis::matrix_rep(heis::HeisParams(a.integer("r")), a.elem("x"));
         json rows = json::array();
         for (const auto& row : m) {
           json jr = json::array();
           for (const auto& q : row) jr.push_back(to_json(q));
           rows.push_back(jr);
         }
         return rows;
       }},
      {"heis", "subgroup", "heisenberg::validate_subgroup_spec", "validate <zeta, xi, d3^c>", {kR, kGen1, kGen2, kC},
       [](const Args& a) {
         const auto i = heis::validate_subgroup_spec(heis::HeisParams(a.integer("r")), spec_from_gens(a));
         return json{{"D", i.det},
                     {"r_prime", i.r_prime},
                     {"quotient_order", i.quotient_order},
                     {"jordan_bound", i.jordan_bound}};
       }},
      {"heis", "member", "heisenberg::membership", "is x in <zeta, xi, d3^c>?", {kR, kGen1, kGen2, kC, kX},
       [](const Args& a) {
         return json(heis::membership(heis::HeisParams(a.integer("r")), spec_from_gens(a), a.elem("x")));
       }},
      {"heis", "gencomm", "heisenberg::commutator_of_generators", "[zeta, xi]", {kR, kGen1, kGen2, kC},
       [](const Args& a) {
         return to_json(heis::commutator_of_generators(heis::HeisParams(a.integer("r")), spec_from_gens(a)));
       }},

      // ---- Wang groups ----
      {"wang", "make", "extensions::make_desc", "validate a group descriptor", wang_flags(),
       [](const Args& a) { return to_json(desc_from(a)); }},
      {"wang", "action", "extensions::gamma_action", "gamma^k h gamma^-k",
       wang_flags({{"h", true, "h1,h2,h3"}, {"k", false, "power of gamma", "1"}}),
       [](const Args& a) {
         const auto h = a.ints("h");
         if (h.size() != 3) throw Error(Errc::ParseError, "--h expects three integers");
         return json(ext::gamma_action(desc_from(a), {h[0], h[1], h[2]}, a.integer("k")));
       }},
      {"wang", "mul", "extensions::wang_mul", "u v for u = h gamma^k",
       wang_flags({{"u", true, "h1,h2,h3,k"}, {"v", true, "h1,h2,h3,k"}}),
       [](const Args& a) { return to_json(ext::wang_mul(desc_from(a), wang_elem(a, "u"), wang_elem(a, "v"))); }},
      {"wang", "center", "extensions::center_description", "generators of the center", wang_flags(),
       [](const Args& a) {
         const auto c = ext::center_description(desc_from(a));
         json gens = json::array();
         for (const auto& g : c.generators) gens.push_back(to_json(g));
         return json{{"trivial", c.trivial}, {"generators", gens}};
       }},
      {"wang", "commimage", "extensions::commutator_image", "Im(M - Id) and its index", {kMatrix},
       [](const Args& a) {
         const auto c = ext::commutator_image(a.matrix());
         return json{{"basis", to_json(c.basis)}, {"index", c.index}};
       }},
      {"wang", "classify", "extensions::classify_inoue", "S_M / S_PLUS / S_MINUS / NOT_INOUE", wang_flags(),
       [](const Args& a) {
         const auto t = ext::classify_inoue(desc_from(a));
         json j{{"label", ext::to_string(t.label)}};
         if (!t.failed_condition.empty()) j["failed_condition"] = t.failed_condition;
         j["center_trivial"] = t.center_trivial ? json(*t.center_trivial) : json(nullptr);
         j["profile"] = t.profile ? to_json(*t.profile) : json(nullptr);
         return j;
       }},
      {"wang", "radical", "extensions::power_in_subgroup", "least k with u^k in the commutator image",
       wang_flags({{"u", true, "h1,h2,h3,k"}, {"kmax", false, "search budget", "100"}}),
       [](const Args& a) {
         const auto d = desc_from(a);
         const auto k = ext::power_in_subgroup(
             d, wang_elem(a, "u"), [&](const ext::Fiber& h) { return ext::in_commutator_image(d, h); },
             a.integer("kmax"));
         return k ? json(*k) : json(nullptr);
       }},
      {"wang", "twist", "extensions::twisted_copy", "the copy <d1 gamma^t, d2, d3> of H(r) in H(r) x Z",
       {kR, {"t", true, "twist exponent"}},
       [](const Args& a) {
         const auto c = ext::twisted_copy(a.integer("r"), a.integer("t"));
         json gens = json::array();
         for (const auto& g : c.generators) gens.push_back(to_json(g));
         return json{{"generators", gens},
                     {"relations_hold", c.relations_hold},
                     {"normal", c.normal},
                     {"quotient_infinite_cyclic", c.quotient_infinite_cyclic},
                     {"projection_isomorphism", c.projection_isomorphism},
                     {"r_prime", c.r_prime}};
       }},

      // ---- finite quotients ----
      {"quot", "build", "quotients::heis_quotient", "Cayley table of H(r)/Gamma0", {kSpec},
       [](const Args& a) {
         const auto q = quot_spec(a);
         return to_json(quot::heis_quotient(q.r, q.s));
       }},
      {"quot", "product", "quotients::product_with_cyclic", "H(r)/Gamma0 x Z/k",
       {kSpec, {"k", true, "cyclic factor"}, {"table", false, "include the table", "false"}},
       [](const Args& a) {
         const auto q = quot_spec(a);
         const std::int64_t k = a.integer("k");
         if (k < 1) throw Error(Errc::InvalidArgument, "k must be positive");
         const auto g = quot::product_with_cyclic(quot::heis_quotient(q.r, q.s), static_cast<std::size_t>(k));
         if (a.boolean("table")) return to_json(g);
         return json{{"order", g.order()}, {"abelian", g.is_abelian()}, {"exponent", g.exponent()}};
       }},
      {"quot", "lattice", "quotients::subgroup_lattice", "all subgroups", {kSpec},
       [](const Args& a) {
         const auto q = quot_spec(a);
         const auto lat = quot::subgroup_lattice(quot::heis_quotient(q.r, q.s));
         return json{{"count", lat.size()}, {"subgroups", lat}};
       }},
      {"quot", "jordan", "quotients::min_normal_abelian_index", "least index of a normal abelian subgroup", {kSpec},
       [](const Args& a) {
         const auto q = quot_spec(a);
         const auto g = quot::heis_quotient(q.r, q.s);
         return to_json(g, quot::min_normal_abelian_index(g));
       }},
      {"quot", "audit", "quotients::audit_bound", "measured index against a claimed bound",
       {kSpec, {"bound", false, "claimed bound (default gcd(a1, b1))"}},
       [](const Args& a) {
         const auto q = quot_spec(a);
         std::int64_t bound = a.has("bound") ? a.integer("bound")
                                             : heis::validate_subgroup_spec(heis::HeisParams(q.r), q.s).jordan_bound;
         if (bound < 1) throw Error(Errc::InvalidArgument, "bound must be positive");
         const auto r = quot::audit_bound(quot::heis_quotient(q.r, q.s), static_cast<std::size_t>(bound));
         return json{{"holds", r.holds}, {"measured", r.measured}, {"bound", bound}};
       }},

      // ---- surfaces ----
      {"surface", "classify", "surfaces::classify_surface", "rows of the classification table that fit",
       {{"kodaira", false, "-inf, 0, 1 or 2"},
        {"a", false, "algebraic dimension"},
        {"b1", false, "first Betti number"},
        {"b2", false, "second Betti number"},
        {"chi", false, "topological Euler characteristic"},
        {"c1sq", false, "c1^2"},
        {"projective", false, "true or false"},
        {"all", false, "report every row", "false"}},
       [](const Args& a) {
         surf::SurfaceInvariants inv;
         if (a.has("kodaira")) inv.kodaira = surf::parse_kodaira(a.str("kodaira"));
         if (a.has("a")) inv.algebraic_dim = static_cast<int>(a.integer("a"));
         inv.b1 = a.opt_integer("b1");
         inv.b2 = a.opt_integer("b2");
         inv.chi_top = a.opt_integer("chi");
         inv.c1_sq = a.opt_integer("c1sq");
         if (a.has("projective")) inv.projective = a.boolean("projective");
         const auto rows = a.boolean("all") ? surf::diagnose_rows(inv) : surf::classify_surface(inv);
         json out = json::array();
         for (const auto& r : rows)
           out.push_back({{"label", surf::to_string(r.label)},
                          {"admissible", r.admissible()},
                          {"matched_constraints", r.matched},
                          {"violated_constraints", r.violated}});
         return out;
       }},
      {"surface", "noether", "surfaces::noether_chi", "(c1^2 + chi_top) / 12",
       {{"c1sq", true, "c1^2"}, {"chi", true, "chi_top"}},
       [](const Args& a) {
         const auto n = surf::noether_chi(a.integer("c1sq"), a.integer("chi"));
         return json{{"value", to_json(n.value)}, {"integral", n.integral}};
       }},
      {"surface", "multfibers", "surfaces::mult_fiber_solutions", "multisets with sum (1 - 1/m_i) = target",
       {{"target", true, "rational, e.g. 2 or 3/2"},
        {"max-count", false, "at most 8", "4"},
        {"max-m", false, "at most 1000", "100"}},
       [](const Args& a) {
         return json(surf::mult_fiber_solutions(parse_rational(a.str("target")),
                                                static_cast<int>(a.integer("max-count")), a.integer("max-m")));
       }},
      {"surface", "fibsign", "surfaces::fibration_kodaira_sign", "sign of 2g - 2 + deg L + sum (1 - 1/m_i)",
       {{"g", true, "base genus"}, {"deg-l", false, "degree of L", "0"}, {"m", false, "multiplicities m1,m2,..."}},
       [](const Args& a) {
         const auto ms = a.has("m") ? a.ints("m") : std::vector<std::int64_t>{};
         return json(surf::to_string(surf::fibration_kodaira_sign(a.integer("g"), a.integer("deg-l"), ms)));
       }},
      {"surface", "lefschetz", "surfaces::fixed_point_audit", "fixed points against the Lefschetz number",
       {{"chi", true, "chi_top"}, {"trace", true, "trace on H^1"}},
       [](const Args& a) {
         const auto f = surf::fixed_point_audit(a.integer("chi"), a.integer("trace"));
         return json{{"isolated_fixed_points", f.isolated_fixed_points},
                     {"lefschetz_number", f.lefschetz_number},
                     {"consistent", f.consistent}};
       }},

      // ---- audit suites ----
      {"verify", "", "audit::run_suite", "run a seeded audit suite",
       {{"suite", true, "suite name", "", true}, {"trials", false, "number of trials (0: suite default)", "0"},
        {"seed", false, "random seed", "0"}},
       [](const Args& a) {
         const std::int64_t seed = a.integer("seed");
         if (seed < 0) throw Error(Errc::InvalidArgument, "seed must be nonnegative");
         const auto r = audit::run_suite(a.str("suite"), a.integer("trials"), static_cast<std::uint64_t>(seed));
         return json{{"suite", r.suite},     {"seed", r.seed},         {"trials", r.trials},
                     {"checked", r.checked}, {"violations", r.violations}, {"failures", r.failures},
                     {"stats", r.stats}};
       },
       true},
  };
  return table;
}

json error_json(const std::string& name, const std::string& message) {
  return {{"status", "error"}, {"error", name}, {"message", message}};
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

std::vector<CommandInfo> command_registry() {
  std::vector<CommandInfo> out;
  for (const Leaf& l : leaves()) out.push_back({l.name.empty() ? l.group : l.group + " " + l.name, l.operation});
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"jordkit: exact group theory and surface arithmetic, JSON output", "jordkit"};
  app.set_help_flag("--help", "print help");  // -h stays free for wang action
  app.fallthrough();
  app.require_subcommand(1);
  bool pretty = false, timing = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_flag("--timing", timing, "add timing_ms to the output");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<const Leaf*, CLI::App*>> bound;
  for (const Leaf& leaf : leaves()) {
    CLI::App*& group = groups[leaf.group];
    if (!group) {
      group = app.add_subcommand(leaf.group, leaf.name.empty() ? leaf.help : leaf.group + " operations");
      if (!leaf.name.empty()) group->require_subcommand(1);
    }
    CLI::App* cmd = leaf.name.empty() ? group : group->add_subcommand(leaf.name, leaf.help);
    for (const Flag& f : leaf.flags) {
      const std::string key = leaf.group + "/" + leaf.name + "/" + f.name;
      CLI::Option* opt = cmd->add_option(f.positional ? f.name : "--" + f.name, values[key], f.help);
      if (f.required) opt->required();
      if (!f.fallback.empty()) opt->default_str(f.fallback);
    }
    bound.emplace_back(&leaf, cmd);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    // Name the flags the failing command expects.
    CLI::App* where = &app;
    for (auto& [leaf, cmd] : bound)
      if (cmd->parsed()) where = cmd;
    for (auto& [name, group] : groups)
      if (group->parsed() && where == &app) where = group;
    json j = error_json("UsageError", e.what());
    j["usage"] = where->help();
    emit(out, j, pretty);
    return 2;
  }

  for (auto& [leaf, cmd] : bound) {
    if (!cmd->parsed()) continue;
    std::map<std::string, std::string> mine;
    for (const Flag& f : leaf->flags) {
      std::string v = values[leaf->group + "/" + leaf->name + "/" + f.name];
      mine[f.name] = v.empty() ? f.fallback : v;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const json result = leaf->handler(Args(mine));
      json j{{"status", "ok"}};
      if (leaf->merge_into_top)
        for (auto it = result.begin(); it != result.end(); ++it) j[it.key()] = it.value();
      else
        j["result"] = result;
      if (timing)
        j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                             .count();
      emit(out, j, pretty);
      return 0;
    } catch (const Error& e) {
      emit(out, error_json(std::string(e.name()), e.what()), pretty);
      return e.code() == Errc::ParseError ? 2 : 1;
    }
  }
  emit(out, error_json("UsageError", "no command given"), pretty);
  return 2;
}

}  // namespace jordkit::cli
