#include "jordkit/quotients.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>

#include "jordkit/checked.hpp"
#include "jordkit/error.hpp"
#include "jordkit/intlin.hpp"

namespace jordkit::quot {

namespace ck = checked;

FiniteGroup::FiniteGroup(std::vector<Label> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  n_ = names_.size();
  if (n_ == 0) throw Error(Errc::InvalidArgument, "empty group");
  if (n_ > kMaxOrder)
    throw Error(Errc::OrderBudgetExceeded, "order " + std::to_string(n_) + " exceeds " +
                                               std::to_string(kMaxOrder));
  if (table_.size() != n_ * n_) throw Error(Errc::InvalidArgument, "table is not order x order");
  for (Label v : table_)
    if (v >= n_) throw Error(Errc::InvalidArgument, "table entry out of range");
  for (std::size_t i = 0; i < n_; ++i)
    if (mul(0, static_cast<Label>(i)) != i || mul(static_cast<Label>(i), 0) != i)
      throw Error(Errc::InvalidArgument, "label 0 is not the identity");

  inv_.assign(n_, 0);
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    bool found = false;
    for (std::size_t j = 0; j < n_; ++j) {
      const Label v = mul(static_cast<Label>(i), static_cast<Label>(j));
      if (seen[v]) throw Error(Errc::InvalidArgument, "row " + std::to_string(i) + " repeats");
      seen[v] = 1;
      if (v == 0) {
        if (mul(static_cast<Label>(j), static_cast<Label>(i)) != 0)
          throw Error(Errc::InvalidArgument, "one-sided inverse");
        inv_[i] = static_cast<Label>(j);
        found = true;
      }
    }
    if (!found) throw Error(Errc::InvalidArgument, "no inverse");
  }

  const auto assoc = [&](Label x, Label y, Label z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      throw Error(Errc::InvalidArgument, "table is not associative");
  };
  if (n_ <= 64) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        for (std::size_t z = 0; z < n_; ++z)
          assoc(static_cast<Label>(x), static_cast<Label>(y), static_cast<Label>(z));
  } else {
    std::mt19937_64 rng(n_);
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
    for (int t = 0; t < 10000; ++t)
      assoc(static_cast<Label>(pick(rng)), static_cast<Label>(pick(rng)), static_cast<Label>(pick(rng)));
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (mul(static_cast<Label>(i), static_cast<Label>(j)) != mul(static_cast<Label>(j), static_cast<Label>(i)))
        return false;
  return true;
}

std::size_t FiniteGroup::element_order(Label x) const {
  std::size_t k = 1;
  for (Label y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t i = 0; i < n_; ++i) e = std::lcm(e, element_order(static_cast<Label>(i)));
  return e;
}

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool operator==(const Bits&) const = default;
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct Closure {
  Bits bits;
  std::vector<Label> elems;
};

// Subgroup generated by base and gens; an empty base means the trivial group.
Closure close(const FiniteGroup& g, const Closure& base, const std::vector<Label>& gens) {
  Closure out = base;
  if (out.elems.empty()) {
    out.bits = Bits(g.order());
    out.bits.set(0);
    out.elems.push_back(0);
  }
  for (std::size_t i = 0; i < out.elems.size(); ++i)
    for (Label s : gens) {
      const Label y = g.mul(out.elems[i], s);
      if (!out.bits.test(y)) {
        out.bits.set(y);
        out.elems.push_back(y);
      }
    }
  return out;
}

}  // namespace

std::vector<Label> FiniteGroup::generators() const {
  std::vector<Label> gens;
  Closure c = close(*this, Closure{}, {});
  for (std::size_t i = 1; i < n_ && c.elems.size() < n_; ++i)
    if (!c.bits.test(i)) {
      gens.push_back(static_cast<Label>(i));
      c = close(*this, Closure{}, gens);
    }
  return gens;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group of order 0");
  if (n > kMaxOrder) throw Error(Errc::OrderBudgetExceeded, "order " + std::to_string(n));
  std::vector<Label> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Label>((i + j) % n);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup heis_quotient(std::int64_t r, const heis::SubgroupSpec& s) {
  const heis::HeisParams hp(r);
  heis::SubgroupInfo info;
  try {
    info = heis::validate_subgroup_spec(hp, s);
  } catch (const Error& e) {
    throw Error(Errc::SpecInvalid, e.what());
  }
  if (info.quotient_order > static_cast<std::int64_t>(kMaxOrder))
    throw Error(Errc::OrderBudgetExceeded, "quotient order " + std::to_string(info.quotient_order));

  const auto h = intlin::hnf(intlin::IntMatrix{{s.a1, s.a2}, {s.b1, s.b2}});
  const std::int64_t h11 = h.h(0, 0), h12 = h.h(0, 1), h22 = h.h(1, 1);
  // eta_i = zeta^u_i1 xi^u_i2 has Z^2 part equal to row i of the HNF.
  const heis::HeisElem zeta = s.zeta(hp), xi = s.xi(hp);
  const heis::HeisElem eta1 = heis::mul(hp, heis::pow(hp, zeta, h.u(0, 0)), heis::pow(hp, xi, h.u(0, 1)));
  const heis::HeisElem eta2 = heis::mul(hp, heis::pow(hp, zeta, h.u(1, 0)), heis::pow(hp, xi, h.u(1, 1)));

  const std::int64_t c = s.c;
  const auto label = [&](const heis::HeisElem& x) {
    return static_cast<Label>((x.a * h22 + x.b) * c + x.c);
  };
  const auto reduce = [&](heis::HeisElem x) {
    const std::int64_t u = ck::floor_div(x.a, h11);
    const std::int64_t v = ck::floor_div(ck::sub(x.b, ck::mul(u, h12)), h22);
    const heis::HeisElem w = heis::mul(hp, heis::pow(hp, eta1, u), heis::pow(hp, eta2, v));
    x = heis::mul(hp, x, heis::inv(hp, w));
    x.c = ck::floor_mod(x.c, c);
    return x;
  };

  const std::size_t n = static_cast<std::size_t>(info.quotient_order);
  std::vector<heis::HeisElem> reps(n);
  std::vector<std::string> names(n);
  for (std::int64_t x = 0; x < h11; ++x)
    for (std::int64_t y = 0; y < h22; ++y)
      for (std::int64_t z = 0; z < c; ++z) {
        const heis::HeisElem e{x, y, z};
        reps[label(e)] = e;
        names[label(e)] = heis::format_elem(e);
      }
  std::vector<Label> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = label(reduce(heis::mul(hp, reps[i], reps[j])));
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup product_with_cyclic(const FiniteGroup& g, std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "cyclic factor of order 0");
  const std::size_t n = g.order() * k;
  if (n > kMaxOrder) throw Error(Errc::OrderBudgetExceeded, "order " + std::to_string(n));
  std::vector<Label> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < k; ++i) {
      names[x * k + i] = g.names()[x] + ":" + std::to_string(i);
      for (std::size_t y = 0; y < g.order(); ++y)
        for (std::size_t j = 0; j < k; ++j)
          table[(x * k + i) * n + y * k + j] =
              static_cast<Label>(g.mul(static_cast<Label>(x), static_cast<Label>(y)) * k + (i + j) % k);
    }
  return FiniteGroup(std::move(table), std::move(names));
}

namespace {

struct Node {
  Closure set;
  std::vector<Label> gens;
};

}  // namespace

std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > kMaxLatticeOrder)
    throw Error(Errc::OrderBudgetExceeded, "subgroup lattice limited to order " +
                                               std::to_string(kMaxLatticeOrder));
  std::vector<Node> nodes;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  std::deque<std::size_t> work;
  const auto add = [&](Node node) {
    if (index.emplace(node.set.bits, nodes.size()).second) {
      work.push_back(nodes.size());
      nodes.push_back(std::move(node));
    }
  };

  add({close(g, Closure{}, {}), {}});
  for (std::size_t x = 1; x < n; ++x) add({close(g, Closure{}, {static_cast<Label>(x)}), {static_cast<Label>(x)}});

  while (!work.empty()) {
    const Node h = nodes[work.front()];
    work.pop_front();
    // <H, x> depends only on the double coset H x H.
    Bits done = h.set.bits;
    for (std::size_t x = 0; x < n; ++x) {
      if (done.test(x)) continue;
      for (Label a : h.set.elems) {
        const Label ax = g.mul(a, static_cast<Label>(x));
        for (Label b : h.set.elems) done.set(g.mul(ax, b));
      }
      std::vector<Label> gens = h.gens;
      gens.push_back(static_cast<Label>(x));
      add({close(g, h.set, gens), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (const Node& node : nodes) {
    Subgroup s = node.set.elems;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  Bits bits(g.order());
  for (Label x : h) bits.set(x);
  for (Label s : g.generators())
    for (Label x : h)
      if (!bits.test(g.mul(g.mul(s, x), g.inv(s)))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (g.mul(h[i], h[j]) != g.mul(h[j], h[i])) return false;
  return true;
}

JordanReport min_normal_abelian_index(const FiniteGroup& g) {
  const auto lattice = subgroup_lattice(g);
  JordanReport rep;
  rep.subgroup_count = lattice.size();
  for (const Subgroup& h : lattice) {
    if (!is_normal(g, h)) continue;
    ++rep.normal_count;
    if (!is_abelian(g, h)) continue;
    ++rep.abelian_normal_count;
    if (h.size() > rep.witness.size()) rep.witness = h;
  }
  rep.min_normal_abelian_index = g.order() / rep.witness.size();
  return rep;
}

BoundAudit audit_bound(const FiniteGroup& g, std::size_t claimed_bound) {
  const auto rep = min_normal_abelian_index(g);
  return {rep.min_normal_abelian_index <= claimed_bound, rep.min_normal_abelian_index};
}

}  // namespace jordkit::quot
