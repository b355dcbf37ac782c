#include "jordkit/extensions.hpp"

#include <algorithm>
#include <cctype>

#include "jordkit/checked.hpp"
#include "jordkit/error.hpp"

namespace jordkit::ext {

namespace ck = checked;
using heis::HeisElem;
using heis::HeisParams;

std::string_view to_string(WangKind k) {
  switch (k) {
    case WangKind::LatticeSemidirect: return "LATTICE_SEMIDIRECT";
    case WangKind::HeisSemidirect: return "HEIS_SEMIDIRECT";
    case WangKind::HeisDirect: return "HEIS_DIRECT";
  }
  return "?";
}

WangKind parse_kind(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto k : {WangKind::LatticeSemidirect, WangKind::HeisSemidirect, WangKind::HeisDirect})
    if (up == to_string(k)) return k;
  throw Error(Errc::ParseError, "unknown group kind '" + std::string(text) + "'");
}

WangGroupDesc make_desc(WangKind kind, std::int64_t r, std::optional<IntMatrix> m,
                        std::array<std::int64_t, 2> p) {
  WangGroupDesc d;
  d.kind_ = kind;
  if (kind == WangKind::LatticeSemidirect) {
    if (!m || m->dim() != 3) throw Error(Errc::ShapeMismatch, "lattice kind needs a 3x3 matrix");
    d.r_ = 1;
  } else {
    if (r < 1) throw Error(Errc::InvalidArgument, "r must be positive");
    d.r_ = r;
    if (kind == WangKind::HeisSemidirect) {
      if (!m || m->dim() != 2) throw Error(Errc::ShapeMismatch, "HEIS_SEMIDIRECT needs a 2x2 matrix");
      d.p_ = p;
    } else if (m) {
      throw Error(Errc::ShapeMismatch, "HEIS_DIRECT takes no matrix");
    }
  }
  if (m) {
    const std::int64_t det = intlin::det(*m);
    if (det != 1 && det != -1)
      throw Error(Errc::NotUnimodular, "det M = " + std::to_string(det));
    d.det_ = det;
  }
  d.m_ = std::move(m);
  return d;
}

namespace {

HeisElem as_heis(const Fiber& f) { return {f[0], f[1], f[2]}; }
Fiber as_fiber(const HeisElem& x) { return {x.a, x.b, x.c}; }

// One application of gamma on H(r).
HeisElem heis_phi(const WangGroupDesc& d, const HeisParams& hp, const HeisElem& h) {
  const IntMatrix& m = *d.matrix();
  const HeisElem img1 = heis::word(hp, m(0, 0), m(1, 0), d.twist()[0]);
  const HeisElem img2 = heis::word(hp, m(0, 1), m(1, 1), d.twist()[1]);
  const std::int64_t e = ck::sub(h.c, ck::mul(hp.r(), ck::mul(h.a, h.b)));
  HeisElem out = heis::mul(hp, heis::pow(hp, img1, h.a), heis::pow(hp, img2, h.b));
  return heis::mul(hp, out, HeisElem{0, 0, ck::mul(d.det(), e)});
}

HeisElem heis_phi_inv(const WangGroupDesc& d, const HeisParams& hp, const IntMatrix& minv,
                      const HeisElem& h) {
  const std::int64_t a = ck::add(ck::mul(minv(0, 0), h.a), ck::mul(minv(0, 1), h.b));
  const std::int64_t b = ck::add(ck::mul(minv(1, 0), h.a), ck::mul(minv(1, 1), h.b));
  const HeisElem w = heis_phi(d, hp, {a, b, 0});
  return {a, b, ck::mul(d.det(), ck::sub(h.c, w.c))};
}

}  // namespace

Fiber fiber_mul(const WangGroupDesc& d, const Fiber& x, const Fiber& y) {
  if (!d.is_heis()) return {ck::add(x[0], y[0]), ck::add(x[1], y[1]), ck::add(x[2], y[2])};
  return as_fiber(heis::mul(HeisParams(d.r()), as_heis(x), as_heis(y)));
}

Fiber fiber_inv(const WangGroupDesc& d, const Fiber& x) {
  if (!d.is_heis()) return {ck::neg(x[0]), ck::neg(x[1]), ck::neg(x[2])};
  return as_fiber(heis::inv(HeisParams(d.r()), as_heis(x)));
}

Fiber gamma_action(const WangGroupDesc& d, const Fiber& h, std::int64_t k) {
  switch (d.kind()) {
    case WangKind::HeisDirect:
      return h;
    case WangKind::LatticeSemidirect: {
      const auto v = intlin::power(*d.matrix(), k) * std::span<const std::int64_t>(h);
      return {v[0], v[1], v[2]};
    }
    case WangKind::HeisSemidirect: {
      const HeisParams hp(d.r());
      HeisElem x = as_heis(h);
      if (k >= 0) {
        for (std::int64_t i = 0; i < k; ++i) x = heis_phi(d, hp, x);
      } else {
        const IntMatrix minv = intlin::unimodular_inverse(*d.matrix());
        for (std::int64_t i = 0; i > k; --i) x = heis_phi_inv(d, hp, minv, x);
      }
      return as_fiber(x);
    }
  }
  return h;
}

WangElem wang_mul(const WangGroupDesc& d, const WangElem& u, const WangElem& v) {
  return {fiber_mul(d, u.h, gamma_action(d, v.h, u.k)), ck::add(u.k, v.k)};
}

WangElem wang_inv(const WangGroupDesc& d, const WangElem& u) {
  const std::int64_t k = ck::neg(u.k);
  return {gamma_action(d, fiber_inv(d, u.h), k), k};
}

WangElem wang_pow(const WangGroupDesc& d, const WangElem& u, std::int64_t n) {
  WangElem base = n < 0 ? wang_inv(d, u) : u;
  std::uint64_t e = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  WangElem acc;
  while (e) {
    if (e & 1) acc = wang_mul(d, acc, base);
    e >>= 1;
    if (e) base = wang_mul(d, base, base);
  }
  return acc;
}

WangElem wang_commutator(const WangGroupDesc& d, const WangElem& u, const WangElem& v) {
  return wang_mul(d, wang_mul(d, u, v), wang_inv(d, wang_mul(d, v, u)));
}

std::vector<WangElem> generators(const WangGroupDesc&) {
  return {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{0, 0, 0}, 1}};
}

namespace {

void require_no_eigenvalue_one(const IntMatrix& m) {
  if (intlin::charpoly(m).eval(1) == 0)
    throw Error(Errc::EigenvalueOnePresent, "charpoly(1) = 0");
}

}  // namespace

CenterDescription center_description(const WangGroupDesc& d) {
  CenterDescription out;
  if (d.kind() == WangKind::HeisDirect) {
    out.trivial = false;
    out.generators = {{{0, 0, 1}, 0}, {{0, 0, 0}, 1}};
    return out;
  }
  require_no_eigenvalue_one(*d.matrix());
  if (d.kind() == WangKind::HeisSemidirect && d.det() == 1) out.generators.push_back({{0, 0, 1}, 0});
  const auto gens = generators(d);
  for (std::int64_t m = 1; m <= 12; ++m) {
    const bool fixes = std::all_of(gens.begin(), gens.begin() + 3, [&](const WangElem& g) {
      return gamma_action(d, g.h, m) == g.h;
    });
    if (fixes) {
      out.generators.push_back({{0, 0, 0}, m});
      break;
    }
  }
  out.trivial = out.generators.empty();
  return out;
}

CommutatorImage commutator_image(const IntMatrix& m) {
  const IntMatrix a = m - IntMatrix::identity(m.dim());
  const std::int64_t det = intlin::det(a);
  if (det == 0) throw Error(Errc::EigenvalueOnePresent, "det(M - Id) = 0");
  return {intlin::hnf(intlin::transpose(a)).h, ck::abs(det)};
}

bool in_commutator_image(const WangGroupDesc& d, const Fiber& h) {
  if (d.kind() == WangKind::HeisDirect) return h[0] == 0 && h[1] == 0;
  const IntMatrix& m = *d.matrix();
  const IntMatrix a = m - IntMatrix::identity(m.dim());
  const std::int64_t det = intlin::det(a);
  if (det == 0) throw Error(Errc::EigenvalueOnePresent, "det(M - Id) = 0");
  const std::span<const std::int64_t> v(h.data(), static_cast<std::size_t>(m.dim()));
  const auto x = intlin::adjugate(a) * v;
  return std::all_of(x.begin(), x.end(), [&](std::int64_t xi) { return xi % det == 0; });
}

std::string_view to_string(InoueLabel l) {
  switch (l) {
    case InoueLabel::SM: return "S_M";
    case InoueLabel::SPlus: return "S_PLUS";
    case InoueLabel::SMinus: return "S_MINUS";
    case InoueLabel::NotInoue: return "NOT_INOUE";
  }
  return "?";
}

InoueType classify_inoue(const WangGroupDesc& d) {
  InoueType out;
  if (d.kind() == WangKind::HeisDirect) {
    out.failed_condition = "direct product: gamma acts trivially";
    out.center_trivial = false;
    return out;
  }
  const IntMatrix& m = *d.matrix();
  out.profile = intlin::eigenvalue_profile(m);
  const auto& pr = *out.profile;
  if (pr.has_eigenvalue_one) {
    out.failed_condition = "M has eigenvalue 1";
    return out;
  }
  out.center_trivial = center_description(d).trivial;
  if (intlin::is_quasi_unipotent(m)) {
    out.failed_condition = "all eigenvalues of M are roots of unity";
    return out;
  }
  if (d.kind() == WangKind::LatticeSemidirect) {
    if (!pr.inoue_SM_shape) {
      out.failed_condition = "M needs one real eigenvalue > 1 and a non-real pair";
      return out;
    }
    out.label = InoueLabel::SM;
    return out;
  }
  if (!pr.inoue_Spm_shape) {
    out.failed_condition = "M needs two real eigenvalues";
    return out;
  }
  out.label = d.det() == 1 ? InoueLabel::SPlus : InoueLabel::SMinus;
  return out;
}

std::optional<std::int64_t> power_in_subgroup(const WangGroupDesc& d, const WangElem& u,
                                              const std::function<bool(const Fiber&)>& pred,
                                              std::int64_t k_max) {
  if (k_max < 1) throw Error(Errc::InvalidArgument, "k_max must be positive");
  if (u.k != 0) return std::nullopt;
  Fiber x{0, 0, 0};
  try {
    for (std::int64_t k = 1; k <= k_max; ++k) {
      x = fiber_mul(d, x, u.h);
      if (pred(x)) return k;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
  }
  return std::nullopt;
}

TwistedCopy twisted_copy(std::int64_t r, std::int64_t t) {
  const WangGroupDesc d = make_desc(WangKind::HeisDirect, r, std::nullopt);
  TwistedCopy out;
  out.generators = {WangElem{{1, 0, 0}, t}, WangElem{{0, 1, 0}, 0}, WangElem{{0, 0, 1}, 0}};
  const auto& [g1, g2, g3] = out.generators;
  const WangElem e{};

  const WangElem c12 = wang_commutator(d, g1, g2);
  out.relations_hold = c12 == wang_pow(d, g3, r) && wang_commutator(d, g1, g3) == e &&
                       wang_commutator(d, g2, g3) == e;
  if (c12.h[0] == 0 && c12.h[1] == 0 && c12.k == 0) out.r_prime = c12.h[2];

  // The copy is the kernel of chi(h, k) = k - t a, a homomorphism onto Z.
  const auto chi = [&](const WangElem& u) { return ck::sub(u.k, ck::mul(t, u.h[0])); };
  out.normal = true;
  for (const WangElem& s : generators(d))
    for (const WangElem& s2 : {s, wang_inv(d, s)})
      for (const WangElem& g : out.generators)
        out.normal = out.normal && chi(wang_mul(d, wang_mul(d, s2, g), wang_inv(d, s2))) == 0;
  out.quotient_infinite_cyclic = chi(WangElem{{0, 0, 0}, 1}) == 1 &&
                                 std::all_of(out.generators.begin(), out.generators.end(),
                                             [&](const WangElem& g) { return chi(g) == 0; });
  out.projection_isomorphism = g1.h == Fiber{1, 0, 0} && g2.h == Fiber{0, 1, 0} &&
                               g3.h == Fiber{0, 0, 1} && out.quotient_infinite_cyclic;
  return out;
}

}  // namespace jordkit::ext
