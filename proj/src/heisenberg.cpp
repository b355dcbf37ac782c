#include "jordkit/heisenberg.hpp"

#include "jordkit/checked.hpp"
#include "jordkit/error.hpp"
#include "jordkit/parse.hpp"

namespace jordkit::heis {

namespace ck = jordkit::checked;

HeisParams::HeisParams(std::int64_t r) : r_(r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "Heisenberg parameter r must be >= 1");
}

HeisElem mul(const HeisParams& p, const HeisElem& x, const HeisElem& y) {
  return {ck::add(x.a, y.a), ck::add(x.b, y.b),
          ck::add(ck::add(x.c, y.c), ck::mul(p.r(), ck::mul(x.a, y.b)))};
}

HeisElem inv(const HeisParams& p, const HeisElem& x) {
  return {ck::neg(x.a), ck::neg(x.b), ck::add(ck::neg(x.c), ck::mul(p.r(), ck::mul(x.a, x.b)))};
}

HeisElem commutator(const HeisParams& p, const HeisElem& x, const HeisElem& y) {
  return mul(p, mul(p, mul(p, x, y), inv(p, x)), inv(p, y));
}

HeisElem pow(const HeisParams& p, const HeisElem& x, std::int64_t n) {
  // x^n = (n a, n b, n c + r a b n (n - 1) / 2), valid for every integer n.
  const std::int64_t tri = (n % 2 == 0) ? ck::mul(n / 2, ck::sub(n, 1)) : ck::mul(n, ck::sub(n, 1) / 2);
  return {ck::mul(n, x.a), ck::mul(n, x.b),
          ck::add(ck::mul(n, x.c), ck::mul(ck::mul(p.r(), ck::mul(x.a, x.b)), tri))};
}

HeisElem word(const HeisParams& p, std::int64_t a, std::int64_t b, std::int64_t e) {
  return {a, b, ck::add(e, ck::mul(p.r(), ck::mul(a, b)))};
}

RationalMatrix3 matrix_rep(const HeisParams& p, const HeisElem& x) {
  RationalMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? 1 : 0;
  m[0][1] = x.a;
  m[1][2] = x.b;
  m[0][2] = Rational(x.c, p.r());
  return m;
}

std::int64_t SubgroupSpec::det() const { return ck::sub(ck::mul(a1, b2), ck::mul(a2, b1)); }

SubgroupInfo validate_subgroup_spec(const HeisParams& p, const SubgroupSpec& s) {
  if (s.c < 1) throw Error(Errc::SpecInvalid, "central exponent c must be positive");
  const std::int64_t d = s.det();
  if (d == 0) throw Error(Errc::NotFiniteIndex, "a1 b2 - a2 b1 = 0");
  const std::int64_t g = ck::gcd(ck::gcd(s.a1, s.a2), ck::gcd(s.b1, s.b2));
  const std::int64_t rg = ck::mul(p.r(), g);
  if (rg % s.c != 0)
    throw Error(Errc::NotNormal, std::to_string(s.c) + " does not divide r gcd(a1,a2,b1,b2) = " +
                                     std::to_string(rg));
  SubgroupInfo info;
  info.det = d;
  info.r_prime = ck::mul(p.r(), ck::abs(d)) / s.c;
  info.quotient_order = ck::mul(ck::abs(d), s.c);
  info.jordan_bound = ck::gcd(s.a1, s.b1);
  return info;
}

bool membership(const HeisParams& p, const SubgroupSpec& s, const HeisElem& x) {
  try {
    validate_subgroup_spec(p, s);
  } catch (const Error& e) {
    throw Error(Errc::SpecInvalid, std::string(e.what()));
  }
  // (x.a, x.b) = u (a1, a2) + v (b1, b2), solved by Cramer's rule.
  const std::int64_t d = s.det();
  const std::int64_t un = ck::sub(ck::mul(x.a, s.b2), ck::mul(x.b, s.b1));
  const std::int64_t vn = ck::sub(ck::mul(s.a1, x.b), ck::mul(s.a2, x.a));
  if (un % d != 0 || vn % d != 0) return false;
  const HeisElem w = mul(p, pow(p, s.zeta(p), un / d), pow(p, s.xi(p), vn / d));
  const HeisElem rest = mul(p, x, inv(p, w));
  return rest.c % s.c == 0;
}

HeisElem commutator_of_generators(const HeisParams& p, const SubgroupSpec& s) {
  return commutator(p, s.zeta(p), s.xi(p));
}

HeisElem parse_elem(std::string_view text) {
  const auto v = parse_int_list(text);
  if (v.size() != 3) throw Error(Errc::ParseError, "Heisenberg element needs three integers a,b,c");
  return {v[0], v[1], v[2]};
}

std::string format_elem(const HeisElem& x) {
  return std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c);
}

}  // namespace jordkit::heis
