#include "jordkit/surfaces.hpp"

#include <algorithm>
#include <functional>

#include "jordkit/checked.hpp"
#include "jordkit/error.hpp"

namespace jordkit::surf {

namespace ck = checked;

std::string_view to_string(KodairaDim k) {
  switch (k) {
    case KodairaDim::NegInf: return "-inf";
    case KodairaDim::Zero: return "0";
    case KodairaDim::One: return "1";
    case KodairaDim::Two: return "2";
  }
  return "?";
}

KodairaDim parse_kodaira(std::string_view text) {
  for (auto k : {KodairaDim::NegInf, KodairaDim::Zero, KodairaDim::One, KodairaDim::Two})
    if (text == to_string(k)) return k;
  throw Error(Errc::ParseError, "kodaira dimension must be -inf, 0, 1 or 2");
}

std::string_view to_string(SurfaceLabel l) {
  switch (l) {
    case SurfaceLabel::Rational: return "RATIONAL";
    case SurfaceLabel::RuledGPositive: return "RULED_G_POSITIVE";
    case SurfaceLabel::ClassVII: return "CLASS_VII";
    case SurfaceLabel::Torus: return "TORUS";
    case SurfaceLabel::K3: return "K3";
    case SurfaceLabel::Enriques: return "ENRIQUES";
    case SurfaceLabel::Bielliptic: return "BIELLIPTIC";
    case SurfaceLabel::PrimaryKodaira: return "PRIMARY_KODAIRA";
    case SurfaceLabel::SecondaryKodaira: return "SECONDARY_KODAIRA";
    case SurfaceLabel::ProperlyElliptic: return "PROPERLY_ELLIPTIC";
    case SurfaceLabel::GeneralType: return "GENERAL_TYPE";
  }
  return "?";
}

namespace {

using Pred = std::function<bool(std::int64_t)>;

struct Row {
  SurfaceLabel label;
  KodairaDim kodaira;
  std::vector<int> a;
  std::string b1_text;
  Pred b1;
  std::string chi_text;
  Pred chi;
  // Joint condition on (b1, chi_top), used by the ruled row.
  std::string pair_text;
  std::function<bool(std::int64_t, std::int64_t)> pair;
};

Pred eq(std::int64_t v) {
  return [v](std::int64_t x) { return x == v; };
}
const Pred kAny = [](std::int64_t) { return true; };

const std::vector<Row>& rows() {
  using K = KodairaDim;
  using L = SurfaceLabel;
  static const std::vector<Row> table = {
      {L::Rational, K::NegInf, {2}, "b1=0", eq(0), "chi_top in {3,4}",
       [](std::int64_t x) { return x == 3 || x == 4; }, "", nullptr},
      {L::RuledGPositive, K::NegInf, {2}, "b1=2g>0", [](std::int64_t x) { return x > 0 && x % 2 == 0; },
       "chi_top=4(1-g)", [](std::int64_t x) { return x <= 0 && x % 4 == 0; }, "chi_top=4-2*b1",
       [](std::int64_t b1, std::int64_t chi) { return chi == 4 - 2 * b1; }},
      {L::ClassVII, K::NegInf, {0, 1}, "b1=1", eq(1), "chi_top>=0", [](std::int64_t x) { return x >= 0; }, "",
       nullptr},
      {L::Torus, K::Zero, {0, 1, 2}, "b1=4", eq(4), "chi_top=0", eq(0), "", nullptr},
      {L::K3, K::Zero, {0, 1, 2}, "b1=0", eq(0), "chi_top=24", eq(24), "", nullptr},
      {L::Enriques, K::Zero, {2}, "b1=0", eq(0), "chi_top=12", eq(12), "", nullptr},
      {L::Bielliptic, K::Zero, {2}, "b1=2", eq(2), "chi_top=0", eq(0), "", nullptr},
      {L::PrimaryKodaira, K::Zero, {1}, "b1=3", eq(3), "chi_top=0", eq(0), "", nullptr},
      {L::SecondaryKodaira, K::Zero, {1}, "b1=1", eq(1), "chi_top=0", eq(0), "", nullptr},
      {L::ProperlyElliptic, K::One, {1, 2}, "", kAny, "chi_top>=0", [](std::int64_t x) { return x >= 0; }, "",
       nullptr},
      {L::GeneralType, K::Two, {2}, "b1 even", [](std::int64_t x) { return x % 2 == 0; }, "chi_top>0",
       [](std::int64_t x) { return x > 0; }, "", nullptr},
  };
  return table;
}

std::string a_text(const std::vector<int>& a) {
  if (a.size() == 1) return "a=" + std::to_string(a[0]);
  std::string s = "a in {";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "}";
}

// Fills in whichever of b1, b2, chi_top follows from the other two.
SurfaceInvariants complete(SurfaceInvariants inv) {
  if (inv.b1 && *inv.b1 < 0) throw Error(Errc::InvalidArgument, "b1 must be nonnegative");
  if (inv.b2 && *inv.b2 < 0) throw Error(Errc::InvalidArgument, "b2 must be nonnegative");
  if (inv.algebraic_dim && (*inv.algebraic_dim < 0 || *inv.algebraic_dim > 2))
    throw Error(Errc::InvalidArgument, "algebraic dimension must be 0, 1 or 2");
  if (inv.projective && inv.algebraic_dim && *inv.projective != (*inv.algebraic_dim == 2))
    throw Error(Errc::InconsistentInput, "projective exactly when a = 2");
  if (inv.b1 && inv.b2) {
    const std::int64_t chi = ck::add(ck::sub(2, ck::mul(2, *inv.b1)), *inv.b2);
    if (inv.chi_top && *inv.chi_top != chi)
      throw Error(Errc::InconsistentInput, "chi_top must equal 2 - 2 b1 + b2 = " + std::to_string(chi));
    inv.chi_top = chi;
  } else if (inv.chi_top && (inv.b1 || inv.b2)) {
    if (inv.b1) {
      inv.b2 = ck::sub(ck::add(*inv.chi_top, ck::mul(2, *inv.b1)), 2);
      if (*inv.b2 < 0) throw Error(Errc::InconsistentInput, "chi_top - 2 + 2 b1 is negative");
    } else {
      const std::int64_t twice = ck::sub(ck::add(2, *inv.b2), *inv.chi_top);
      if (twice < 0 || twice % 2 != 0)
        throw Error(Errc::InconsistentInput, "2 + b2 - chi_top must be even and nonnegative");
      inv.b1 = twice / 2;
    }
  }
  if (inv.c1_sq && inv.chi_top && ck::add(*inv.c1_sq, *inv.chi_top) % 12 != 0)
    throw Error(Errc::InconsistentInput, "c1^2 + chi_top must be divisible by 12");
  return inv;
}

}  // namespace

std::vector<RowDiagnostic> diagnose_rows(const SurfaceInvariants& given) {
  const SurfaceInvariants inv = complete(given);
  std::vector<int> a_known;
  if (inv.algebraic_dim) a_known = {*inv.algebraic_dim};
  else if (inv.projective) a_known = *inv.projective ? std::vector<int>{2} : std::vector<int>{0, 1};

  std::vector<RowDiagnostic> out;
  for (const Row& row : rows()) {
    RowDiagnostic d{row.label, {}, {}};
    const auto note = [&](bool ok, std::string text) { (ok ? d.matched : d.violated).push_back(std::move(text)); };
    if (inv.kodaira) note(*inv.kodaira == row.kodaira, "kodaira=" + std::string(to_string(row.kodaira)));
    if (!a_known.empty())
      note(std::any_of(a_known.begin(), a_known.end(),
                       [&](int a) { return std::find(row.a.begin(), row.a.end(), a) != row.a.end(); }),
           a_text(row.a));
    if (inv.b1 && !row.b1_text.empty()) note(row.b1(*inv.b1), row.b1_text);
    if (inv.chi_top) note(row.chi(*inv.chi_top), row.chi_text);
    if (inv.b1 && inv.chi_top && row.pair) note(row.pair(*inv.b1, *inv.chi_top), row.pair_text);
    if (inv.b2 && !inv.b1) {
      // Only b2 known: some b1 must fit the row with chi_top = 2 - 2 b1 + b2.
      bool ok = false;
      for (std::int64_t b1 = 0; b1 <= 64 && !ok; ++b1) {
        const std::int64_t chi = 2 - 2 * b1 + *inv.b2;
        ok = row.b1(b1) && row.chi(chi) && (!row.pair || row.pair(b1, chi));
      }
      note(ok, "b2=chi_top-2+2*b1");
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<RowDiagnostic> classify_surface(const SurfaceInvariants& inv) {
  std::vector<RowDiagnostic> out;
  for (auto& d : diagnose_rows(inv))
    if (d.admissible()) out.push_back(std::move(d));
  return out;
}

NoetherChi noether_chi(std::int64_t c1_sq, std::int64_t chi_top) {
  NoetherChi out;
  out.value = Rational(ck::add(c1_sq, chi_top)) / 12;
  out.integral = is_integer(out.value);
  return out;
}

namespace {

// sum of k unit fractions 1/m, m >= lo, nondecreasing, equal to s.
void unit_fractions(const Rational& s, int k, std::int64_t lo, std::int64_t max_m,
                    std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (k == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  if (s <= 0) return;
  if (k == 1) {
    const Rational m = 1 / s;
    if (is_integer(m) && m >= lo && m <= max_m) {
      cur.push_back(static_cast<std::int64_t>(numerator(m)));
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  // 1/m <= s and k/m >= s.
  const Rational inv_s = 1 / s;
  BigInt first = numerator(inv_s) / denominator(inv_s);
  if (first * denominator(inv_s) < numerator(inv_s)) first += 1;
  const Rational kmax = k * inv_s;
  const BigInt last = numerator(kmax) / denominator(kmax);
  const std::int64_t from = std::max<std::int64_t>(lo, static_cast<std::int64_t>(first));
  const std::int64_t to = static_cast<std::int64_t>(std::min<BigInt>(last, BigInt(max_m)));
  for (std::int64_t m = from; m <= to; ++m) {
    cur.push_back(m);
    unit_fractions(s - Rational(1, m), k - 1, m, max_m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> mult_fiber_solutions(const Rational& target, int max_count,
                                                            std::int64_t max_m) {
  if (max_count < 0 || max_count > 8) throw Error(Errc::InvalidArgument, "max_count must be in 0..8");
  if (max_m < 1 || max_m > 1000) throw Error(Errc::InvalidArgument, "max_m must be in 1..1000");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  // sum (1 - 1/mi) = target with t terms means sum 1/mi = t - target.
  for (int t = 0; t <= max_count; ++t) unit_fractions(Rational(t) - target, t, 2, max_m, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "NEGATIVE";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POSITIVE";
  }
  return "?";
}

Sign fibration_kodaira_sign(std::int64_t g_base, std::int64_t deg_l,
                            const std::vector<std::int64_t>& multiplicities) {
  if (g_base < 0) throw Error(Errc::InvalidArgument, "genus must be nonnegative");
  Rational v = ck::add(ck::sub(ck::mul(2, g_base), 2), deg_l);
  for (std::int64_t m : multiplicities) {
    if (m < 2) throw Error(Errc::InvalidArgument, "multiplicities must be at least 2");
    v += 1 - Rational(1, m);
  }
  return v < 0 ? Sign::Negative : v == 0 ? Sign::Zero : Sign::Positive;
}

FixedPointAudit fixed_point_audit(std::int64_t chi_top, std::int64_t trace_h1) {
  FixedPointAudit out;
  out.isolated_fixed_points = chi_top;
  out.lefschetz_number = ck::sub(2, ck::mul(2, trace_h1));
  out.consistent = out.lefschetz_number <= 0 ||
                   (trace_h1 == -1 && out.lefschetz_number == 4 && out.isolated_fixed_points > 0);
  return out;
}

}  // namespace jordkit::surf
