#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordkit/rational.hpp"

// The Enriques-Kodaira table for minimal compact complex surfaces as a
// matcher over partially known invariants, plus the arithmetic around it.
namespace jordkit::surf {

enum class KodairaDim { NegInf, Zero, One, Two };

std::string_view to_string(KodairaDim k);
// "-inf", "0", "1", "2"
KodairaDim parse_kodaira(std::string_view text);

struct SurfaceInvariants {
  std::optional<KodairaDim> kodaira;
  std::optional<int> algebraic_dim;
  std::optional<std::int64_t> b1;
  std::optional<std::int64_t> b2;
  std::optional<std::int64_t> chi_top;
  std::optional<std::int64_t> c1_sq;
  std::optional<bool> projective;
};

enum class SurfaceLabel {
  Rational,
  RuledGPositive,
  ClassVII,
  Torus,
  K3,
  Enriques,
  Bielliptic,
  PrimaryKodaira,
  SecondaryKodaira,
  ProperlyElliptic,
  GeneralType,
};

inline constexpr int kRowCount = 11;
std::string_view to_string(SurfaceLabel l);

struct RowDiagnostic {
  SurfaceLabel label;
  // Constraints of the row on the provided fields, e.g. "b1=3".
  std::vector<std::string> matched;
  std::vector<std::string> violated;
  bool admissible() const noexcept { return violated.empty(); }
};

// All eleven rows in table order. chi_top is derived as 2 - 2 b1 + b2 when
// missing. Throws InconsistentInput when projective disagrees with a = 2,
// when chi_top != 2 - 2 b1 + b2, or when 12 does not divide c1^2 + chi_top.
std::vector<RowDiagnostic> diagnose_rows(const SurfaceInvariants& inv);

// The admissible rows of diagnose_rows.
std::vector<RowDiagnostic> classify_surface(const SurfaceInvariants& inv);

struct NoetherChi {
  Rational value;
  bool integral = false;
};

// (c1^2 + chi_top) / 12
NoetherChi noether_chi(std::int64_t c1_sq, std::int64_t chi_top);

// All m1 <= ... <= mt, t <= max_count, 2 <= mi <= max_m, with
// sum (1 - 1/mi) = target; lexicographic order. Throws InvalidArgument unless
// max_count <= 8 and max_m <= 1000.
std::vector<std::vector<std::int64_t>> mult_fiber_solutions(const Rational& target, int max_count,
                                                            std::int64_t max_m);

enum class Sign { Negative, Zero, Positive };
std::string_view to_string(Sign s);

// Sign of 2g - 2 + deg_L + sum (1 - 1/mi). Throws InvalidArgument for mi < 2.
Sign fibration_kodaira_sign(std::int64_t g_base, std::int64_t deg_l,
                            const std::vector<std::int64_t>& multiplicities);

struct FixedPointAudit {
  std::int64_t isolated_fixed_points = 0;  // = chi_top
  std::int64_t lefschetz_number = 0;       // 2 - 2 tr on H^1, for b1 = 1
  // A positive Lefschetz number must come from trace -1 (so Lef = 4) and be
  // realized by actual fixed points.
  bool consistent = false;
};

FixedPointAudit fixed_point_audit(std::int64_t chi_top, std::int64_t trace_h1);

}  // namespace jordkit::surf
