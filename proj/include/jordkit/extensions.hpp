#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordkit/heisenberg.hpp"
#include "jordkit/intlin.hpp"

// Wang groups Gamma = Gamma0 x| <gamma> with Gamma0 either Z^3 or H(r).
// Elements are kept as h * gamma^k, with gamma h gamma^-1 = act(h).
namespace jordkit::ext {

using intlin::IntMatrix;

enum class WangKind { LatticeSemidirect, HeisSemidirect, HeisDirect };

std::string_view to_string(WangKind k);
// Accepts LATTICE_SEMIDIRECT, HEIS_SEMIDIRECT, HEIS_DIRECT (any case).
WangKind parse_kind(std::string_view text);

// Z^3 vector, or a Heisenberg triple (a, b, c) in matrix coordinates.
using Fiber = std::array<std::int64_t, 3>;

class WangGroupDesc {
 public:
  WangKind kind() const noexcept { return kind_; }
  // 1 for the lattice kind.
  std::int64_t r() const noexcept { return r_; }
  // Present for the semidirect kinds.
  const std::optional<IntMatrix>& matrix() const noexcept { return m_; }
  std::array<std::int64_t, 2> twist() const noexcept { return p_; }
  // det M, or 1 when M is absent.
  std::int64_t det() const noexcept { return det_; }

  bool is_heis() const noexcept { return kind_ != WangKind::LatticeSemidirect; }

 private:
  friend WangGroupDesc make_desc(WangKind, std::int64_t, std::optional<IntMatrix>,
                                 std::array<std::int64_t, 2>);
  WangKind kind_ = WangKind::HeisDirect;
  std::int64_t r_ = 1;
  std::optional<IntMatrix> m_;
  std::array<std::int64_t, 2> p_{0, 0};
  std::int64_t det_ = 1;
};

// Throws ShapeMismatch (M missing, present for HEIS_DIRECT, or of the wrong
// size), NotUnimodular, InvalidArgument (r < 1).
WangGroupDesc make_desc(WangKind kind, std::int64_t r, std::optional<IntMatrix> m,
                        std::array<std::int64_t, 2> p = {0, 0});

struct WangElem {
  Fiber h{0, 0, 0};
  std::int64_t k = 0;

  bool operator==(const WangElem&) const = default;
  auto operator<=>(const WangElem&) const = default;
};

// Product and inverse in Gamma0.
Fiber fiber_mul(const WangGroupDesc& d, const Fiber& x, const Fiber& y);
Fiber fiber_inv(const WangGroupDesc& d, const Fiber& x);

// gamma^k h gamma^-k.
Fiber gamma_action(const WangGroupDesc& d, const Fiber& h, std::int64_t k);

WangElem wang_mul(const WangGroupDesc& d, const WangElem& u, const WangElem& v);
WangElem wang_inv(const WangGroupDesc& d, const WangElem& u);
WangElem wang_pow(const WangGroupDesc& d, const WangElem& u, std::int64_t n);
WangElem wang_commutator(const WangGroupDesc& d, const WangElem& u, const WangElem& v);

// d1, d2, d3 (e1, e2, e3 for the lattice) and gamma.
std::vector<WangElem> generators(const WangGroupDesc& d);

struct CenterDescription {
  bool trivial = true;
  std::vector<WangElem> generators;
};

// Throws EigenvalueOnePresent for a semidirect M with charpoly(1) = 0.
// When gamma^m acts trivially for some m <= 12 (M of finite order), gamma^m
// is listed as well.
CenterDescription center_description(const WangGroupDesc& d);

struct CommutatorImage {
  IntMatrix basis;  // rows span Im(M - Id), row HNF
  std::int64_t index = 0;
};

// Throws EigenvalueOnePresent.
CommutatorImage commutator_image(const IntMatrix& m);

// Whether the Z^n part of h (all of it for the lattice, (a, b) for H(r))
// lies in Im(M - Id). For H(r) this is the preimage of the commutator image;
// it has the same radical as [Gamma, Gamma], which contains d3^r.
bool in_commutator_image(const WangGroupDesc& d, const Fiber& h);

enum class InoueLabel { SM, SPlus, SMinus, NotInoue };
std::string_view to_string(InoueLabel l);

struct InoueType {
  InoueLabel label = InoueLabel::NotInoue;
  std::string failed_condition;  // empty unless NotInoue
  std::optional<intlin::EigenProfile> profile;
  std::optional<bool> center_trivial;
};

InoueType classify_inoue(const WangGroupDesc& d);

// Least k in 1..k_max with u^k in Gamma0 and pred(u^k).
std::optional<std::int64_t> power_in_subgroup(const WangGroupDesc& d, const WangElem& u,
                                              const std::function<bool(const Fiber&)>& pred,
                                              std::int64_t k_max);

struct TwistedCopy {
  std::array<WangElem, 3> generators;  // d1 gamma^t, d2, d3 in H(r) x Z
  bool relations_hold = false;
  bool normal = false;
  bool quotient_infinite_cyclic = false;
  bool projection_isomorphism = false;
  std::int64_t r_prime = 0;  // [g1, g2] = g3^r_prime
};

TwistedCopy twisted_copy(std::int64_t r, std::int64_t t);

}  // namespace jordkit::ext
