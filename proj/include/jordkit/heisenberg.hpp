#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "jordkit/rational.hpp"

// Arithmetic in the discrete Heisenberg group H(r) = <d1, d2, d3 | d3 central,
// [d1, d2] = d3^r>, realized as unitriangular rational matrices
//
//     [ 1  a  c/r ]
//     [ 0  1  b   ]
//     [ 0  0  1   ]
//
// The triple (a, b, c) stores the matrix entries, so it names the word
// d1^a d2^b d3^(c - r a b), and the product is
// (a, b, c)(a', b', c') = (a + a', b + b', c + c' + r a b').
namespace jordkit::heis {

class HeisParams {
 public:
  explicit HeisParams(std::int64_t r);
  std::int64_t r() const noexcept { return r_; }

 private:
  std::int64_t r_;
};

struct HeisElem {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  static constexpr HeisElem identity() { return {0, 0, 0}; }
  static constexpr HeisElem delta1() { return {1, 0, 0}; }
  static constexpr HeisElem delta2() { return {0, 1, 0}; }
  static constexpr HeisElem delta3() { return {0, 0, 1}; }

  bool is_central() const noexcept { return a == 0 && b == 0; }
  bool operator==(const HeisElem&) const = default;
  auto operator<=>(const HeisElem&) const = default;
};

HeisElem mul(const HeisParams& p, const HeisElem& x, const HeisElem& y);
HeisElem inv(const HeisParams& p, const HeisElem& x);
// x y x^-1 y^-1
HeisElem commutator(const HeisParams& p, const HeisElem& x, const HeisElem& y);
HeisElem pow(const HeisParams& p, const HeisElem& x, std::int64_t n);

// The word d1^a d2^b d3^e in normal form.
HeisElem word(const HeisParams& p, std::int64_t a, std::int64_t b, std::int64_t e);

using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;
RationalMatrix3 matrix_rep(const HeisParams& p, const HeisElem& x);

// Generators zeta = d1^a1 d2^a2 d3^a3, xi = d1^b1 d2^b2 d3^b3 and d3^c of a
// candidate normal subgroup of finite index.
struct SubgroupSpec {
  std::int64_t a1 = 0, a2 = 0, a3 = 0;
  std::int64_t b1 = 0, b2 = 0, b3 = 0;
  std::int64_t c = 1;

  std::int64_t det() const;  // a1 b2 - a2 b1
  HeisElem zeta(const HeisParams& p) const { return word(p, a1, a2, a3); }
  HeisElem xi(const HeisParams& p) const { return word(p, b1, b2, b3); }

  bool operator==(const SubgroupSpec&) const = default;
};

struct SubgroupInfo {
  std::int64_t det = 0;             // D = a1 b2 - a2 b1
  std::int64_t r_prime = 0;         // subgroup is isomorphic to H(r |D| / c)
  std::int64_t quotient_order = 0;  // |D| c
  std::int64_t jordan_bound = 0;    // gcd(a1, b1); 0 means no bound claimed
};

// Throws NotFiniteIndex (D = 0), NotNormal (c does not divide
// r gcd(a1, a2, b1, b2)) or SpecInvalid (c < 1).
SubgroupInfo validate_subgroup_spec(const HeisParams& p, const SubgroupSpec& s);

// Membership in <zeta, xi, d3^c>. Throws SpecInvalid for an invalid spec.
bool membership(const HeisParams& p, const SubgroupSpec& s, const HeisElem& x);

// [zeta, xi]; always (0, 0, r D).
HeisElem commutator_of_generators(const HeisParams& p, const SubgroupSpec& s);

HeisElem parse_elem(std::string_view text);
std::string format_elem(const HeisElem& x);

}  // namespace jordkit::heis
