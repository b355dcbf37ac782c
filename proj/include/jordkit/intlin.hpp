#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Exact integer linear algebra for small square matrices (n <= 4).
namespace jordkit::intlin {

inline constexpr int kMaxDim = 4;

class IntMatrix {
 public:
  // Zero matrix of dimension n, 1 <= n <= kMaxDim.
  explicit IntMatrix(int n = 1);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int dim() const noexcept { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[idx(i, j)]; }
  std::int64_t& operator()(int i, int j) { return a_[idx(i, j)]; }
  std::span<const std::int64_t> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const std::int64_t> entries() const noexcept { return a_; }

  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::int64_t> a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
std::vector<std::int64_t> operator*(const IntMatrix& m, std::span<const std::int64_t> v);

// M^k for k >= 0; negative k requires |det M| = 1.
IntMatrix power(const IntMatrix& m, std::int64_t k);
IntMatrix transpose(const IntMatrix& m);
// adj(M), so that adj(M) * M = det(M) Id.
IntMatrix adjugate(const IntMatrix& m);
// Inverse of a unimodular matrix (adjugate times det); throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Integer polynomial, coefficients lowest degree first. The zero polynomial
// has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  static IntPoly monomial(int degree, std::int64_t c = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  std::int64_t eval(std::int64_t x) const;
  // p(x + s)
  IntPoly shifted(std::int64_t s) const;

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<std::int64_t> c_;
};

IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};
// Division by a monic divisor; exact over the integers.
PolyDivision divmod(const IntPoly& p, const IntPoly& monic_divisor);

// Companion matrix of a monic polynomial of degree 1..kMaxDim; its
// characteristic polynomial is p.
IntMatrix companion(const IntPoly& monic);

std::int64_t det(const IntMatrix& m);

// det(x Id - M): monic of degree n.
IntPoly charpoly(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, h = u * m
};

HnfResult hnf(const IntMatrix& m);

// Elementary divisors d1 | d2 | ... | dn (zeros last for singular input).
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

std::int64_t euler_phi(std::int64_t d);
IntPoly cyclotomic(int d);

// Orders d with phi(d) <= n, ascending.
std::vector<int> cyclotomic_candidates(int n);

// True iff every eigenvalue of M is a root of unity.
bool is_quasi_unipotent(const IntMatrix& m);

struct EigenvalueClass {
  bool real = true;
  int abs_cmp_one = 0;  // sign of |lambda| - 1
  bool is_one = false;
  bool is_minus_one = false;
};

struct EigenProfile {
  IntPoly charpoly;
  std::int64_t discriminant = 0;
  int real_count = 0;
  int complex_pair_count = 0;
  // Real eigenvalues, counted with multiplicity, by position on the line.
  int real_below_minus_one = 0;
  int real_at_minus_one = 0;
  int real_inside = 0;  // strictly between -1 and 1
  int real_at_one = 0;
  int real_above_one = 0;
  int complex_modulus_cmp = 0;  // sign of |beta| - 1 for the conjugate pair
  // Real eigenvalues in ascending order, then the conjugate pair.
  std::vector<EigenvalueClass> eigenvalues;

  bool has_eigenvalue_one = false;
  bool has_eigenvalue_minus_one = false;
  bool all_real = false;
  // One real eigenvalue > 1 plus a non-real conjugate pair (n = 3).
  bool inoue_SM_shape = false;
  // Two real eigenvalues, neither equal to 1, product +-1 (n = 2).
  bool inoue_Spm_shape = false;
};

// Exact eigenvalue profile for n in {2, 3}; throws DimensionUnsupported.
EigenProfile eigenvalue_profile(const IntMatrix& m);

// First R with det R = +-1 and R^k = M, scanning row-major entries
// lexicographically, each entry over 0, 1, -1, ..., height, -height.
// Absence means "none within the height budget". n = 2 only.
std::optional<IntMatrix> kth_root_search(const IntMatrix& m, std::int64_t k,
                                         std::int64_t height);

enum class CentralizerClass { FullGL2, DiagonalTorus, ScalarTimesAdditive };

struct CentralizerResult {
  CentralizerClass label;
  // Set for alpha != beta, lambda != 0: the matrix is only conjugate to a
  // diagonal one.
  bool non_canonical = false;
};

// Centralizer in GL2(C) of [[alpha, lambda], [0, beta]].
CentralizerResult centralizer_class(bool alpha_equals_beta, bool lambda_is_zero);

std::string_view to_string(CentralizerClass c);

// "2,1;1,1"
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);
// "1,-3,1" (lowest degree first)
std::string format_poly(const IntPoly& p);

}  // namespace jordkit::intlin
