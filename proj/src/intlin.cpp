#include "jordkit/intlin.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "jordkit/checked.hpp"
#include "jordkit/error.hpp"
#include "jordkit/parse.hpp"

namespace jordkit::intlin {

namespace ck = jordkit::checked;

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw Error(Errc::DimensionUnsupported, "matrix dimension must be in 1.." +
                                                std::to_string(kMaxDim));
}

void check_same_dim(const IntMatrix& x, const IntMatrix& y) {
  if (x.dim() != y.dim()) throw Error(Errc::ShapeMismatch, "matrix dimensions differ");
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Determinant of the submatrix on the given rows and columns (cofactor
// expansion along the first row; at most 4x4).
std::int64_t minor_det(const IntMatrix& m, std::span<const int> rows,
                       std::span<const int> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m(rows[0], cols[0]);
  std::int64_t total = 0;
  std::vector<int> sub_cols;
  sub_cols.reserve(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t a = m(rows[0], cols[j]);
    if (a == 0) continue;
    sub_cols.clear();
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    std::int64_t term = ck::mul(a, minor_det(m, rows.subspan(1), sub_cols));
    total = (j % 2 == 0) ? ck::add(total, term) : ck::sub(total, term);
  }
  return total;
}

void row_axpy(IntMatrix& m, int dst, int src, std::int64_t q) {
  // row[dst] -= q * row[src]
  for (int j = 0; j < m.dim(); ++j) m(dst, j) = ck::sub(m(dst, j), ck::mul(q, m(src, j)));
}

void col_axpy(IntMatrix& m, int dst, int src, std::int64_t q) {
  for (int i = 0; i < m.dim(); ++i) m(i, dst) = ck::sub(m(i, dst), ck::mul(q, m(i, src)));
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.dim(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.dim(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.dim(); ++j) m(r, j) = ck::neg(m(r, j));
}

}  // namespace

IntMatrix::IntMatrix(int n) : n_(n) {
  check_dim(n);
  a_.assign(static_cast<std::size_t>(n) * n, 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(static_cast<int>(rows.size())) {
  check_dim(n_);
  a_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_)
      throw Error(Errc::ShapeMismatch, "matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.dim())
      throw Error(Errc::ShapeMismatch, "matrix must be square");
    for (int j = 0; j < m.dim(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < n_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  check_same_dim(x, y);
  const int n = x.dim();
  IntMatrix z(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t a = x(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) z(i, j) = ck::add(z(i, j), ck::mul(a, y(k, j)));
    }
  return z;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  check_same_dim(x, y);
  IntMatrix z(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) z(i, j) = ck::add(x(i, j), y(i, j));
  return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  check_same_dim(x, y);
  IntMatrix z(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) z(i, j) = ck::sub(x(i, j), y(i, j));
  return z;
}

std::vector<std::int64_t> operator*(const IntMatrix& m, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != m.dim())
    throw Error(Errc::ShapeMismatch, "vector length does not match matrix");
  std::vector<std::int64_t> out(v.size(), 0);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      out[static_cast<std::size_t>(i)] =
          ck::add(out[static_cast<std::size_t>(i)], ck::mul(m(i, j), v[static_cast<std::size_t>(j)]));
  return out;
}

IntMatrix power(const IntMatrix& m, std::int64_t k) {
  IntMatrix base = k < 0 ? unimodular_inverse(m) : m;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  IntMatrix result = IntMatrix::identity(m.dim());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  return t;
}

IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // adj(j, i) = (-1)^(i+j) minor(i, j)
      rows.clear();
      cols.clear();
      for (int t = 0; t < n; ++t) {
        if (t != i) rows.push_back(t);
        if (t != j) cols.push_back(t);
      }
      std::int64_t c = minor_det(m, rows, cols);
      adj(j, i) = (i + j) % 2 == 1 ? ck::neg(c) : c;
    }
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::int64_t d = det(m);
  if (d != 1 && d != -1) throw Error(Errc::NotUnimodular, "determinant " + std::to_string(d));
  IntMatrix inv = adjugate(m);
  if (d == -1)
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) inv(i, j) = ck::neg(inv(i, j));
  return inv;
}

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPoly::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ck::add(ck::mul(acc, x), *it);
  return acc;
}

IntPoly IntPoly::shifted(std::int64_t s) const {
  // Horner in polynomial form: q = q * (x + s) + c_i
  IntPoly q;
  const IntPoly lin({s, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    q = q * lin;
    std::vector<std::int64_t> v = q.c_;
    if (v.empty()) v.push_back(0);
    v[0] = ck::add(v[0], *it);
    q = IntPoly(std::move(v));
  }
  return q;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<std::int64_t> r(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      r[i + j] = ck::add(r[i + j], ck::mul(p.coeffs()[i], q.coeffs()[j]));
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> r(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = ck::sub(p.coeff(static_cast<int>(i)), q.coeff(static_cast<int>(i)));
  return IntPoly(std::move(r));
}

PolyDivision divmod(const IntPoly& p, const IntPoly& monic_divisor) {
  if (monic_divisor.is_zero() || monic_divisor.leading() != 1)
    throw Error(Errc::InvalidArgument, "divisor must be monic");
  const int dd = monic_divisor.degree();
  std::vector<std::int64_t> rem = p.coeffs();
  if (p.degree() < dd) return {IntPoly{}, p};
  std::vector<std::int64_t> quo(static_cast<std::size_t>(p.degree() - dd) + 1, 0);
  for (int i = p.degree(); i >= dd; --i) {
    std::int64_t c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = ck::sub(slot, ck::mul(c, monic_divisor.coeff(j)));
    }
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntMatrix companion(const IntPoly& monic) {
  const int n = monic.degree();
  if (n < 1 || monic.leading() != 1)
    throw Error(Errc::InvalidArgument, "companion matrix needs a monic polynomial of degree >= 1");
  IntMatrix c(n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = ck::neg(monic.coeff(i));
  return c;
}

std::int64_t det(const IntMatrix& m) {
  std::vector<int> all(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  return minor_det(m, all, all);
}

IntPoly charpoly(const IntMatrix& m) {
  // Coefficient of x^(n-k) is (-1)^k times the sum of the k x k principal
  // minors.
  const int n = m.dim();
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    std::int64_t minor = minor_det(m, idx, idx);
    auto& slot = c[static_cast<std::size_t>(n - k)];
    slot = (k % 2 == 0) ? ck::add(slot, minor) : ck::sub(slot, minor);
  }
  return IntPoly(std::move(c));
}

HnfResult hnf(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(n);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    // Euclid on column `col` below `row` until a single nonzero remains.
    while (true) {
      int best = -1;
      for (int i = row; i < n; ++i)
        if (h(i, col) != 0 && (best < 0 || ck::abs(h(i, col)) < ck::abs(h(best, col)))) best = i;
      if (best < 0) break;
      swap_rows(h, row, best);
      swap_rows(u, row, best);
      bool done = true;
      for (int i = row + 1; i < n; ++i) {
        if (h(i, col) == 0) continue;
        std::int64_t q = ck::floor_div(h(i, col), h(row, col));
        row_axpy(h, i, row, q);
        row_axpy(u, i, row, q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (int i = 0; i < row; ++i) {
      std::int64_t q = ck::floor_div(h(i, col), h(row, col));
      if (q == 0) continue;
      row_axpy(h, i, row, q);
      row_axpy(u, i, row, q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix a = m;
  std::vector<std::int64_t> out;
  for (int t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a(i, j) != 0 && (bi < 0 || ck::abs(a(i, j)) < ck::abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) {
        out.resize(static_cast<std::size_t>(n), 0);
        return out;
      }
      swap_rows(a, t, bi);
      swap_cols(a, t, bj);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        std::int64_t q = ck::floor_div(a(i, t), a(t, t));
        if (q != 0) row_axpy(a, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t q = ck::floor_div(a(t, j), a(t, t));
        if (q != 0) col_axpy(a, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block.
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(a, t, bad, -1);
    }
    out.push_back(ck::abs(a(t, t)));
  }
  return out;
}

std::int64_t euler_phi(std::int64_t d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "phi needs d >= 1");
  std::int64_t result = d;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "cyclotomic order must be >= 1");
  IntPoly p = IntPoly::monomial(d) - IntPoly({1});
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    PolyDivision qr = divmod(p, cyclotomic(e));
    p = qr.quotient;
  }
  return p;
}

std::vector<int> cyclotomic_candidates(int n) {
  // phi(d) >= sqrt(d / 2), so d <= 2 n^2 covers every candidate.
  std::vector<int> out;
  for (int d = 1; d <= 2 * n * n + 2; ++d)
    if (euler_phi(d) <= n) out.push_back(d);
  return out;
}

bool is_quasi_unipotent(const IntMatrix& m) {
  IntPoly p = charpoly(m);
  const std::vector<int> candidates = cyclotomic_candidates(m.dim());
  bool progress = true;
  while (p.degree() > 0 && progress) {
    progress = false;
    for (int d : candidates) {
      IntPoly phi = cyclotomic(d);
      PolyDivision qr = divmod(p, phi);
      if (qr.remainder.is_zero()) {
        p = qr.quotient;
        progress = true;
      }
    }
  }
  return p == IntPoly({1});
}

namespace {

int sign_changes(const IntPoly& p) {
  int changes = 0, last = 0;
  for (std::int64_t c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int root_multiplicity_at_zero(const IntPoly& p) {
  int k = 0;
  while (k <= p.degree() && p.coeff(k) == 0) ++k;
  return k;
}

struct LineSplit {
  int below = 0, at = 0, above = 0;
};

// Only valid when every root of p is real (Descartes' rule is then exact).
LineSplit split_real_roots(const IntPoly& p, std::int64_t v) {
  IntPoly q = p.shifted(v);
  LineSplit s;
  s.at = root_multiplicity_at_zero(q);
  s.above = sign_changes(q);
  s.below = p.degree() - s.at - s.above;
  return s;
}

// Position of the unique real root of a monic cubic relative to v.
int single_root_cmp(const IntPoly& p, std::int64_t v) { return -sign(p.eval(v)); }

}  // namespace

EigenProfile eigenvalue_profile(const IntMatrix& m) {
  const int n = m.dim();
  if (n != 2 && n != 3)
    throw Error(Errc::DimensionUnsupported, "eigenvalue profile needs n in {2, 3}");
  EigenProfile prof;
  prof.charpoly = charpoly(m);
  const IntPoly& p = prof.charpoly;

  bool all_real;
  if (n == 2) {
    // x^2 + b x + c
    const std::int64_t b = p.coeff(1), c = p.coeff(0);
    prof.discriminant = ck::sub(ck::mul(b, b), ck::mul(4, c));
    all_real = prof.discriminant >= 0;
    if (!all_real) {
      prof.real_count = 0;
      prof.complex_pair_count = 1;
      prof.complex_modulus_cmp = sign(c - 1);  // |beta|^2 = c
    }
  } else {
    // x^3 + b x^2 + c x + d
    const std::int64_t b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    const std::int64_t b2 = ck::mul(b, b), c2 = ck::mul(c, c);
    std::int64_t disc = ck::mul(ck::mul(18, b), ck::mul(c, d));
    disc = ck::sub(disc, ck::mul(ck::mul(4, ck::mul(b2, b)), d));
    disc = ck::add(disc, ck::mul(b2, c2));
    disc = ck::sub(disc, ck::mul(4, ck::mul(c2, c)));
    disc = ck::sub(disc, ck::mul(27, ck::mul(d, d)));
    prof.discriminant = disc;
    all_real = disc >= 0;
    if (!all_real) {
      prof.real_count = 1;
      prof.complex_pair_count = 1;
      const int below_m1 = single_root_cmp(p, -1);
      const int vs_p1 = single_root_cmp(p, 1);
      if (below_m1 < 0) ++prof.real_below_minus_one;
      else if (below_m1 == 0) ++prof.real_at_minus_one;
      else if (vs_p1 < 0) ++prof.real_inside;
      else if (vs_p1 == 0) ++prof.real_at_one;
      else ++prof.real_above_one;
      // alpha * |beta|^2 = -d
      if (d == 0) {
        prof.complex_modulus_cmp = sign(c - 1);  // alpha = 0, |beta|^2 = c
      } else {
        const std::int64_t ad = ck::abs(d);
        const int lo = single_root_cmp(p, -ad), hi = single_root_cmp(p, ad);
        if (lo == 0 || hi == 0) prof.complex_modulus_cmp = 0;
        else if (lo > 0 && hi < 0) prof.complex_modulus_cmp = 1;  // |alpha| < |d|
        else prof.complex_modulus_cmp = -1;
      }
    }
  }

  if (all_real) {
    prof.real_count = n;
    prof.complex_pair_count = 0;
    const LineSplit at_m1 = split_real_roots(p, -1);
    const LineSplit at_p1 = split_real_roots(p, 1);
    prof.real_below_minus_one = at_m1.below;
    prof.real_at_minus_one = at_m1.at;
    prof.real_at_one = at_p1.at;
    prof.real_above_one = at_p1.above;
    prof.real_inside = n - at_m1.below - at_m1.at - at_p1.at - at_p1.above;
  }

  auto push_real = [&](int count, int cmp, bool one, bool minus_one) {
    for (int i = 0; i < count; ++i) prof.eigenvalues.push_back({true, cmp, one, minus_one});
  };
  push_real(prof.real_below_minus_one, 1, false, false);
  push_real(prof.real_at_minus_one, 0, false, true);
  push_real(prof.real_inside, -1, false, false);
  push_real(prof.real_at_one, 0, true, false);
  push_real(prof.real_above_one, 1, false, false);
  for (int i = 0; i < 2 * prof.complex_pair_count; ++i)
    prof.eigenvalues.push_back({false, prof.complex_modulus_cmp, false, false});

  prof.all_real = all_real;
  prof.has_eigenvalue_one = prof.real_at_one > 0;
  prof.has_eigenvalue_minus_one = prof.real_at_minus_one > 0;
  const std::int64_t d = det(m);
  prof.inoue_SM_shape = n == 3 && prof.real_count == 1 && prof.real_above_one == 1 &&
                        prof.complex_pair_count == 1;
  prof.inoue_Spm_shape = n == 2 && all_real && !prof.has_eigenvalue_one && (d == 1 || d == -1);
  return prof;
}

std::optional<IntMatrix> kth_root_search(const IntMatrix& m, std::int64_t k,
                                         std::int64_t height) {
  if (m.dim() != 2) throw Error(Errc::DimensionUnsupported, "k-th root search is 2x2 only");
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  if (height < 1) throw Error(Errc::InvalidArgument, "height must be >= 1");
  // Entry values in the order 0, 1, -1, 2, -2, ..., so smaller witnesses
  // come first.
  std::vector<std::int64_t> values{0};
  for (std::int64_t v = 1; v <= height; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  IntMatrix r(2);
  for (std::int64_t a : values)
    for (std::int64_t b : values)
      for (std::int64_t c : values)
        for (std::int64_t d : values) {
          const std::int64_t dt = ck::sub(ck::mul(a, d), ck::mul(b, c));
          if (dt != 1 && dt != -1) continue;
          r(0, 0) = a;
          r(0, 1) = b;
          r(1, 0) = c;
          r(1, 1) = d;
          try {
            if (power(r, k) == m) return r;
          } catch (const Error& e) {
            // An overflowing power has entries beyond int64, so it cannot
            // equal M.
            if (e.code() != Errc::Overflow) throw;
          }
        }
  return std::nullopt;
}

CentralizerResult centralizer_class(bool alpha_equals_beta, bool lambda_is_zero) {
  if (alpha_equals_beta && lambda_is_zero) return {CentralizerClass::FullGL2, false};
  if (!alpha_equals_beta && lambda_is_zero) return {CentralizerClass::DiagonalTorus, false};
  if (alpha_equals_beta) return {CentralizerClass::ScalarTimesAdditive, false};
  return {CentralizerClass::DiagonalTorus, true};
}

std::string_view to_string(CentralizerClass c) {
  switch (c) {
    case CentralizerClass::FullGL2: return "FULL_GL2";
    case CentralizerClass::DiagonalTorus: return "DIAGONAL_TORUS";
    case CentralizerClass::ScalarTimesAdditive: return "SCALAR_TIMES_ADDITIVE";
  }
  return "?";
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::string_view row : split(text, ';')) rows.push_back(parse_int_list(row));
  if (rows.empty()) throw Error(Errc::ParseError, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw Error(Errc::ParseError, "matrix text must describe a square matrix");
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ',';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.coeffs()[i]);
  }
  return s;
}

}  // namespace jordkit::intlin
