#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordkit/heisenberg.hpp"

// Finite groups given by Cayley tables, the quotients H(r)/Gamma0, and
// their Jordan data by complete subgroup enumeration.
namespace jordkit::quot {

using Label = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 4096;
inline constexpr std::size_t kMaxLatticeOrder = 512;

class FiniteGroup {
 public:
  // table[i * order + j] = i * j, label 0 the identity. Throws
  // OrderBudgetExceeded or InvalidArgument when the axioms fail (fully
  // checked up to order 64, sampled on 10^4 triples above).
  FiniteGroup(std::vector<Label> table, std::vector<std::string> names);

  std::size_t order() const noexcept { return n_; }
  Label mul(Label x, Label y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Label inv(Label x) const { return inv_[x]; }
  const std::vector<Label>& table() const noexcept { return table_; }
  const std::vector<Label>& inverses() const noexcept { return inv_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool is_abelian() const;
  std::size_t element_order(Label x) const;
  std::size_t exponent() const;
  // Greedy generating set in label order.
  std::vector<Label> generators() const;

 private:
  std::size_t n_;
  std::vector<Label> table_;
  std::vector<Label> inv_;
  std::vector<std::string> names_;
};

FiniteGroup cyclic_group(std::size_t n);

// H(r)/Gamma0 for a spec passing validate_subgroup_spec. Labels are
// (x h22 + y) c + z for the representative (x, y, z) with (x, y) in the HNF
// fundamental domain [0, h11) x [0, h22) and z in [0, c).
// Throws SpecInvalid, OrderBudgetExceeded.
FiniteGroup heis_quotient(std::int64_t r, const heis::SubgroupSpec& s);

// G x Z/k with label g k + i. Throws OrderBudgetExceeded.
FiniteGroup product_with_cyclic(const FiniteGroup& g, std::size_t k);

// Sorted element labels.
using Subgroup = std::vector<Label>;

// Every subgroup, ordered by size then elements. Throws OrderBudgetExceeded
// above kMaxLatticeOrder.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);

struct JordanReport {
  std::size_t min_normal_abelian_index = 1;
  Subgroup witness;  // largest normal abelian subgroup, first in lattice order
  std::size_t subgroup_count = 0;
  std::size_t normal_count = 0;
  std::size_t abelian_normal_count = 0;
};

JordanReport min_normal_abelian_index(const FiniteGroup& g);

struct BoundAudit {
  bool holds = false;
  std::size_t measured = 0;
};

BoundAudit audit_bound(const FiniteGroup& g, std::size_t claimed_bound);

}  // namespace jordkit::quot
