#pragma once

#include <cstdint>
#include <vector>

#include "pbnn/types.hpp"

namespace pbnn {

/// A prime dimension >= 3.
class PrimeDim {
 public:
  explicit PrimeDim(unsigned np);

  unsigned value() const noexcept { return np_; }

  friend auto operator<=>(const PrimeDim&, const PrimeDim&) = default;

 private:
  unsigned np_;
};

bool is_prime(unsigned v) noexcept;

/// R: sigma1(i+1) = sigma0(i) + 1 (mod n) with values and positions kept in 1..n.
/// This is the same permutation relabelled by a one-step ring rotation.
PermutationId shift_operator(const PermutationId& p);

/// Equivalent permutation set: the R-orbit of a permutation.
struct Eps {
  std::vector<PermutationId> members;  // in R order, starting at the argument
  PermutationId standard;              // lexicographic minimum of members
};

Eps eps_of(const PermutationId& p, PrimeDim d);

/// Fixed point of R: sigma(i+1) = sigma(i) + 1 mod n.
bool is_basic(const PermutationId& p);

PermutationId standard_id(const PermutationId& p, PrimeDim d);

/// Candidates examined by enumerate_standard_ids is np!; default allows np <= 11.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 39'916'800;

/// All standard IDs in ascending order. Throws BudgetError if np! exceeds `budget`.
std::vector<PermutationId> enumerate_standard_ids(PrimeDim d,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// (np-1)! + np - 1. Throws OverflowError when it does not fit in 64 bits.
std::uint64_t count_standard_ids(PrimeDim d);

}  // namespace pbnn
