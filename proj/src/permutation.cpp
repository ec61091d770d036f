#include "pbnn/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "pbnn/errors.hpp"

namespace pbnn {

bool is_prime(unsigned v) noexcept {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

PrimeDim::PrimeDim(unsigned np) : np_(np) {
  if (np < 3 || !is_prime(np))
    throw NotPrimeError("dimension " + std::to_string(np) +
                        " is not a prime >= 3; composite dimensions split into repeated "
                        "sub-connections and are not classified");
}

PermutationId shift_operator(const PermutationId& p) {
  const unsigned n = p.size();
  const auto& s = p.sigma();
  std::vector<unsigned> r(n);
  for (unsigned i = 0; i < n; ++i) r[(i + 1) % n] = s[i] % n + 1;
  return PermutationId{std::move(r)};
}

Eps eps_of(const PermutationId& p, PrimeDim d) {
  if (p.size() != d.value())
    throw DimensionError("permutation size " + std::to_string(p.size()) + " does not match np " +
                      std::to_string(d.value()));
  Eps eps{{p}, p};
  for (auto q = shift_operator(p); q != p; q = shift_operator(q)) {
    if (q < eps.standard) eps.standard = q;
    eps.members.push_back(q);
  }
  return eps;
}

bool is_basic(const PermutationId& p) {
  const unsigned n = p.size();
  for (unsigned i = 1; i <= n; ++i)
    if (p(i % n + 1) != p(i) % n + 1) return false;
  return true;
}

PermutationId standard_id(const PermutationId& p, PrimeDim d) { return eps_of(p, d).standard; }

namespace {

// True if no rotation R^k (1 <= k < n) of s is lexicographically smaller.
// R^k(s)[i] = (s[i-k] + k) mod n on 0-based positions and values.
bool is_orbit_minimum(const std::vector<unsigned>& s) {
  const auto n = static_cast<unsigned>(s.size());
  for (unsigned k = 1; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      const unsigned shifted = (s[(i + n - k) % n] + k) % n;
      if (shifted < s[i]) return false;
      if (shifted > s[i]) break;
    }
  }
  return true;
}

}  // namespace

std::vector<PermutationId> enumerate_standard_ids(PrimeDim d, std::uint64_t budget) {
  const unsigned n = d.value();
  std::uint64_t candidates = 1;
  for (unsigned k = 2; k <= n; ++k) {
    if (candidates > budget / k)
      throw BudgetError("enumerating standard IDs for np=" + std::to_string(n) +
                        " needs np! candidates, over the budget of " + std::to_string(budget));
    candidates *= k;
  }
  if (candidates > budget)
    throw BudgetError("enumerating standard IDs for np=" + std::to_string(n) +
                      " exceeds the budget of " + std::to_string(budget));

  std::vector<unsigned> s(n);
  std::iota(s.begin(), s.end(), 0u);
  std::vector<PermutationId> out;
  do {
    if (is_orbit_minimum(s)) {
      std::vector<unsigned> one_based(n);
      for (unsigned i = 0; i < n; ++i) one_based[i] = s[i] + 1;
      out.emplace_back(std::move(one_based));
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::uint64_t count_standard_ids(PrimeDim d) {
  const unsigned n = d.value();
  std::uint64_t f = 1;
  for (unsigned k = 2; k < n; ++k)
    if (__builtin_mul_overflow(f, std::uint64_t{k}, &f))
      throw OverflowError("(np-1)! overflows 64 bits for np=" + std::to_string(n));
  std::uint64_t total = 0;
  if (__builtin_add_overflow(f, std::uint64_t{n - 1}, &total))
    throw OverflowError("standard ID count overflows 64 bits for np=" + std::to_string(n));
  return total;
}

}  // namespace pbnn
