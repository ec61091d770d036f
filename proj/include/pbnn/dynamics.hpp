#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pbnn/types.hpp"

namespace pbnn {

/// Hidden layer: y_i = sg(wa x_{i-1} + wb x_i + wc x_{i+1}) on the ring.
BinaryVector pbnn_hidden(const BinaryVector& x, const LocalWeights& w);

/// One network step: x'_i = y_{sigma(i)}.
BinaryVector pbnn_step(const BinaryVector& x, const PbnnConfig& cfg);

/// x0 followed by `steps` successive images.
std::vector<BinaryVector> pbnn_trajectory(const BinaryVector& x0, const PbnnConfig& cfg,
                                          std::size_t steps);

/// Precomputed step for hot loops. Equivalent to pbnn_step on raw bit words.
class StepKernel {
 public:
  explicit StepKernel(const PbnnConfig& cfg);

  unsigned size() const noexcept { return n_; }
  std::uint64_t operator()(std::uint64_t bits) const noexcept;

 private:
  unsigned n_;
  std::uint64_t mask_;
  std::uint64_t flip_a_, flip_b_, flip_c_;
  std::vector<unsigned> source_;  // 0-based sigma
};

/// General three-layer binary network with ternary weights.
struct DbnnParams {
  unsigned n = 0;            // state size
  unsigned m = 0;            // hidden size
  std::vector<int> w;        // m x n, row-major: w[j*n + i] = w_{ji}
  std::vector<int> c;        // n x m, row-major: c[i*m + j] = c_{ij}
  std::vector<long long> s;  // n output thresholds
  std::vector<long long> t;  // m hidden thresholds

  DbnnParams(unsigned n, unsigned m);

  int& hidden(unsigned j, unsigned i) { return w.at(std::size_t{j} * n + i); }
  int& output(unsigned i, unsigned j) { return c.at(std::size_t{i} * m + j); }
  int hidden(unsigned j, unsigned i) const { return w.at(std::size_t{j} * n + i); }
  int output(unsigned i, unsigned j) const { return c.at(std::size_t{i} * m + j); }

  /// Throws ConfigError unless every weight is ternary and sizes agree.
  void validate() const;
};

BinaryVector dbnn_step(const BinaryVector& x, const DbnnParams& p);

/// The DBNN whose hidden rows carry the ring weights and whose output
/// matrix is the permutation; thresholds are zero.
DbnnParams embed_pbnn(const PbnnConfig& cfg);

/// x_i -> x_{n-i+1}
BinaryVector reverse_indices(const BinaryVector& x);

/// sigma'(i) = n+1 - sigma(n+1-i). Together with CN1<->CN4 / CN3<->CN6 this
/// conjugates a network by index reversal.
PermutationId reversal_conjugate(const PermutationId& p);

/// CN with wa and wc exchanged (CN1 <-> CN4, CN3 <-> CN6).
ConnectionNumber reversed_connection(ConnectionNumber cn);

}  // namespace pbnn
