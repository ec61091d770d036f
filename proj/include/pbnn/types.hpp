#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbnn {

/// Largest dimension a BinaryVector can hold (one bit per neuron).
inline constexpr unsigned kMaxDimension = 64;

/// Sign of an integer with ties broken to +1.
constexpr int sg(long long v) noexcept { return v >= 0 ? +1 : -1; }

/// N-component state over {-1,+1}. Component x_i lives in bit i-1, set bit
/// means +1. The Dmap index C_k of a state is bits + 1.
class BinaryVector {
 public:
  BinaryVector(unsigned n, std::uint64_t bits);

  static BinaryVector from_components(std::span<const int> components);
  static BinaryVector from_index(unsigned n, std::uint64_t index);
  /// Accepts "+-+" / "101" style literals, x_1 first.
  static BinaryVector parse(unsigned n, std::string_view text);
  static BinaryVector lower_endpoint(unsigned n) { return {n, 0}; }
  static BinaryVector upper_endpoint(unsigned n) { return {n, mask(n)}; }

  unsigned size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t index() const noexcept { return bits_ + 1; }

  /// Component x_i for 1 <= i <= n, as -1 or +1.
  int at(unsigned i) const;
  std::vector<int> components() const;
  bool is_endpoint() const noexcept { return bits_ == 0 || bits_ == mask(n_); }

  /// "+-+" form, x_1 first.
  std::string to_string() const;

  static constexpr std::uint64_t mask(unsigned n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

 private:
  unsigned n_;
  std::uint64_t bits_;
};

struct LocalWeights {
  int wa;
  int wb;
  int wc;

  LocalWeights(int a, int b, int c);
  int sum() const noexcept { return wa + wb + wc; }

  friend bool operator==(const LocalWeights&, const LocalWeights&) = default;
};

/// One of the eight sign patterns CN0..CN7 of the local connection.
/// CN0 = (-1,-1,-1), CN1 = (-1,-1,+1), ..., CN7 = (+1,+1,+1): wa is the high bit.
class ConnectionNumber {
 public:
  explicit ConnectionNumber(unsigned cn);

  unsigned value() const noexcept { return cn_; }
  LocalWeights weights() const;

  friend auto operator<=>(const ConnectionNumber&, const ConnectionNumber&) = default;

 private:
  unsigned cn_;
};

/// The connection numbers swept by default; CN4 and CN6 are index
/// reversals of CN1 and CN3.
std::vector<ConnectionNumber> default_connection_numbers();

/// Bijection sigma on {1..n}, stored 1-indexed: sigma()[i-1] == sigma(i).
/// Ordering is lexicographic on the digit sequence sigma(1)...sigma(n).
class PermutationId {
 public:
  explicit PermutationId(std::vector<unsigned> sigma);

  static PermutationId identity(unsigned n);
  /// "1325476" for n <= 9; comma separated ("1,10,2,...") for any n.
  static PermutationId parse(std::string_view text);

  unsigned size() const noexcept { return static_cast<unsigned>(sigma_.size()); }
  unsigned operator()(unsigned i) const { return sigma_.at(i - 1); }
  const std::vector<unsigned>& sigma() const noexcept { return sigma_; }

  /// Digit string: "1325476", or comma separated when n > 9.
  std::string digits() const;
  /// "P(1325476)"
  std::string display() const { return "P(" + digits() + ")"; }

  friend auto operator<=>(const PermutationId&, const PermutationId&) = default;

 private:
  std::vector<unsigned> sigma_;
};

class PbnnConfig {
 public:
  PbnnConfig(unsigned n, ConnectionNumber cn, PermutationId perm);

  unsigned size() const noexcept { return n_; }
  ConnectionNumber cn() const noexcept { return cn_; }
  const PermutationId& perm() const noexcept { return perm_; }

  std::string display() const;

  friend bool operator==(const PbnnConfig&, const PbnnConfig&) = default;

 private:
  unsigned n_;
  ConnectionNumber cn_;
  PermutationId perm_;
};

}  // namespace pbnn
