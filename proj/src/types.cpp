#include "pbnn/types.hpp"

#include <algorithm>
#include <charconv>

#include "pbnn/errors.hpp"

namespace pbnn {

namespace {

void check_dimension(unsigned n) {
  if (n < 3 || n > kMaxDimension)
    throw ConfigError("dimension must be in [3, " + std::to_string(kMaxDimension) + "], got " +
                      std::to_string(n));
}

}  // namespace

BinaryVector::BinaryVector(unsigned n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_dimension(n);
  if (bits & ~mask(n)) throw ConfigError("state has bits above dimension " + std::to_string(n));
}

BinaryVector BinaryVector::from_components(std::span<const int> components) {
  const auto n = static_cast<unsigned>(components.size());
  check_dimension(n);
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (components[i] == +1)
      bits |= std::uint64_t{1} << i;
    else if (components[i] != -1)
      throw ConfigError("state components must be -1 or +1");
  }
  return {n, bits};
}

BinaryVector BinaryVector::from_index(unsigned n, std::uint64_t index) {
  check_dimension(n);
  if (index == 0 || index - 1 > mask(n))
    throw ConfigError("state index " + std::to_string(index) + " out of range");
  return {n, index - 1};
}

BinaryVector BinaryVector::parse(unsigned n, std::string_view text) {
  check_dimension(n);
  if (text.size() != n)
    throw DimensionError("state literal '" + std::string(text) + "' has " +
                      std::to_string(text.size()) + " components, expected " + std::to_string(n));
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < n; ++i) {
    switch (text[i]) {
      case '+':
      case '1':
        bits |= std::uint64_t{1} << i;
        break;
      case '-':
      case '0':
        break;
      default:
        throw ConfigError("state literal may only contain + - 1 0");
    }
  }
  return {n, bits};
}

int BinaryVector::at(unsigned i) const {
  if (i < 1 || i > n_) throw ConfigError("component index out of range");
  return (bits_ >> (i - 1)) & 1 ? +1 : -1;
}

std::vector<int> BinaryVector::components() const {
  std::vector<int> out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = (bits_ >> i) & 1 ? +1 : -1;
  return out;
}

std::string BinaryVector::to_string() const {
  std::string s(n_, '-');
  for (unsigned i = 0; i < n_; ++i)
    if ((bits_ >> i) & 1) s[i] = '+';
  return s;
}

LocalWeights::LocalWeights(int a, int b, int c) : wa(a), wb(b), wc(c) {
  for (int w : {a, b, c})
    if (w != -1 && w != +1) throw ConfigError("local weights must be -1 or +1");
}

ConnectionNumber::ConnectionNumber(unsigned cn) : cn_(cn) {
  if (cn > 7) throw ConfigError("connection number must be 0..7, got " + std::to_string(cn));
}

LocalWeights ConnectionNumber::weights() const {
  auto sign = [this](unsigned bit) { return (cn_ >> bit) & 1 ? +1 : -1; };
  return {sign(2), sign(1), sign(0)};
}

std::vector<ConnectionNumber> default_connection_numbers() {
  return {ConnectionNumber{0}, ConnectionNumber{1}, ConnectionNumber{2},
          ConnectionNumber{3}, ConnectionNumber{5}, ConnectionNumber{7}};
}

PermutationId::PermutationId(std::vector<unsigned> sigma) : sigma_(std::move(sigma)) {
  const auto n = sigma_.size();
  check_dimension(static_cast<unsigned>(n));
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : sigma_) {
    if (v < 1 || v > n || seen[v])
      throw ConfigError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

PermutationId PermutationId::identity(unsigned n) {
  check_dimension(n);
  std::vector<unsigned> s(n);
  for (unsigned i = 0; i < n; ++i) s[i] = i + 1;
  return PermutationId{std::move(s)};
}

PermutationId PermutationId::parse(std::string_view text) {
  if (text.size() >= 2 && text.substr(0, 2) == "P(" && text.back() == ')')
    text = text.substr(2, text.size() - 3);
  std::vector<unsigned> sigma;
  if (text.find(',') != std::string_view::npos) {
    while (!text.empty()) {
      auto comma = text.find(',');
      auto field = text.substr(0, comma);
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw ConfigError("invalid permutation entry '" + std::string(field) + "'");
      sigma.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw ConfigError("invalid permutation digit '" + std::string(1, ch) + "'");
      sigma.push_back(static_cast<unsigned>(ch - '0'));
    }
  }
  return PermutationId{std::move(sigma)};
}

std::string PermutationId::digits() const {
  std::string s;
  const bool wide = sigma_.size() > 9;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(sigma_[i]);
  }
  return s;
}

PbnnConfig::PbnnConfig(unsigned n, ConnectionNumber cn, PermutationId perm)
    : n_(n), cn_(cn), perm_(std::move(perm)) {
  check_dimension(n);
  if (perm_.size() != n)
    throw DimensionError("permutation has " + std::to_string(perm_.size()) +
                      " entries but dimension is " + std::to_string(n));
}

std::string PbnnConfig::display() const {
  return "n=" + std::to_string(n_) + " CN" + std::to_string(cn_.value()) + " " + perm_.display();
}

}  // namespace pbnn
