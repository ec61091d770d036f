#include "pbnn/dynamics.hpp"

#include "pbnn/errors.hpp"

namespace pbnn {

namespace {

// Ring neighbours as bit words: bit i of prev holds x_{i-1}, of next x_{i+1}.
std::uint64_t ring_prev(std::uint64_t x, unsigned n, std::uint64_t mask) {
  return ((x << 1) | (x >> (n - 1))) & mask;
}

std::uint64_t ring_next(std::uint64_t x, unsigned n, std::uint64_t mask) {
  return ((x >> 1) | (x << (n - 1))) & mask;
}

// With odd sum wa+wb+wc each term is +-1, so sg of the sum is the majority of
// the three signed terms. A term w*x is +1 iff x's bit differs from (w == -1).
std::uint64_t hidden_bits(std::uint64_t x, unsigned n, std::uint64_t mask, std::uint64_t fa,
                          std::uint64_t fb, std::uint64_t fc) {
  const std::uint64_t a = ring_prev(x, n, mask) ^ fa;
  const std::uint64_t b = x ^ fb;
  const std::uint64_t c = ring_next(x, n, mask) ^ fc;
  return (a & b) | (a & c) | (b & c);
}

std::uint64_t flip_mask(int w, std::uint64_t mask) { return w < 0 ? mask : 0; }

}  // namespace

BinaryVector pbnn_hidden(const BinaryVector& x, const LocalWeights& w) {
  const unsigned n = x.size();
  const auto mask = BinaryVector::mask(n);
  return {n, hidden_bits(x.bits(), n, mask, flip_mask(w.wa, mask), flip_mask(w.wb, mask),
                         flip_mask(w.wc, mask))};
}

StepKernel::StepKernel(const PbnnConfig& cfg)
    : n_(cfg.size()), mask_(BinaryVector::mask(cfg.size())) {
  const auto w = cfg.cn().weights();
  flip_a_ = flip_mask(w.wa, mask_);
  flip_b_ = flip_mask(w.wb, mask_);
  flip_c_ = flip_mask(w.wc, mask_);
  source_.reserve(n_);
  for (unsigned v : cfg.perm().sigma()) source_.push_back(v - 1);
}

std::uint64_t StepKernel::operator()(std::uint64_t bits) const noexcept {
  const std::uint64_t y = hidden_bits(bits, n_, mask_, flip_a_, flip_b_, flip_c_);
  std::uint64_t out = 0;
  for (unsigned i = 0; i < n_; ++i) out |= ((y >> source_[i]) & 1) << i;
  return out;
}

BinaryVector pbnn_step(const BinaryVector& x, const PbnnConfig& cfg) {
  if (x.size() != cfg.size())
    throw DimensionError("state dimension " + std::to_string(x.size()) +
                      " does not match network dimension " + std::to_string(cfg.size()));
  return {x.size(), StepKernel{cfg}(x.bits())};
}

std::vector<BinaryVector> pbnn_trajectory(const BinaryVector& x0, const PbnnConfig& cfg,
                                          std::size_t steps) {
  if (x0.size() != cfg.size())
    throw DimensionError("state dimension does not match network dimension");
  const StepKernel f{cfg};
  std::vector<BinaryVector> out;
  out.reserve(steps + 1);
  out.push_back(x0);
  std::uint64_t bits = x0.bits();
  for (std::size_t t = 0; t < steps; ++t) {
    bits = f(bits);
    out.emplace_back(x0.size(), bits);
  }
  return out;
}

DbnnParams::DbnnParams(unsigned n_, unsigned m_)
    : n(n_), m(m_), w(std::size_t{m_} * n_, 0), c(std::size_t{n_} * m_, 0), s(n_, 0), t(m_, 0) {}

void DbnnParams::validate() const {
  if (w.size() != std::size_t{m} * n || c.size() != std::size_t{n} * m || s.size() != n ||
      t.size() != m)
    throw ConfigError("DBNN parameter sizes do not match n and m");
  for (const auto* mat : {&w, &c})
    for (int v : *mat)
      if (v < -1 || v > 1) throw ConfigError("DBNN connections must be ternary");
}

BinaryVector dbnn_step(const BinaryVector& x, const DbnnParams& p) {
  p.validate();
  if (x.size() != p.n)
    throw DimensionError("state dimension " + std::to_string(x.size()) +
                      " does not match DBNN input size " + std::to_string(p.n));
  const auto xs = x.components();
  std::vector<int> y(p.m);
  for (unsigned j = 0; j < p.m; ++j) {
    long long acc = -p.t[j];
    for (unsigned i = 0; i < p.n; ++i) acc += static_cast<long long>(p.hidden(j, i)) * xs[i];
    y[j] = sg(acc);
  }
  std::vector<int> out(p.n);
  for (unsigned i = 0; i < p.n; ++i) {
    long long acc = p.s[i];
    for (unsigned j = 0; j < p.m; ++j) acc += static_cast<long long>(p.output(i, j)) * y[j];
    out[i] = sg(acc);
  }
  return BinaryVector::from_components(out);
}

DbnnParams embed_pbnn(const PbnnConfig& cfg) {
  const unsigned n = cfg.size();
  const auto lw = cfg.cn().weights();
  DbnnParams p{n, n};
  for (unsigned j = 0; j < n; ++j) {
    p.hidden(j, (j + n - 1) % n) = lw.wa;
    p.hidden(j, j) = lw.wb;
    p.hidden(j, (j + 1) % n) = lw.wc;
  }
  for (unsigned i = 0; i < n; ++i) p.output(i, cfg.perm()(i + 1) - 1) = 1;
  return p;
}

BinaryVector reverse_indices(const BinaryVector& x) {
  const unsigned n = x.size();
  std::uint64_t out = 0;
  for (unsigned i = 0; i < n; ++i) out |= ((x.bits() >> i) & 1) << (n - 1 - i);
  return {n, out};
}

PermutationId reversal_conjugate(const PermutationId& p) {
  const unsigned n = p.size();
  std::vector<unsigned> s(n);
  for (unsigned i = 1; i <= n; ++i) s[i - 1] = n + 1 - p(n + 1 - i);
  return PermutationId{std::move(s)};
}

ConnectionNumber reversed_connection(ConnectionNumber cn) {
  const unsigned v = cn.value();
  return ConnectionNumber{(v & 2u) | ((v & 1u) << 2) | ((v >> 2) & 1u)};
}

}  // namespace pbnn
