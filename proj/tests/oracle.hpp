#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain integer vectors and never call into the library's dynamics or
// decomposition code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// CN table written out literally.
inline const std::array<std::array<int, 3>, 8> kWeights = {{
    {-1, -1, -1}, {-1, -1, +1}, {-1, +1, -1}, {-1, +1, +1},
    {+1, -1, -1}, {+1, -1, +1}, {+1, +1, -1}, {+1, +1, +1},
}};

inline int sign(int v) { return v >= 0 ? 1 : -1; }

inline std::vector<int> state_of(unsigned n, std::uint64_t index) {
  std::vector<int> x(n);
  for (unsigned i = 0; i < n; ++i) x[i] = ((index - 1) >> i) & 1 ? 1 : -1;
  return x;
}

inline std::uint64_t index_of(const std::vector<int>& x) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == 1) k |= std::uint64_t{1} << i;
  return k + 1;
}

// x_i(t+1) = y_{sigma(i)}, y_i = sg(wa x_{i-1} + wb x_i + wc x_{i+1}), 1-based sigma.
inline std::vector<int> step(const std::vector<int>& x, unsigned cn, const std::vector<unsigned>& sigma) {
  const int n = static_cast<int>(x.size());
  const auto& w = kWeights[cn];
  std::vector<int> y(n), out(n);
  for (int i = 0; i < n; ++i)
    y[i] = sign(w[0] * x[(i - 1 + n) % n] + w[1] * x[i] + w[2] * x[(i + 1) % n]);
  for (int i = 0; i < n; ++i) out[i] = y[sigma[i] - 1];
  return out;
}

inline std::vector<std::uint64_t> table(unsigned n, unsigned cn, const std::vector<unsigned>& sigma) {
  std::vector<std::uint64_t> next(std::uint64_t{1} << n);
  for (std::uint64_t k = 1; k <= next.size(); ++k) next[k - 1] = index_of(step(state_of(n, k), cn, sigma));
  return next;
}

struct Classification {
  std::vector<std::set<std::uint64_t>> cycles;   // sorted by smallest member
  std::vector<std::size_t> cycle_of;             // per state (0-based index into cycles)
  std::vector<std::uint64_t> transient;          // 0 for periodic points
};

// Iterate 2^n times to land on a cycle, then walk it. Quadratic, fine for n <= 8.
inline Classification classify(const std::vector<std::uint64_t>& next) {
  const auto states = next.size();
  auto f = [&](std::uint64_t k) { return next[k - 1]; };
  std::map<std::uint64_t, std::set<std::uint64_t>> by_min;
  std::vector<std::uint64_t> landing(states);
  for (std::uint64_t k = 1; k <= states; ++k) {
    auto c = k;
    for (std::uint64_t i = 0; i < states; ++i) c = f(c);
    std::set<std::uint64_t> cyc{c};
    for (auto d = f(c); d != c; d = f(d)) cyc.insert(d);
    by_min[*cyc.begin()] = cyc;
    landing[k - 1] = *cyc.begin();
  }
  Classification out;
  std::map<std::uint64_t, std::size_t> id;
  for (auto& [m, cyc] : by_min) {
    id[m] = out.cycles.size();
    out.cycles.push_back(cyc);
  }
  out.cycle_of.resize(states);
  out.transient.resize(states);
  for (std::uint64_t k = 1; k <= states; ++k) {
    const auto cid = id[landing[k - 1]];
    out.cycle_of[k - 1] = cid;
    std::uint64_t l = 0;
    for (auto c = k; !out.cycles[cid].contains(c); c = f(c)) ++l;
    out.transient[k - 1] = l;
  }
  return out;
}

inline std::multiset<std::size_t> cycle_lengths(const Classification& c) {
  std::multiset<std::size_t> m;
  for (const auto& cyc : c.cycles) m.insert(cyc.size());
  return m;
}

inline std::multiset<std::size_t> basin_sizes(const Classification& c) {
  std::vector<std::size_t> sizes(c.cycles.size(), 0);
  for (auto id : c.cycle_of) ++sizes[id];
  return {sizes.begin(), sizes.end()};
}

// Shift operator on 1-based digit vectors, written from the recurrence.
inline std::vector<unsigned> shift(const std::vector<unsigned>& s) {
  const auto n = static_cast<unsigned>(s.size());
  std::vector<unsigned> r(n);
  for (unsigned i = 1; i <= n; ++i) {
    unsigned v = s[i - 1] + 1;
    if (v > n) v -= n;
    r[i % n] = v;
  }
  return r;
}

inline std::vector<unsigned> digits(const std::string& s) {
  std::vector<unsigned> d;
  for (char ch : s) d.push_back(static_cast<unsigned>(ch - '0'));
  return d;
}

inline std::string to_digits(const std::vector<unsigned>& d) {
  std::string s;
  for (auto v : d) s += static_cast<char>('0' + v);
  return s;
}

// Every R-orbit of S_n, as sorted sets keyed by their minimum.
inline std::map<std::vector<unsigned>, std::set<std::vector<unsigned>>> all_orbits(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
  std::map<std::vector<unsigned>, std::set<std::vector<unsigned>>> out;
  std::set<std::vector<unsigned>> seen;
  do {
    if (seen.contains(p)) continue;
    std::set<std::vector<unsigned>> orbit;
    for (auto q = p; orbit.insert(q).second; q = shift(q)) {}
    seen.insert(orbit.begin(), orbit.end());
    out[*orbit.begin()] = orbit;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<unsigned> random_permutation(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
