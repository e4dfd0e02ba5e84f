#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliffkit/multivector.hpp"
#include "cliffkit/oracle.hpp"

namespace cliffkit::fixtures {

// Every signature with 1 <= p + q <= max_n.
inline std::vector<Signature> all_signatures(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p)
      out.emplace_back(p, n - p);
  return out;
}

template <typename T = double>
Multivector<T> random_mv(const Signature &sig, std::mt19937_64 &rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Multivector<T> out(sig);
  for (auto &c : out.coeffs())
    c = static_cast<T>(dist(rng));
  return out;
}

// Bilinear product built on the word-reduction oracle only.
template <typename T>
Multivector<T> oracle_gp(const Multivector<T> &a, const Multivector<T> &b) {
  const Signature &sig = a.signature();
  Multivector<T> out(sig);
  for (std::uint32_t x = 0; x < sig.blade_count(); ++x) {
    if (a[BladeMask(x)] == T{})
      continue;
    for (std::uint32_t y = 0; y < sig.blade_count(); ++y) {
      if (b[BladeMask(y)] == T{})
        continue;
      const SignedBlade sb = oracle::oracle_product(BladeMask(x), BladeMask(y), sig);
      out[sb.blade] += static_cast<T>(sb.sign) * a[BladeMask(x)] * b[BladeMask(y)];
    }
  }
  return out;
}

} // namespace cliffkit::fixtures
