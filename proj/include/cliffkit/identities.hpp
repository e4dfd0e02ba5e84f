#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliffkit/multivector.hpp"
#include "cliffkit/parallel.hpp"
#include "cliffkit/text_format.hpp"

namespace cliffkit {

// ---------------------------------------------------------------------------
// Signed binomial sums
// ---------------------------------------------------------------------------

// Upper bound on n for the integer sums below; keeps every intermediate
// binomial product inside int64.
inline constexpr int kMaxCombinatoricN = 40;

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * (n - k + i) / i;
  return c;
}

namespace detail {
inline void check_nk(int n, int k) {
  if (n < 0 || n > kMaxCombinatoricN || k < 0 || k > n)
    throw std::out_of_range("need 0 <= k <= n <= " + std::to_string(kMaxCombinatoricN) +
                            ", got n=" + std::to_string(n) + " k=" + std::to_string(k));
}
} // namespace detail

// Sum over l of C(n-k, p-l) C(k, l), l from max(0, p-(n-k)) to min(p, k).
// Equals C(n, p).
inline std::int64_t vandermonde_sum(int n, int k, int p) {
  detail::check_nk(n, k);
  if (p < 0 || p > n)
    throw std::out_of_range("need 0 <= p <= n, got p=" + std::to_string(p));
  std::int64_t acc = 0;
  for (int l = std::max(0, p - (n - k)); l <= std::min(p, k); ++l)
    acc += binomial(n - k, p - l) * binomial(k, l);
  return acc;
}

// Sum over p = 0..n and the same l range of (-1)^{pk+l} C(n-k, p-l) C(k, l).
inline std::int64_t lemma2_sum(int n, int k) {
  detail::check_nk(n, k);
  std::int64_t acc = 0;
  for (int p = 0; p <= n; ++p) {
    for (int l = std::max(0, p - (n - k)); l <= std::min(p, k); ++l) {
      const std::int64_t term = binomial(n - k, p - l) * binomial(k, l);
      acc += ((p * k + l) & 1) ? -term : term;
    }
  }
  return acc;
}

// Closed form of lemma2_sum, (1 + (-1)^k)^{n-k} (1 - (-1)^k)^k evaluated by
// cases. k = 0 is checked first so that n = k = 0 gives 1.
inline std::int64_t lemma2_closed_form(int n, int k) {
  detail::check_nk(n, k);
  if (k == 0)
    return std::int64_t{1} << n;
  if (k < n)
    return 0;
  return (n & 1) ? std::int64_t{1} << n : 0;
}

// ---------------------------------------------------------------------------
// Sandwich sums and the scalar-part formula
// ---------------------------------------------------------------------------

// Sum over every blade J (including the empty one) of e_J a e^J.
//
// Each term maps a_x e_x to +/- a_x e_x, so the sum is evaluated blade by
// blade: sign(e_J e_x) * sign(e_{J^x} e_J) * sign(e^J).
template <typename T> Multivector<T> sandwich_sum(const Multivector<T> &a) {
  const Signature &sig = a.signature();
  const auto ca = a.coeffs();
  std::vector<std::uint32_t> support;
  for (std::uint32_t x = 0; x < ca.size(); ++x)
    if (ca[x] != T{})
      support.push_back(x);

  Multivector<T> out(sig);
  auto co = out.coeffs();
  for (std::uint32_t j = 0; j < sig.blade_count(); ++j) {
    const BladeMask bj(j);
    const int rsign = reciprocal_blade(sig, bj).sign;
    for (const std::uint32_t x : support) {
      const SignedBlade left = blade_product(sig, bj, BladeMask(x));
      const SignedBlade right = blade_product(sig, left.blade, bj);
      if (left.sign * right.sign * rsign > 0)
        co[x] += ca[x];
      else
        co[x] -= ca[x];
    }
  }
  return out;
}

// The same sum formed literally with two geometric products per blade.
template <typename T> Multivector<T> sandwich_sum_by_products(const Multivector<T> &a) {
  const Signature &sig = a.signature();
  Multivector<T> out(sig);
  for (std::uint32_t j = 0; j < sig.blade_count(); ++j) {
    const auto ej = Multivector<T>::blade(sig, BladeMask(j));
    const auto ej_recip = Multivector<T>::blade(sig, reciprocal_blade(sig, BladeMask(j)));
    out += gp(gp(ej, a), ej_recip);
  }
  return out;
}

// Full right-hand side of the scalar-part formula:
//   n even: 2^-n     * sum_J e_J a e^J
//   n odd:  2^-(n+1) * (sum_J e_J a e^J + sum_J e_J a_* e^J)
// The result is purely scalar and equals <a>_0. For integer T the division
// is exact because every coefficient of the sum is a multiple of the divisor.
template <typename T> Multivector<T> scalar_part_expression(const Multivector<T> &a) {
  const int n = a.signature().n();
  Multivector<T> sum = sandwich_sum(a);
  T divisor = static_cast<T>(std::int64_t{1} << n);
  if (n & 1) {
    sum += sandwich_sum(principal_involution(a));
    divisor = divisor * T{2};
  }
  for (auto &c : sum.coeffs())
    c = c / divisor;
  return sum;
}

template <typename T> T scalar_part_theorem1(const Multivector<T> &a) {
  return scalar_part_expression(a).scalar_part();
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

using ReportValue = std::variant<std::int64_t, double, std::string>;

struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  ReportValue computed;
  ReportValue expected;
  bool pass = false;
};

inline IdentityReport make_report(std::string identity,
                                  std::vector<std::pair<std::string, std::int64_t>> params,
                                  ReportValue computed, ReportValue expected) {
  const bool pass = computed == expected;
  return {std::move(identity), std::move(params), std::move(computed), std::move(expected), pass};
}

// Sandwich sum of e_I against 2^n e_I (|I| = 0, or |I| = n with n odd) or 0.
inline IdentityReport lemma4_check(const Signature &sig, BladeMask i) {
  require_valid(sig, i);
  const int n = sig.n();
  const int k = i.grade();
  const auto computed = sandwich_sum(Multivector<double>::blade(sig, i));
  Multivector<double> expected(sig);
  if (k == 0 || (k == n && (n & 1)))
    expected[i] = static_cast<double>(std::int64_t{1} << n);
  return make_report("lemma4",
                     {{"p", sig.p()}, {"q", sig.q()}, {"mask", i.bits}, {"k", k}},
                     format_multivector(computed), format_multivector(expected));
}

// All signatures with 1 <= p + q <= max_n, ordered by n then p.
inline std::vector<Signature> signatures_up_to(int max_n) {
  if (max_n < 1 || max_n > kMaxN)
    throw std::out_of_range("max n must be in [1, " + std::to_string(kMaxN) + "]");
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p)
      out.emplace_back(p, n - p);
  return out;
}

// Integer coefficients drawn uniformly from [lo, hi].
template <typename T = double, typename Rng>
Multivector<T> random_integer_multivector(const Signature &sig, Rng &rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Multivector<T> out(sig);
  for (auto &c : out.coeffs())
    c = static_cast<T>(dist(rng));
  return out;
}

// Deterministic per-signature stream derived from a run seed.
inline std::mt19937_64 signature_rng(std::uint64_t seed, const Signature &sig, int stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sig.p()), static_cast<std::uint32_t>(sig.q()),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

inline std::vector<IdentityReport> lemma1_reports(int max_n) {
  std::vector<IdentityReport> out;
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int p = 0; p <= n; ++p)
        out.push_back(make_report("lemma1", {{"n", n}, {"k", k}, {"p", p}},
                                  vandermonde_sum(n, k, p), binomial(n, p)));
  return out;
}

inline std::vector<IdentityReport> lemma2_reports(int max_n) {
  std::vector<IdentityReport> out;
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      out.push_back(make_report("lemma2", {{"n", n}, {"k", k}}, lemma2_sum(n, k),
                                lemma2_closed_form(n, k)));
  return out;
}

// e_J e^J = 1 for every blade of every listed signature.
inline std::vector<IdentityReport> lemma3_reports(const std::vector<Signature> &sigs) {
  auto per_sig = parallel_map(sigs.size(), [&](std::size_t s) {
    const Signature &sig = sigs[s];
    std::vector<IdentityReport> out;
    for (std::uint32_t j = 0; j < sig.blade_count(); ++j) {
      const auto product = gp(Multivector<double>::blade(sig, BladeMask(j)),
                              Multivector<double>::blade(sig, reciprocal_blade(sig, BladeMask(j))));
      out.push_back(make_report("lemma3", {{"p", sig.p()}, {"q", sig.q()}, {"mask", j}},
                                format_multivector(product), std::string("1")));
    }
    return out;
  });
  std::vector<IdentityReport> out;
  for (auto &v : per_sig)
    std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

inline std::vector<IdentityReport> lemma4_reports(const std::vector<Signature> &sigs) {
  auto per_sig = parallel_map(sigs.size(), [&](std::size_t s) {
    std::vector<IdentityReport> out;
    for (std::uint32_t i = 0; i < sigs[s].blade_count(); ++i)
      out.push_back(lemma4_check(sigs[s], BladeMask(i)));
    return out;
  });
  std::vector<IdentityReport> out;
  for (auto &v : per_sig)
    std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

// One report per signature: computed is the number of random samples whose
// scalar-part expression is purely scalar and equal to a[0].
inline std::vector<IdentityReport> theorem1_reports(const std::vector<Signature> &sigs,
                                                    int samples, std::uint64_t seed) {
  return parallel_map(sigs.size(), [&](std::size_t s) {
    const Signature &sig = sigs[s];
    auto rng = signature_rng(seed, sig);
    std::int64_t good = 0;
    for (int t = 0; t < samples; ++t) {
      const auto a = random_integer_multivector(sig, rng);
      const auto expr = scalar_part_expression(a);
      if (expr.is_scalar() && expr.scalar_part() == coeff(a, BladeMask{}))
        ++good;
    }
    return make_report("theorem1",
                       {{"p", sig.p()}, {"q", sig.q()}, {"samples", samples},
                        {"seed", static_cast<std::int64_t>(seed)}},
                       good, std::int64_t{samples});
  });
}

// 4 Re a = (a - i a i) + (a_* - i a_* i) in R_{0,1}, i = e_1.
inline bool complex_remark_holds(const Multivector<double> &a) {
  const Signature sig(0, 1);
  const auto i = Multivector<double>::blade(sig, BladeMask(1));
  const auto as = principal_involution(a);
  const auto lhs = (a - i * a * i) + (as - i * as * i);
  return lhs == Multivector<double>::scalar(sig, 4 * a.scalar_part());
}

// 4 Re a = a - i a i - j a j - k a k in R_{0,2}, i = e_1, j = e_2, k = e_12.
inline bool quaternion_remark_holds(const Multivector<double> &a) {
  const Signature sig(0, 2);
  const auto i = Multivector<double>::blade(sig, BladeMask(1));
  const auto j = Multivector<double>::blade(sig, BladeMask(2));
  const auto k = Multivector<double>::blade(sig, BladeMask(3));
  const auto lhs = a - i * a * i - j * a * j - k * a * k;
  return lhs == Multivector<double>::scalar(sig, 4 * a.scalar_part());
}

// Remark checks for whichever of R_{0,1}, R_{0,2} appear in sigs.
inline std::vector<IdentityReport> remark_reports(const std::vector<Signature> &sigs, int samples,
                                                  std::uint64_t seed) {
  std::vector<IdentityReport> out;
  for (const Signature &sig : sigs) {
    const bool complex = sig == Signature(0, 1);
    const bool quaternion = sig == Signature(0, 2);
    if (!complex && !quaternion)
      continue;
    auto rng = signature_rng(seed, sig, 1);
    std::int64_t good = 0;
    for (int t = 0; t < samples; ++t) {
      const auto a = random_integer_multivector(sig, rng);
      if (complex ? complex_remark_holds(a) : quaternion_remark_holds(a))
        ++good;
    }
    out.push_back(make_report(complex ? "remark_complex" : "remark_quaternion",
                              {{"p", sig.p()}, {"q", sig.q()}, {"samples", samples},
                               {"seed", static_cast<std::int64_t>(seed)}},
                              good, std::int64_t{samples}));
  }
  return out;
}

} // namespace cliffkit
