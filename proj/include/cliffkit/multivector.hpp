#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffkit/signature.hpp"

namespace cliffkit {

// Dense element of R_{p,q}: one coefficient per basis blade, indexed by the
// blade mask. Index 0 holds the scalar part.
template <typename T = double> class Multivector {
public:
  using value_type = T;

  explicit Multivector(Signature sig) : sig_(sig), coeffs_(sig.blade_count(), T{}) {}

  Multivector(Signature sig, std::vector<T> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count())
      throw std::invalid_argument("multivector: expected " +
                                  std::to_string(sig_.blade_count()) + " coefficients, got " +
                                  std::to_string(coeffs_.size()));
  }

  static Multivector scalar(Signature sig, T value) {
    Multivector out(sig);
    out.coeffs_[0] = value;
    return out;
  }

  static Multivector blade(Signature sig, BladeMask m, T value = T{1}) {
    require_valid(sig, m);
    Multivector out(sig);
    out.coeffs_[m.bits] = value;
    return out;
  }

  static Multivector blade(Signature sig, SignedBlade sb) {
    return blade(sig, sb.blade, static_cast<T>(sb.sign));
  }

  const Signature &signature() const { return sig_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const T> coeffs() const { return coeffs_; }
  std::span<T> coeffs() { return coeffs_; }

  const T &operator[](BladeMask m) const { return coeffs_[m.bits]; }
  T &operator[](BladeMask m) { return coeffs_[m.bits]; }

  T scalar_part() const { return coeffs_[0]; }

  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != T{})
        return false;
    return true;
  }

  Multivector &operator+=(const Multivector &o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Multivector &operator-=(const Multivector &o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Multivector &operator*=(T s) {
    for (auto &c : coeffs_)
      c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
  friend Multivector operator*(Multivector a, T s) { return a *= s; }
  friend Multivector operator*(T s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) {
    for (auto &c : a.coeffs_)
      c = -c;
    return a;
  }

  friend bool operator==(const Multivector &a, const Multivector &b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  void check_same(const Multivector &o) const {
    if (!(sig_ == o.sig_))
      throw std::invalid_argument("multivector signature mismatch: " + to_string(sig_) +
                                  " vs " + to_string(o.sig_));
  }

private:
  Signature sig_;
  std::vector<T> coeffs_;
};

namespace detail {

template <typename T> std::vector<std::uint32_t> support(const Multivector<T> &a) {
  std::vector<std::uint32_t> out;
  const auto c = a.coeffs();
  for (std::uint32_t i = 0; i < c.size(); ++i)
    if (c[i] != T{})
      out.push_back(i);
  return out;
}

template <typename T, typename SignFn>
Multivector<T> apply_grade_sign(Multivector<T> a, SignFn sign_of_grade) {
  auto c = a.coeffs();
  for (std::uint32_t i = 0; i < c.size(); ++i)
    if (sign_of_grade(BladeMask(i).grade()) < 0)
      c[i] = -c[i];
  return a;
}

} // namespace detail

// Geometric product, the bilinear extension of blade_product. Zero
// coefficients are skipped, so products with a blade cost O(2^n).
template <typename T> Multivector<T> gp(const Multivector<T> &a, const Multivector<T> &b) {
  a.check_same(b);
  const Signature &sig = a.signature();
  Multivector<T> out(sig);
  const auto rhs = detail::support(b);
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  auto co = out.coeffs();
  for (std::uint32_t x = 0; x < ca.size(); ++x) {
    if (ca[x] == T{})
      continue;
    for (const std::uint32_t y : rhs) {
      const SignedBlade sb = blade_product(sig, BladeMask(x), BladeMask(y));
      const T term = ca[x] * cb[y];
      if (sb.sign > 0)
        co[sb.blade.bits] += term;
      else
        co[sb.blade.bits] -= term;
    }
  }
  return out;
}

template <typename T> Multivector<T> operator*(const Multivector<T> &a, const Multivector<T> &b) {
  return gp(a, b);
}

// <a>_k: keeps the grade-k coefficients.
template <typename T> Multivector<T> grade_project(const Multivector<T> &a, int k) {
  if (k < 0 || k > a.signature().n())
    throw std::out_of_range("grade " + std::to_string(k) + " outside [0, " +
                            std::to_string(a.signature().n()) + "]");
  Multivector<T> out(a.signature());
  const auto ca = a.coeffs();
  auto co = out.coeffs();
  for (std::uint32_t i = 0; i < ca.size(); ++i)
    if (BladeMask(i).grade() == k)
      co[i] = ca[i];
  return out;
}

// a_*: grade k scaled by (-1)^k. An algebra automorphism.
template <typename T> Multivector<T> principal_involution(Multivector<T> a) {
  return detail::apply_grade_sign(std::move(a), involution_sign);
}

// Grade k scaled by (-1)^{k(k+1)/2}. An anti-automorphism.
template <typename T> Multivector<T> conjugation(Multivector<T> a) {
  return detail::apply_grade_sign(std::move(a), conjugation_sign);
}

// Grade k scaled by (-1)^{k(k-1)/2}. Reverses products.
template <typename T> Multivector<T> reversion(Multivector<T> a) {
  return detail::apply_grade_sign(std::move(a), reversion_sign);
}

// <a b>_0 without forming the full product: only x = y terms reach the scalar.
template <typename T> T scalar_product(const Multivector<T> &a, const Multivector<T> &b) {
  a.check_same(b);
  const Signature &sig = a.signature();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  T acc{};
  for (std::uint32_t x = 0; x < ca.size(); ++x) {
    if (ca[x] == T{} || cb[x] == T{})
      continue;
    const T term = ca[x] * cb[x];
    if (blade_product(sig, BladeMask(x), BladeMask(x)).sign > 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Component a_I recovered as <a e^I>_0.
template <typename T> T coeff(const Multivector<T> &a, BladeMask i) {
  const Signature &sig = a.signature();
  require_valid(sig, i);
  const SignedBlade r = reciprocal_blade(sig, i);
  const int square = blade_product(sig, i, r.blade).sign;
  const T v = a[i];
  return square * r.sign > 0 ? v : -v;
}

} // namespace cliffkit
