#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffkit {

// Largest supported number of generators. Multivectors are dense, so the
// coefficient count is 2^n (4096 at the limit).
inline constexpr int kMaxN = 12;

// Metric signature of R_{p,q}: p generators square to +1, the remaining q
// square to -1. Generators are numbered 1..n, positive ones first.
class Signature {
public:
  constexpr Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0)
      throw std::invalid_argument("signature: p and q must be non-negative");
    if (p + q < 1 || p + q > kMaxN)
      throw std::invalid_argument("signature: n = p + q must be in [1, " +
                                  std::to_string(kMaxN) + "]");
  }

  constexpr int p() const { return p_; }
  constexpr int q() const { return q_; }
  constexpr int n() const { return p_ + q_; }

  // Number of basis blades, 2^n.
  constexpr std::size_t blade_count() const { return std::size_t{1} << n(); }

  // Square of generator e_index (1-based).
  constexpr int square(int index) const { return index <= p_ ? 1 : -1; }

  // Bitmask of the generators that square to -1.
  constexpr std::uint32_t negative_mask() const {
    return ((std::uint32_t{1} << n()) - 1) & ~((std::uint32_t{1} << p_) - 1);
  }

  friend constexpr bool operator==(const Signature &, const Signature &) = default;

private:
  int p_;
  int q_;
};

inline std::string to_string(const Signature &sig) {
  return std::to_string(sig.p()) + "," + std::to_string(sig.q());
}

// Parses "p,q".
inline Signature parse_signature(const std::string &text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("signature must look like 'p,q': " + text);
  std::size_t used_p = 0;
  std::size_t used_q = 0;
  int p = 0;
  int q = 0;
  try {
    p = std::stoi(text.substr(0, comma), &used_p);
    q = std::stoi(text.substr(comma + 1), &used_q);
  } catch (const std::exception &) {
    throw std::invalid_argument("signature must look like 'p,q': " + text);
  }
  if (used_p != comma || used_q != text.size() - comma - 1)
    throw std::invalid_argument("signature must look like 'p,q': " + text);
  return Signature(p, q);
}

// Canonical basis blade e_I. Bit (i-1) is set iff generator e_i is a factor;
// factors are always taken in ascending index order.
struct BladeMask {
  std::uint32_t bits = 0;

  constexpr BladeMask() = default;
  constexpr explicit BladeMask(std::uint32_t b) : bits(b) {}

  constexpr int grade() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int index) const { return (bits >> (index - 1)) & 1u; }
  constexpr bool valid_for(const Signature &sig) const {
    return bits < sig.blade_count();
  }

  // Mask of the full pseudo-scalar e_{12...n}.
  static constexpr BladeMask pseudoscalar(const Signature &sig) {
    return BladeMask(static_cast<std::uint32_t>(sig.blade_count() - 1));
  }
  static constexpr BladeMask generator(int index) {
    return BladeMask(std::uint32_t{1} << (index - 1));
  }

  friend constexpr auto operator<=>(const BladeMask &, const BladeMask &) = default;
};

// A canonical blade with a sign in {-1, +1}.
struct SignedBlade {
  int sign = 1;
  BladeMask blade;

  friend constexpr bool operator==(const SignedBlade &, const SignedBlade &) = default;
};

inline void require_valid(const Signature &sig, BladeMask m) {
  if (!m.valid_for(sig))
    throw std::out_of_range("blade mask " + std::to_string(m.bits) +
                            " is not valid for signature " + to_string(sig));
}

// Number of transpositions needed to bring e_a e_b into canonical order:
// for every generator of b, the count of generators of a with a higher index.
constexpr int reordering_swaps(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    swaps += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return swaps;
}

// e_a e_b = sign * e_{a xor b}.
constexpr SignedBlade blade_product(const Signature &sig, BladeMask a, BladeMask b) {
  int sign = (reordering_swaps(a.bits, b.bits) & 1) ? -1 : 1;
  if (std::popcount(a.bits & b.bits & sig.negative_mask()) & 1)
    sign = -sign;
  return {sign, BladeMask(a.bits ^ b.bits)};
}

// Reversion sign (-1)^{k(k-1)/2} for a blade of grade k.
constexpr int reversion_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }
// Principal involution sign (-1)^k.
constexpr int involution_sign(int k) { return (k & 1) ? -1 : 1; }
// Conjugation sign (-1)^{k(k+1)/2}.
constexpr int conjugation_sign(int k) { return ((k * (k + 1) / 2) & 1) ? -1 : 1; }

// Reciprocal blade e^J = e^{j_k} ... e^{j_1}, where e^i = e_i for i <= p and
// -e_i otherwise. Reversing the order contributes the reversion sign.
constexpr SignedBlade reciprocal_blade(const Signature &sig, BladeMask j) {
  int sign = reversion_sign(j.grade());
  if (std::popcount(j.bits & sig.negative_mask()) & 1)
    sign = -sign;
  return {sign, j};
}

// Single character naming generator e_index: 1-9, then a, b, c for 10-12.
constexpr char index_char(int index) {
  return index < 10 ? static_cast<char>('0' + index) : static_cast<char>('a' + index - 10);
}

// Returns the generator index for a name character, or 0 if it is not one.
constexpr int index_from_char(char c) {
  if (c >= '1' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'c')
    return c - 'a' + 10;
  return 0;
}

// "1" for the scalar blade, otherwise "e" followed by the ascending indices.
inline std::string blade_name(BladeMask m) {
  if (m.empty())
    return "1";
  std::string out = "e";
  for (std::uint32_t bits = m.bits; bits != 0; bits &= bits - 1)
    out += index_char(std::countr_zero(bits) + 1);
  return out;
}

} // namespace cliffkit
