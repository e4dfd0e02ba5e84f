#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffkit/signature.hpp"

// Reference product by explicit rewriting of generator words. Deliberately
// slow and shares no code path with blade_product beyond Signature::square.
namespace cliffkit::oracle {

// Unreduced product e_{w[0]} e_{w[1]} ... of 1-based generator indices.
struct GeneratorWord {
  Signature sig;
  std::vector<int> word;

  GeneratorWord(Signature s, std::vector<int> w) : sig(s), word(std::move(w)) {
    for (const int i : word)
      if (i < 1 || i > sig.n())
        throw std::out_of_range("generator index " + std::to_string(i) + " outside [1, " +
                                std::to_string(sig.n()) + "]");
  }
};

struct Reduction {
  SignedBlade result;
  std::size_t steps = 0; // adjacent swaps plus adjacent-pair eliminations
};

// Rewrites the word until strictly ascending, one adjacent step at a time:
// e_j e_i -> -e_i e_j for i < j, and e_i e_i -> square(i).
inline Reduction reduce_word_counted(const GeneratorWord &w) {
  std::vector<int> word = w.word;
  int sign = 1;
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        ++steps;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= w.sig.square(word[i]);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                   word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        ++steps;
        changed = true;
        break;
      }
    }
  }
  std::uint32_t bits = 0;
  for (const int i : word)
    bits |= std::uint32_t{1} << (i - 1);
  return {{sign, BladeMask(bits)}, steps};
}

inline SignedBlade reduce_word(const GeneratorWord &w) { return reduce_word_counted(w).result; }

// Generator indices of a canonical blade, ascending.
inline std::vector<int> expand(BladeMask m) {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (m.contains(i))
      out.push_back(i);
  return out;
}

inline SignedBlade oracle_product(BladeMask a, BladeMask b, const Signature &sig) {
  require_valid(sig, a);
  require_valid(sig, b);
  std::vector<int> word = expand(a);
  const std::vector<int> rhs = expand(b);
  word.insert(word.end(), rhs.begin(), rhs.end());
  return reduce_word(GeneratorWord(sig, std::move(word)));
}

} // namespace cliffkit::oracle
