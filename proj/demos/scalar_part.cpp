// Recovers the scalar part of a random element through the sandwich sum,
// in an even and an odd dimensional algebra.
#include <iostream>
#include <random>

#include "cliffkit/cliffkit.hpp"

int main() {
  std::mt19937_64 rng(7);
  for (const cliffkit::Signature sig : {cliffkit::Signature(2, 2), cliffkit::Signature(1, 2)}) {
    const auto a = cliffkit::random_integer_multivector(sig, rng);
    const auto sum = cliffkit::sandwich_sum(a);
    std::cout << "R_{" << cliffkit::to_string(sig) << "}\n"
              << "  a             = " << cliffkit::format_multivector(a) << '\n'
              << "  sum e_J a e^J = " << cliffkit::format_multivector(sum) << '\n'
              << "  <a>_0 from the formula = " << cliffkit::scalar_part_theorem1(a) << '\n';
  }
}
