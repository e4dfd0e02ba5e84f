// Uniform error of componentwise Bernstein approximation of
// cos x + sin x e12 in R_{0,2}.
#include <iostream>

#include "cliffkit/cliffkit.hpp"

int main() {
  namespace ap = cliffkit::approx;
  const auto f = ap::make_target("clifford-exp", cliffkit::Signature(0, 2));
  for (const int m : {4, 8, 16, 32, 64, 128}) {
    const auto r = ap::approximate(f, m);
    std::cout << "m = " << m << "  sup error = " << r.combined_error << '\n';
  }
}
