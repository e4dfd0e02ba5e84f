// R_{0,2} is the quaternions: i = e1, j = e2, k = e12.
#include <iostream>

#include "cliffkit/cliffkit.hpp"

int main() {
  using cliffkit::BladeMask;
  using MV = cliffkit::Multivector<double>;
  const cliffkit::Signature h(0, 2);

  const MV i = MV::blade(h, BladeMask(1));
  const MV j = MV::blade(h, BladeMask(2));
  const MV k = MV::blade(h, BladeMask(3));
  std::cout << "i*j = " << cliffkit::format_multivector(i * j) << '\n';
  std::cout << "j*i = " << cliffkit::format_multivector(j * i) << '\n';
  std::cout << "i*j*k = " << cliffkit::format_multivector(i * j * k) << '\n';

  const MV a = cliffkit::parse_multivector(h, "1 + 2*e1 + 3*e2 + 4*e12");
  const MV four_re = a - i * a * i - j * a * j - k * a * k;
  std::cout << "a = " << cliffkit::format_multivector(a) << '\n'
            << "a - iai - jaj - kak = " << cliffkit::format_multivector(four_re) << '\n';
}
