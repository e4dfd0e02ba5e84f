#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include "cliffkit/multivector.hpp"

namespace cliffkit {

// Text form of a multivector: a signed sum of terms such as
// `3.5*e13 - 2*e2 + 1`. A blade is `e` followed by generator indices
// (1-9, then a, b, c for 10-12); `e0` or a bare number is the scalar.
// Indices out of ascending order are reduced with the algebra laws, so
// `e21` reads as `-e12`.

namespace detail {

inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_number(long long v) { return std::to_string(v); }

template <typename T> std::string format_scalar(T v) {
  if constexpr (std::is_floating_point_v<T>)
    return format_number(static_cast<double>(v));
  else
    return format_number(static_cast<long long>(v));
}

class TermParser {
public:
  TermParser(const Signature &sig, std::string_view text) : sig_(sig), text_(text) {}

  Multivector<double> parse() {
    Multivector<double> out(sig_);
    skip_ws();
    if (done())
      fail("empty expression");
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      const auto [value, blade] = term();
      out[blade.blade] += sign * blade.sign * value;
      skip_ws();
    }
    return out;
  }

private:
  std::pair<double, SignedBlade> term() {
    double value = 1.0;
    bool have_number = false;
    if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      value = number();
      have_number = true;
      skip_ws();
      if (done() || peek() != '*')
        return {value, SignedBlade{}};
      ++pos_;
      skip_ws();
    }
    if (done() || peek() != 'e')
      fail(have_number ? "expected blade after '*'" : "expected number or blade");
    return {value, blade()};
  }

  double number() {
    double v = 0.0;
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{})
      fail("malformed number");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return v;
  }

  SignedBlade blade() {
    ++pos_; // 'e'
    SignedBlade acc{};
    bool any = false;
    while (!done() && std::isalnum(static_cast<unsigned char>(peek()))) {
      const char c = peek();
      ++pos_;
      any = true;
      if (c == '0')
        continue;
      const int index = index_from_char(c);
      if (index == 0 || index > sig_.n())
        fail(std::string("generator '") + c + "' outside signature " + to_string(sig_));
      const SignedBlade step = blade_product(sig_, acc.blade, BladeMask::generator(index));
      acc = {acc.sign * step.sign, step.blade};
    }
    if (!any)
      fail("blade needs at least one index");
    return acc;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("multivector parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  Signature sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Multivector<double> parse_multivector(const Signature &sig, std::string_view text) {
  return detail::TermParser(sig, text).parse();
}

// Terms in ascending blade-mask order, zero terms omitted; "0" if all vanish.
template <typename T> std::string format_multivector(const Multivector<T> &a) {
  std::string out;
  const auto c = a.coeffs();
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const T v = c[i];
    if (v == T{})
      continue;
    const bool negative = v < T{};
    const T mag = negative ? -v : v;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0)
      out += detail::format_scalar(mag);
    else if (mag == T{1})
      out += blade_name(BladeMask(i));
    else
      out += detail::format_scalar(mag) + "*" + blade_name(BladeMask(i));
  }
  return out.empty() ? "0" : out;
}

} // namespace cliffkit
