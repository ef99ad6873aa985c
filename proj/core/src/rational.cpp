#include "biuv/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace biuv {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(first, last - first + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("malformed rational literal: '" + text + "'");

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    BigInt q(den);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(BigInt(num), q);
  } else if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (frac.empty() && whole.empty()) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt integer = whole.empty() ? BigInt(0) : BigInt(whole);
    BigInt fractional = frac.empty() ? BigInt(0) : BigInt(frac);
    value = Rational(integer * scale + fractional, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed rational literal: '" + text + "'");
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << "/" << denominator(r);
  }
  return os.str();
}

std::string decimal_string(const Rational& r, int digits) {
  using F50 = boost::multiprecision::cpp_bin_float_50;
  const F50 x = F50(numerator(r)) / F50(denominator(r));
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational factorial(unsigned n) {
  BigInt acc = 1;
  for (unsigned k = 2; k <= n; ++k) acc *= k;
  return Rational(acc);
}

}  // namespace biuv
