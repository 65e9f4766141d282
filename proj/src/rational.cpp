#include "liesoliton/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace liesoliton {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(std::move(num), std::move(den));
}

Rational rational_from_string(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == start) throw std::invalid_argument("not a rational: '" + text + "'");
    return text.substr(start, p - start);
  };
  Integer num(digits(pos));
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits(pos));
  }
  if (pos != text.size()) throw std::invalid_argument("not a rational: '" + text + "'");
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace liesoliton
