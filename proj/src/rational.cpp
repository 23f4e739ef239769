#include "roughver/rational.hpp"

#include <cctype>

#include "roughver/errors.hpp"

namespace roughver {

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign) {
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == start) {
    throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  }
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t num_end = scan_integer(text, 0, true);
  std::string num(text.substr(0, num_end));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  std::string den = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/') {
      throw ParseError("unexpected character in rational '" + std::string(text) + "'", num_end);
    }
    std::size_t den_end = scan_integer(text, num_end + 1, false);
    if (den_end != text.size()) {
      throw ParseError("trailing characters in rational '" + std::string(text) + "'", den_end);
    }
    den = std::string(text.substr(num_end + 1));
  }
  Integer d(den);
  if (d == 0) {
    throw ParseError("zero denominator in rational '" + std::string(text) + "'", num_end + 1);
  }
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

}  // namespace roughver
