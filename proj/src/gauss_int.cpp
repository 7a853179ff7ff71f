#include "focklat/gauss_int.hpp"

#include <cctype>

namespace focklat {

namespace {

// Parses one signed decimal integer starting at pos, advancing pos.
BigInt parse_int(const std::string& s, size_t& pos, bool* had_digits) {
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  BigInt v = 0;
  *had_digits = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    ++pos;
    *had_digits = true;
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

GaussInt parse_gauss_int(const std::string& text) {
  size_t pos = 0;
  bool digits = false;
  BigInt first = parse_int(text, pos, &digits);
  const bool first_neg = !text.empty() && text[0] == '-';

  if (pos == text.size()) {
    if (!digits) throw std::invalid_argument("parse_gauss_int: empty input '" + text + "'");
    return {first, 0};
  }
  if (text[pos] == 'i') {
    ++pos;
    if (pos != text.size())
      throw std::invalid_argument("parse_gauss_int: trailing characters in '" + text + "'");
    // "i", "-i", "3i", "-3i"
    if (!digits) first = first_neg ? -1 : 1;
    return {0, first};
  }
  // "a+bi" / "a-bi"
  if (!digits) throw std::invalid_argument("parse_gauss_int: malformed '" + text + "'");
  bool im_digits = false;
  const size_t sign_pos = pos;
  if (text[pos] != '+' && text[pos] != '-')
    throw std::invalid_argument("parse_gauss_int: malformed '" + text + "'");
  BigInt second = parse_int(text, pos, &im_digits);
  if (pos >= text.size() || text[pos] != 'i')
    throw std::invalid_argument("parse_gauss_int: expected 'i' in '" + text + "'");
  ++pos;
  if (pos != text.size())
    throw std::invalid_argument("parse_gauss_int: trailing characters in '" + text + "'");
  if (!im_digits) second = text[sign_pos] == '-' ? -1 : 1;
  return {first, second};
}

}  // namespace focklat
