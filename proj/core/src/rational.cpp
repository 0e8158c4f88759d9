#include "claims/rational.hpp"

#include <cctype>

namespace claims {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading '0' as an octal prefix, so
// digit runs like "0609" must be converted by hand.
Integer from_digits(std::string_view s) {
  Integer v = 0;
  for (char c : s) {
    v *= 10;
    v += c - '0';
  }
  return v;
}

Integer pow10(unsigned n) {
  Integer p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

std::optional<Rational> parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (frac_part.empty()) return std::nullopt;
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  Integer numerator = int_part.empty() ? Integer(0) : from_digits(int_part);
  Integer scale = pow10(static_cast<unsigned>(frac_part.size()));
  numerator *= scale;
  if (!frac_part.empty()) numerator += from_digits(frac_part);
  if (negative) numerator = -numerator;
  return Rational(numerator, scale);
}

std::optional<Rational> parse_number(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d = from_digits(den);
    if (d == 0) return std::nullopt;
    Integer n = from_digits(num);
    if (negative) n = -n;
    return Rational(n, d);
  }
  return parse_decimal(text);
}

std::string decimal_string(const Rational& value, unsigned precision, bool trim_zeros) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  Integer scale = pow10(precision);
  Integer scaled = num * scale;
  Integer q, r;
  boost::multiprecision::divide_qr(scaled, den, q, r);
  Integer twice = r * 2;
  if (twice > den || (twice == den && (q & 1) != 0)) ++q;

  Integer int_part = q / scale;
  Integer frac_part = q % scale;

  std::string out;
  if (negative && (int_part != 0 || frac_part != 0)) out += '-';
  out += int_part.str();
  if (precision > 0) {
    std::string frac = frac_part.str();
    frac.insert(frac.begin(), precision - frac.size(), '0');
    if (trim_zeros) {
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }
    if (!frac.empty()) {
      out += '.';
      out += frac;
    }
  }
  return out;
}

std::string exact_string(const Rational& value) {
  Integer den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

}  // namespace claims
