#include "dirlap/rational.hpp"

#include <cctype>

namespace dirlap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt p{std::string(num)};
    BigInt q{std::string(den)};
    if (q == 0) return std::nullopt;
    Rational r(p, q);
    return negative ? Rational(-r) : r;
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    BigInt p = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt q(1);
    for (char c : frac) {
      p = p * 10 + (c - '0');
      q *= 10;
    }
    Rational r(p, q);
    return negative ? Rational(-r) : r;
  }

  if (!all_digits(text)) return std::nullopt;
  Rational r{BigInt(std::string(text))};
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace dirlap
