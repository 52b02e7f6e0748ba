#include "qprob/rational.hpp"

#include <cctype>

#include "qprob/errors.hpp"

namespace qprob {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    return Rational(mpz_class(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d{std::string(den)};
  if (d == 0) {
    throw Error("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(mpz_class{std::string(num)}, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

}  // namespace qprob
