#include "lnq/rational.hpp"

#include <stdexcept>

namespace lnq {

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  const unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
  out.canonicalize();
  if (exp < 0) out = Rat(1) / out;
  return out;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty() || den.find('/') != std::string::npos)
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  auto digits_only = [](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits_only(num, true) || !digits_only(den, false))
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  Rat value(num + "/" + den);
  if (value.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  value.canonicalize();
  return value;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

void internal_check(bool condition, const std::string& message) {
  if (!condition) throw std::logic_error("internal invariant violated: " + message);
}

}  // namespace lnq
