#include "qcw/rational.hpp"

#include <stdexcept>

namespace qcw {

mpq_class parse_rational(std::string_view text) {
  const std::string t(text);
  const auto bad = [&] { return std::invalid_argument("not a rational number: '" + t + "'"); };
  mpq_class out;
  const auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string whole = t.substr(0, dot);
    const std::string frac = t.substr(dot + 1);
    bool negative = !whole.empty() && (whole[0] == '-' || whole[0] == '+');
    if (negative && whole[0] == '+') negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    const std::string digits = whole + frac;
    if (frac.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    out = mpq_class(negative ? mpz_class(-num) : num, den);
  } else {
    if (t.empty() || t.find_first_not_of("+-0123456789/") != std::string::npos) throw bad();
    if (out.set_str(t, 10) != 0) throw bad();
    if (out.get_den() == 0) throw bad();
  }
  out.canonicalize();
  return out;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace qcw
