#include "liecheck/rational.hpp"

#include "liecheck/errors.hpp"

#include <cctype>

namespace liecheck {

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

Rat parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num) || (slash != std::string_view::npos && !valid_int(den)))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  Rat r;
  r.get_num() = Int(std::string(num));
  if (slash != std::string_view::npos) {
    if (!den.empty() && den.front() == '+') den.remove_prefix(1);
    r.get_den() = Int(std::string(den));
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  } else {
    r.get_den() = 1;
  }
  r.canonicalize();
  return r;
}

Rat factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

}  // namespace liecheck
