#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace grc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every construction path canonicalizes.
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q". Whitespace is not accepted.
inline Rat parse_rat(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  std::string s(text);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num), q(den);
  if (q == 0) throw Error("zero denominator in '" + s + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Non-negative even integer.
inline bool is_nonneg_even(const Rat& r) {
  return is_integer(r) && r >= 0 && mpz_even_p(r.get_num_mpz_t());
}

inline Rat rat(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace grc
