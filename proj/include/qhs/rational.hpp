#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhs {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text: "3", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "3", "-7", "1/2", "+4/6" (normalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace qhs
