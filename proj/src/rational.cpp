#include "qhs/rational.hpp"

#include <cctype>

#include "qhs/error.hpp"

namespace qhs {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("bad rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParseError("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (seen_slash && r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace qhs
