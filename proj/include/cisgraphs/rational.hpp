#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cisgraphs {

/// Exact fraction, always canonical (positive denominator, lowest terms).
using Rational = mpq_class;

/// "p/q" with the denominator always present ("1/1", "-3/4").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

}  // namespace cisgraphs
