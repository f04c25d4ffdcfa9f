#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kacrep {

using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws PreconditionError on malformed text
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// p/q in canonical form (mpq_class(p, q) alone is not).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace kacrep
