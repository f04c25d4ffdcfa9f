#include <kacrep/errors.hpp>
#include <kacrep/rational.hpp>

#include <cctype>

namespace kacrep {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw PreconditionError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  }
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class q{std::string(den)};
  if (q == 0) throw PreconditionError("zero denominator in rational '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kacrep
