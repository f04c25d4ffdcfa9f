#include <kacrep/errors.hpp>
#include <kacrep/param_poly.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace kacrep {

ParamNames make_params(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) {
      throw DeclarationError("parameter names must be non-empty and distinct");
    }
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

ParamNames make_params(std::initializer_list<std::string> names) {
  return make_params(std::vector<std::string>(names));
}

bool same_params(const ParamNames& a, const ParamNames& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

namespace {
const ParamNames& empty_params() {
  static const ParamNames none = std::make_shared<const std::vector<std::string>>();
  return none;
}
}  // namespace

ParamPoly::ParamPoly() : params_(empty_params()) {}

ParamPoly::ParamPoly(ParamNames params) : params_(params ? std::move(params) : empty_params()) {}

ParamPoly::ParamPoly(ParamNames params, const Rational& constant) : ParamPoly(std::move(params)) {
  if (constant != 0) terms_.emplace(Exponents(params_->size(), 0), constant);
}

ParamPoly ParamPoly::variable(ParamNames params, std::string_view name) {
  ParamPoly p(std::move(params));
  Exponents e(p.params_->size(), 0);
  e[p.index_of(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

ParamPoly ParamPoly::from_terms(ParamNames params, Terms terms) {
  ParamPoly p(std::move(params));
  for (auto& [e, c] : terms) {
    if (e.size() != p.params_->size()) {
      throw DeclarationError("exponent vector length does not match the parameter list");
    }
    c.canonicalize();
    if (c != 0) p.terms_.emplace(e, c);
  }
  return p;
}

std::size_t ParamPoly::index_of(std::string_view name) const {
  const auto& names = *params_;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw DeclarationError("parameter '" + std::string(name) + "' is not declared");
  }
  return static_cast<std::size_t>(it - names.begin());
}

void ParamPoly::check_same(const ParamPoly& other, const char* op) const {
  if (!same_params(params_, other.params_)) {
    throw DeclarationError(std::string("parameter lists differ in ") + op);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned e) { return e == 0; }));
}

Rational ParamPoly::constant_value() const {
  if (!is_constant()) throw PreconditionError("polynomial " + str() + " is not a constant");
  return constant_term();
}

Rational ParamPoly::constant_term() const {
  const auto it = terms_.find(Exponents(params_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ParamPoly::degree(std::string_view name) const {
  const auto i = index_of(name);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

ParamPoly ParamPoly::coefficient(std::string_view name, unsigned power) const {
  const auto i = index_of(name);
  ParamPoly out(params_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != power) continue;
    auto reduced = e;
    reduced[i] = 0;
    out.terms_.emplace(std::move(reduced), c);
  }
  return out;
}

ParamPoly ParamPoly::substitute(const Bindings& bindings) const {
  std::vector<std::pair<std::size_t, Rational>> bound;
  for (const auto& [name, value] : bindings) bound.emplace_back(index_of(name), value);
  if (bound.empty()) return *this;
  ParamPoly out(params_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    auto reduced = e;
    for (const auto& [i, value] : bound) {
      for (unsigned k = 0; k < e[i]; ++k) coeff *= value;
      reduced[i] = 0;
    }
    if (coeff == 0) continue;
    auto [it, inserted] = out.terms_.emplace(std::move(reduced), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

ParamPoly ParamPoly::derivative(std::string_view name) const {
  const auto i = index_of(name);
  ParamPoly out(params_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    auto lowered = e;
    lowered[i] -= 1;
    out.terms_.emplace(std::move(lowered), c * e[i]);
  }
  return out;
}

ParamPoly ParamPoly::rebase(const ParamNames& wider) const {
  if (same_params(params_, wider)) return ParamPoly::from_terms(wider, terms_);
  std::vector<std::size_t> target;
  ParamPoly probe(wider);
  for (const auto& n : *params_) target.push_back(probe.index_of(n));
  ParamPoly out(wider);
  for (const auto& [e, c] : terms_) {
    Exponents w(wider->size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) w[target[k]] = e[k];
    out.terms_.emplace(std::move(w), c);
  }
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  check_same(other, "addition");
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  check_same(other, "subtraction");
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_same(b, "multiplication");
  ParamPoly out(a.params_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly& ParamPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  a.check_same(b, "comparison");
  return a.terms_ == b.terms_;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  for (const auto& [e, c] : ordered) {
    Rational mag = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = -mag;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (any) mono << "*";
      mono << (*params_)[k];
      if (e[k] > 1) mono << "^" << e[k];
      any = true;
    }
    if (!any) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << to_string(mag) << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

ParamPoly poly_arith(const ParamPoly& a, const ParamPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw PreconditionError("unknown polynomial operation");
}

namespace {

// Dense univariate coefficients, index = power.
using Univariate = std::vector<Rational>;

Rational evaluate(const Univariate& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - r); caller guarantees r is a root.
Univariate deflate(const Univariate& p, const Rational& r) {
  Univariate q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const ParamPoly& p, std::string_view name) {
  const auto var = p.index_of(name);
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no finite root set");
  Univariate coeffs(p.degree(name) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k != var && e[k] != 0) {
        throw PreconditionError("rational_roots needs a univariate polynomial in " +
                                std::string(name));
      }
    }
    coeffs[e[var]] = c;
  }

  std::vector<Rational> roots;
  while (coeffs.size() > 1 && coeffs[0] == 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : coeffs) {
      Rational scaled = c * lcm_den;
      ints.push_back(scaled.get_num());
    }
    std::vector<Rational> candidates;
    for (const auto& num : positive_divisors(ints.front())) {
      for (const auto& den : positive_divisors(ints.back())) {
        Rational q(num, den);
        q.canonicalize();
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      while (coeffs.size() > 1 && evaluate(coeffs, r) == 0) {
        roots.push_back(r);
        coeffs = deflate(coeffs, r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace kacrep
