#include <kacrep/linsolve.hpp>
#include <kacrep/matryoshka.hpp>

namespace kacrep {

namespace {

// One report line per family of identities, with the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void check(const PolyMatrix& residual, const std::string& where) {
    ++count_;
    if (!failed_ && !residual.is_zero()) {
      failed_ = true;
      location_ = where + " " + describe_first_entry(residual);
    }
  }
  void into(VerificationReport& report) const {
    if (failed_) {
      const auto eq = location_.find(" = ");
      report.add(name_, false, location_.substr(0, eq), location_.substr(eq + 3));
    } else {
      report.add(name_ + " (" + std::to_string(count_) + " cases)", true);
    }
  }

 private:
  std::string name_;
  std::size_t count_ = 0;
  bool failed_ = false;
  std::string location_;
};

PolyMatrix anti(const PolyMatrix& a, const PolyMatrix& b) { return super_bracket(a, true, b, true); }

Representation assemble(const KacModule& K, int blocks,
                        const std::map<GeneratorLabel, PolyMatrix>& sup,
                        const std::vector<Rational>& scalars, std::string kind) {
  const auto D = K.rep.dim;
  const auto nb = static_cast<std::size_t>(blocks);
  Representation rep;
  rep.kind = std::move(kind);
  rep.params = K.rep.params;
  rep.dim = nb * D;
  for (std::size_t i = 0; i < nb; ++i) {
    for (auto info : K.rep.basis) {
      info.block = static_cast<int>(i);
      rep.basis.push_back(std::move(info));
    }
  }
  for (const auto& [label, base] : K.rep.matrices) {
    PolyMatrix m(rep.dim, rep.dim, rep.params);
    for (std::size_t i = 0; i < nb; ++i) m.set_block(i * D, i * D, base);
    const auto it = sup.find(label);
    if (it != sup.end() && !it->second.is_zero()) {
      for (std::size_t i = 0; i + 1 < nb; ++i) m.set_block(i * D, (i + 1) * D, it->second * scalars[i]);
    }
    rep.matrices.emplace(label, std::move(m));
  }
  return rep;
}

std::map<GeneratorLabel, PolyMatrix> replication_superdiagonal(const KacModule& K,
                                                               const DerivedOddGenerators& D) {
  std::map<GeneratorLabel, PolyMatrix> sup;
  sup.emplace(kY, PolyMatrix::identity(K.rep.dim, K.rep.params));
  for (const auto& [label, m] : D.u_prime) sup.emplace(label, m);
  return sup;
}

ReplicatedModule replicate_impl(const KacModule& K, const DerivedOddGenerators& D,
                                const ReplicationSpec& spec) {
  ReplicatedModule R;
  R.blocks = spec.N;
  R.base_dim = K.rep.dim;
  R.superdiagonal = spec.lambdas;
  R.probe = kY;
  R.rep = assemble(K, spec.N, replication_superdiagonal(K, D), spec.lambdas, "replicated");
  return R;
}

PolyMatrix block_scaling(std::size_t blocks, std::size_t D, const std::vector<Rational>& scale,
                         const ParamNames& params) {
  PolyMatrix q(blocks * D, blocks * D, params);
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t r = 0; r < D; ++r) q.set(i * D + r, i * D + r, ParamPoly(params, scale[i]));
  }
  return q;
}

Bindings generic_bindings(const ParamNames& params) {
  // Values chosen away from every integer typicality root.
  static const std::vector<Rational> values{Rational(5, 7), Rational(3, 11), Rational(2, 13),
                                            Rational(7, 17), Rational(11, 19)};
  Bindings b;
  if (!params) return b;
  for (std::size_t i = 0; i < params->size(); ++i) b.emplace((*params)[i], values[i % values.size()]);
  return b;
}

}  // namespace

DerivedOddGenerators odd_derivative(const KacModule& K) {
  DerivedOddGenerators D;
  D.k = K.algebra->sc.k;
  for (int j = 1; j <= K.algebra->datum.P; ++j) {
    const auto& u = K.rep.matrix(u_(j));
    if (u.degree("b") > 1) {
      throw StructuralError("u" + std::to_string(j) + " has degree " + std::to_string(u.degree("b")) +
                            " in b; expected at most 1");
    }
    auto up = u.coefficient("b", 1) * D.k;
    if (!up.is_parameter_free()) throw StructuralError("u'" + std::to_string(j) + " depends on a parameter");
    D.u_prime.emplace(u_(j), std::move(up));
  }
  return D;
}

VerificationReport check_heisenberg_identity(const KacModule& K, const DerivedOddGenerators& D) {
  const int P = K.algebra->datum.P;
  const auto I = PolyMatrix::identity(K.rep.dim, K.rep.params);
  Tally uv("{u'_i,v_j} = k delta_ij I");
  Tally upup("{u'_i,u'_j} = 0");
  Tally upu("{u'_i,u_j} + {u_i,u'_j} = 0");
  for (int i = 1; i <= P; ++i) {
    const auto& upi = D.u_prime.at(u_(i));
    for (int j = 1; j <= P; ++j) {
      auto r = anti(upi, K.rep.matrix(v_(j)));
      if (i == j) r -= I * D.k;
      uv.check(r, "{u'" + std::to_string(i) + ",v" + std::to_string(j) + "}");
      if (j < i) continue;
      upup.check(anti(upi, D.u_prime.at(u_(j))), "{u'" + std::to_string(i) + ",u'" + std::to_string(j) + "}");
      upu.check(anti(upi, K.rep.matrix(u_(j))) + anti(K.rep.matrix(u_(i)), D.u_prime.at(u_(j))),
                "{u'" + std::to_string(i) + ",u" + std::to_string(j) + "}+{u" + std::to_string(i) +
                    ",u'" + std::to_string(j) + "}");
    }
  }
  VerificationReport report;
  uv.into(report);
  upup.into(report);
  upu.into(report);
  return report;
}

void ReplicationSpec::validate() const {
  if (N < 1) throw PreconditionError("replication needs N >= 1, got " + std::to_string(N));
  if (lambdas.size() != static_cast<std::size_t>(N - 1)) {
    throw PreconditionError("replication with N = " + std::to_string(N) + " needs " +
                            std::to_string(N - 1) + " lambda values, got " +
                            std::to_string(lambdas.size()));
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] == 0) {
      throw SplitExtensionError("lambda_" + std::to_string(i + 1) +
                                " = 0 splits the extension into a direct sum; lambdas must be nonzero");
    }
  }
}

void TwistSpec::validate(const SuperAlgebraSpec& spec) const {
  if (n < 1) throw PreconditionError("twist length n must be >= 1, got " + std::to_string(n));
  if (nu_y == 0 && nu_c == 0) throw PreconditionError("twist functional nu must be nonzero");
  if (nu_c != 0 && spec.flavor != Flavor::gl) {
    throw PreconditionError("nu has a z0 component but " + spec.name() + " has no z0");
  }
}

std::map<GeneratorLabel, PolyMatrix> twist_derivation(const KacModule& K, const Rational& nu_y,
                                                      const Rational& nu_c) {
  const bool gl = K.algebra->spec.flavor == Flavor::gl;
  if (nu_c != 0 && !gl) throw PreconditionError("nu has a z0 component on an sl algebra");
  std::map<GeneratorLabel, PolyMatrix> out;
  for (const auto& [label, m] : K.rep.matrices) {
    auto d = m.derivative("b") * (nu_y * K.algebra->sc.k);
    if (gl) d += m.derivative("c") * nu_c;
    out.emplace(label, std::move(d));
  }
  return out;
}

ReplicatedModule replicate(const KacModule& K, const DerivedOddGenerators& D,
                           const ReplicationSpec& spec) {
  spec.validate();
  return replicate_impl(K, D, spec);
}

namespace testing {
ReplicatedModule replicate_allow_zero(const KacModule& K, const DerivedOddGenerators& D,
                                      const ReplicationSpec& spec) {
  if (spec.N < 1 || spec.lambdas.size() != static_cast<std::size_t>(spec.N - 1)) {
    throw PreconditionError("malformed replication spec");
  }
  return replicate_impl(K, D, spec);
}
}  // namespace testing

ReplicatedModule twist(const KacModule& K, const TwistSpec& spec) {
  spec.validate(K.algebra->spec);
  ReplicatedModule R;
  R.blocks = spec.n;
  R.base_dim = K.rep.dim;
  R.superdiagonal.assign(static_cast<std::size_t>(spec.n - 1), Rational(1));
  R.twist = spec;
  R.probe = spec.nu_y != 0 ? kY : kZ0;
  R.rep = assemble(K, spec.n, twist_derivation(K, spec.nu_y, spec.nu_c), R.superdiagonal, "twist");
  return R;
}

VerificationReport rescale_conjugation_check(const KacModule& K, const DerivedOddGenerators& D,
                                             const Rational& lambda) {
  if (lambda == 0) throw SplitExtensionError("lambda = 0 splits the extension");
  const auto one = replicate(K, D, {2, {Rational(1)}});
  const auto scaled = replicate(K, D, {2, {lambda}});
  const Rational inv = 1 / lambda;
  const auto q = block_scaling(2, K.rep.dim, {lambda, Rational(1)}, K.rep.params);
  const auto qinv = block_scaling(2, K.rep.dim, {inv, Rational(1)}, K.rep.params);
  Tally t("Q X(lambda=1) Q^-1 = X(lambda=" + to_string(lambda) + ")");
  for (const auto& [label, m] : one.rep.matrices) {
    t.check(q * m * qinv - scaled.rep.matrix(label), label.name());
  }
  VerificationReport report;
  t.into(report);
  return report;
}

VerificationReport check_block_structure(const ReplicatedModule& R, const KacModule& K) {
  const auto D = K.rep.dim;
  const auto nb = static_cast<std::size_t>(R.blocks);
  Tally diag("diagonal blocks equal the base module");
  Tally shape("only the first superdiagonal is populated");
  for (const auto& [label, m] : R.rep.matrices) {
    for (std::size_t i = 0; i < nb; ++i) {
      diag.check(m.block(i * D, i * D, D, D) - K.rep.matrix(label),
                 label.name() + " block (" + std::to_string(i) + "," + std::to_string(i) + ")");
      for (std::size_t j = 0; j < nb; ++j) {
        if (j == i || j == i + 1) continue;
        shape.check(m.block(i * D, j * D, D, D),
                    label.name() + " block (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  VerificationReport report;
  diag.into(report);
  shape.into(report);
  return report;
}

std::map<GeneratorLabel, ParamPoly> upsilon_extract(const ReplicatedModule& R) {
  if (R.blocks != 2) throw PreconditionError("Upsilon needs a two-step self-extension (N = 2)");
  const IntWeight top(R.rep.basis.front().weight.size(), 0);
  const auto spaces = R.rep.weight_spaces();
  const auto it = spaces.find(top);
  if (it == spaces.end() || it->second.size() != 2) {
    throw StructuralError("top weight space of the extension is not 2-dimensional");
  }
  const auto i0 = it->second[0];
  const auto i1 = it->second[1];
  std::map<GeneratorLabel, ParamPoly> mu;
  for (const auto& [label, m] : R.rep.matrices) {
    if (label.kind != GenKind::h && label.kind != GenKind::y && label.kind != GenKind::z) continue;
    if (!m.at(i1, i0).is_zero() || !(m.at(i0, i0) == m.at(i1, i1))) {
      throw StructuralError(label.name() + " does not act as [[l, mu], [0, l]] on the top weight space");
    }
    mu.emplace(label, m.at(i0, i1));
  }
  return mu;
}

int minpoly_degree_on(const PolyMatrix& A, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return 0;
  auto sub = A.restrict_to(indices);
  const auto d = sub.at(0, 0);
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (!(sub.at(i, i) == d)) throw StructuralError("probe is not scalar-diagonal on a weight space");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) sub.set(i, i, ParamPoly(A.params()));
  const auto N = DenseMatrix::from_poly(sub.substitute(generic_bindings(A.params())));
  auto power = N;
  int degree = 1;
  while (!power.is_zero()) {
    power = power * N;
    ++degree;
    if (static_cast<std::size_t>(degree) > indices.size()) {
      throw StructuralError("probe has more than one eigenvalue on a weight space");
    }
  }
  return degree;
}

std::map<IntWeight, int> jordan_minpoly_profile(const ReplicatedModule& R) {
  std::map<IntWeight, int> out;
  const auto& probe = R.rep.matrix(R.probe);
  for (const auto& [w, idx] : R.rep.weight_spaces()) out.emplace(w, minpoly_degree_on(probe, idx));
  return out;
}

IsoDecision self_extension_iso_decision(const KacModule& K, const TwistSpec& nu,
                                        const TwistSpec& mu) {
  nu.validate(K.algebra->spec);
  mu.validate(K.algebra->spec);
  if (nu.n != mu.n) throw PreconditionError("both twists must have the same length n");
  IsoDecision out;
  const Rational ratio = mu.nu_y != 0 ? nu.nu_y / mu.nu_y : nu.nu_c / mu.nu_c;
  out.isomorphic = ratio != 0 && nu.nu_y == ratio * mu.nu_y && nu.nu_c == ratio * mu.nu_c;

  const auto Tnu = twist(K, nu);
  const auto Tmu = twist(K, mu);
  const auto& weights = Tnu.rep.weight_spaces();
  const auto& top = weights.at(IntWeight(Tnu.rep.basis.front().weight.size(), 0));
  const auto n = static_cast<std::size_t>(nu.n);

  std::pair<Rational, Rational> h;
  if (out.isomorphic) {
    out.ratio = ratio;
    std::vector<Rational> scale(n), inv(n);
    for (std::size_t b = 0; b < n; ++b) {
      mpq_class p = 1;
      for (std::size_t e = b + 1; e < n; ++e) p *= ratio;
      scale[b] = p;
      inv[b] = 1 / p;
    }
    const auto q = block_scaling(n, K.rep.dim, scale, K.rep.params);
    const auto qinv = block_scaling(n, K.rep.dim, inv, K.rep.params);
    out.witness_verified = true;
    for (const auto& [label, m] : Tmu.rep.matrices) {
      if (!(q * m * qinv == Tnu.rep.matrix(label))) out.witness_verified = false;
    }
    h = nu.nu_y != 0 ? std::pair{Rational(1), Rational(0)} : std::pair{Rational(0), Rational(1)};
  } else {
    h = {-nu.nu_c, nu.nu_y};
    out.witness_h = h;
  }
  auto element = [&](const ReplicatedModule& R) {
    auto m = R.rep.matrix(kY) * h.first;
    if (h.second != 0) m += R.rep.matrix(kZ0) * h.second;
    return m;
  };
  out.degree_nu = minpoly_degree_on(element(Tnu), top);
  out.degree_mu = minpoly_degree_on(element(Tmu), top);
  return out;
}

}  // namespace kacrep
