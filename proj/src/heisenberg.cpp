#include <kacrep/heisenberg.hpp>
#include <kacrep/linsolve.hpp>

namespace kacrep {

namespace {

bool in_h_prime(const GeneratorLabel& l) { return l.kind == GenKind::y || l.kind == GenKind::z; }

struct Family {
  explicit Family(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t count = 0;
  std::string location;
  std::string residual;
  bool failed = false;

  void check(const PolyMatrix& r, const std::string& where) {
    ++count;
    if (failed || r.is_zero()) return;
    failed = true;
    const auto d = describe_first_entry(r);
    const auto eq = d.find(" = ");
    location = where + " " + d.substr(0, eq);
    residual = d.substr(eq + 3);
  }
  void into(VerificationReport& report) const {
    if (failed) {
      report.add(name, false, location, residual);
    } else {
      report.add(name + " (" + std::to_string(count) + " cases)", true);
    }
  }
};

ParamNames with_t(const ParamNames& params) {
  std::vector<std::string> names(params->begin(), params->end());
  names.push_back("t");
  return make_params(std::move(names));
}

PolyMatrix t_derivative(const PolyMatrix& m) { return m.derivative("t"); }

}  // namespace

StructureConstants build_heisenberg(const Algebra& alg) {
  const auto& g = alg.sc;
  StructureConstants H;
  for (const auto& l : g.basis) {
    if (l.odd() || in_h_prime(l)) {
      H.basis.push_back(l);
      H.roots.push_back(g.roots[g.index(l)]);
    }
  }
  H.table.assign(H.size(), std::vector<SparseVector>(H.size()));
  for (std::size_t a = 0; a < H.size(); ++a) {
    for (std::size_t b = 0; b < H.size(); ++b) {
      const auto& la = H.basis[a];
      const auto& lb = H.basis[b];
      const bool opposite = (la.kind == GenKind::u && lb.kind == GenKind::v) ||
                            (la.kind == GenKind::v && lb.kind == GenKind::u);
      if (!opposite) continue;
      for (const auto& [c, f] : g.bracket(g.index(la), g.index(lb))) {
        if (in_h_prime(g.basis[c])) H.table[a][b].emplace(H.index(g.basis[c]), f);
      }
    }
  }
  H.k = g.k;
  return H;
}

Representation rho_family(const KacModule& K, const TwistSpec& spec) {
  const auto T = twist(K, spec);
  const auto wider = with_t(K.rep.params);
  const auto t = ParamPoly::variable(wider, "t");
  Representation rep;
  rep.kind = "rho_t";
  rep.params = wider;
  rep.dim = T.rep.dim;
  rep.basis = T.rep.basis;
  for (const auto& [label, m] : T.rep.matrices) {
    PolyMatrix out(rep.dim, rep.dim, wider);
    for (std::size_t r = 0; r < rep.dim; ++r) {
      for (const auto& [c, p] : m.row(r)) {
        auto q = p.rebase(wider);
        if (rep.basis[r].block != rep.basis[c].block) q *= t;
        out.set(r, c, std::move(q));
      }
    }
    rep.matrices.emplace(label, std::move(out));
  }
  return rep;
}

Representation phi_map(const Representation& rho_t, const StructureConstants& H) {
  for (const auto& [label, m] : rho_t.matrices) {
    if (m.degree("t") > 1) {
      throw StructuralError("rho_t(" + label.name() + ") is not affine in t");
    }
  }
  Representation phi;
  phi.kind = "phi";
  phi.params = rho_t.params;
  phi.dim = rho_t.dim;
  phi.basis = rho_t.basis;
  for (const auto& label : H.basis) {
    const auto& m = rho_t.matrix(label);
    if (label.kind == GenKind::v) {
      phi.matrices.emplace(label, m.substitute({{"t", 0}}));
    } else {
      phi.matrices.emplace(label, t_derivative(m));
    }
  }
  return phi;
}

VerificationReport check_rho_family(const Representation& rho_t, const KacModule& K,
                                    const TwistSpec& spec) {
  VerificationReport report;
  Family affine{"d^2 rho_t / dt^2 = 0"};
  Family split{"rho_0 is block diagonal (split)"};
  Family one{"rho_1 equals the twist"};
  const auto T = twist(K, spec);
  for (const auto& [label, m] : rho_t.matrices) {
    affine.check(m.derivative("t").derivative("t"), label.name());
    auto zero = m.substitute({{"t", 0}});
    PolyMatrix off(zero.rows(), zero.cols(), zero.params());
    for (std::size_t r = 0; r < zero.rows(); ++r) {
      for (const auto& [c, p] : zero.row(r)) {
        if (rho_t.basis[r].block != rho_t.basis[c].block) off.set(r, c, p);
      }
    }
    split.check(off, label.name());
    one.check(m.substitute({{"t", 1}}) - T.rep.matrix(label).rebase(rho_t.params), label.name());
  }
  affine.into(report);
  split.into(report);
  one.into(report);
  return report;
}

VerificationReport check_phi_representation(const Representation& phi, const StructureConstants& H) {
  Family minus{"[phi(a-),phi(b-)] = 0"};
  Family plus{"[phi(a),phi(b)] = 0 for a,b in g1 + h'"};
  Family hminus{"[phi(h),phi(a-)] = 0"};
  Family mixed{"[phi(a-),phi(a+)] = phi(iota'[a-,a+])"};
  for (std::size_t a = 0; a < H.size(); ++a) {
    for (std::size_t b = a; b < H.size(); ++b) {
      const auto& la = H.basis[a];
      const auto& lb = H.basis[b];
      auto r = label_bracket(phi, la, lb);
      r -= expand(H, H.bracket(a, b), phi.matrices, phi.dim, phi.params);
      const std::string where = "[" + la.name() + "," + lb.name() + "]";
      const bool va = la.kind == GenKind::v;
      const bool vb = lb.kind == GenKind::v;
      if (va && vb) {
        minus.check(r, where);
      } else if (!va && !vb) {
        plus.check(r, where);
      } else if (in_h_prime(la) || in_h_prime(lb)) {
        hminus.check(r, where);
      } else {
        mixed.check(r, where);
      }
    }
  }
  VerificationReport report;
  minus.into(report);
  plus.into(report);
  hminus.into(report);
  mixed.into(report);
  return report;
}

VerificationReport check_mixed_identity(const Representation& rho_t, const StructureConstants& sc) {
  std::map<GeneratorLabel, PolyMatrix> prime;
  for (const auto& [label, m] : rho_t.matrices) prime.emplace(label, t_derivative(m));
  Family fam{"[rho_t(a),rho'(b)] + [rho'(a),rho_t(b)] = rho'([a,b])"};
  for (std::size_t a = 0; a < sc.size(); ++a) {
    for (std::size_t b = a; b < sc.size(); ++b) {
      const auto& la = sc.basis[a];
      const auto& lb = sc.basis[b];
      auto r = super_bracket(rho_t.matrix(la), la.odd(), prime.at(lb), lb.odd());
      r += super_bracket(prime.at(la), la.odd(), rho_t.matrix(lb), lb.odd());
      r -= expand(sc, sc.bracket(a, b), prime, rho_t.dim, rho_t.params);
      fam.check(r, "[" + la.name() + "," + lb.name() + "]");
    }
  }
  VerificationReport report;
  fam.into(report);
  return report;
}

InducingModule heisenberg_inducing_module(const KacModule& K, const TwistSpec& spec,
                                          const StructureConstants& H) {
  spec.validate(K.algebra->spec);
  const auto dL = K.even.dim();
  const auto n = static_cast<std::size_t>(spec.n);
  InducingModule M;
  M.params = K.rep.params;
  M.dim = n * dL;
  for (std::size_t beta = 0; beta < n; ++beta) {
    for (const auto& info : K.even.rep.basis) M.weights.push_back(info.weight);
  }
  auto shift = [&](const Rational& s) {
    PolyMatrix m(M.dim, M.dim, M.params);
    if (s == 0) return m;
    for (std::size_t beta = 0; beta + 1 < n; ++beta) {
      for (std::size_t w = 0; w < dL; ++w) m.set(beta * dL + w, (beta + 1) * dL + w, ParamPoly(M.params, s));
    }
    return m;
  };
  for (const auto& l : H.basis) {
    if (l.kind == GenKind::y) M.action.emplace(l, shift(spec.nu_y));
    if (l.kind == GenKind::z) M.action.emplace(l, shift(spec.nu_c));
  }
  return M;
}

VerificationReport compare_with_KH(const Representation& phi, const KacModule& K,
                                   const TwistSpec& spec, const StructureConstants& H,
                                   const std::optional<Representation>& rho_t) {
  VerificationReport report;
  const auto dL = K.even.dim();
  const auto dK = K.rep.dim;
  const auto n = static_cast<std::size_t>(spec.n);
  const auto P = static_cast<std::size_t>(K.algebra->datum.P);
  const auto expected_dim = (std::size_t{1} << P) * n * dL;
  report.add("dim phi-module = 2^P n dim L = " + std::to_string(expected_dim),
             phi.dim == expected_dim, "dimension", std::to_string(phi.dim));

  const auto kh = induce(H, heisenberg_inducing_module(K, spec, H), "kh");
  report.add("dim K_H = dim phi-module", kh.dim == phi.dim, "dimension", std::to_string(kh.dim));
  if (kh.dim != phi.dim) return report;

  std::map<std::pair<std::vector<int>, std::size_t>, std::size_t> k_index;
  for (std::size_t g = 0; g < dK; ++g) k_index[{K.rep.basis[g].odd_subset, K.rep.basis[g].even_index}] = g;
  std::vector<std::size_t> to_phi(kh.dim);
  for (std::size_t g = 0; g < kh.dim; ++g) {
    const auto& info = kh.basis[g];
    const auto beta = info.even_index / dL;
    const auto w = info.even_index % dL;
    to_phi[g] = beta * dK + k_index.at({info.odd_subset, w});
  }
  std::vector<std::size_t> to_kh(kh.dim);
  for (std::size_t g = 0; g < kh.dim; ++g) to_kh[to_phi[g]] = g;

  bool weights_ok = true;
  for (std::size_t g = 0; g < kh.dim; ++g) {
    if (kh.basis[g].weight != phi.basis[to_phi[g]].weight) weights_ok = false;
  }
  report.add("characters agree under the basis identification", weights_ok && character(kh) == character(phi));

  Family same{"phi(X) = K_H(X) for every generator of H"};
  for (const auto& l : H.basis) {
    const auto& src = phi.matrix(l);
    PolyMatrix permuted(kh.dim, kh.dim, phi.params);
    for (std::size_t r = 0; r < src.rows(); ++r) {
      for (const auto& [c, p] : src.row(r)) permuted.set(to_kh[r], to_kh[c], p);
    }
    same.check(permuted - kh.matrix(l).rebase(phi.params), l.name());
  }
  same.into(report);

  std::vector<std::size_t> generating;
  for (std::size_t g = 0; g < phi.dim; ++g) {
    if (phi.basis[g].layer() == 0) generating.push_back(g);
  }

  // Free generation: the v-monomials applied to the generating subspace span everything.
  std::vector<DenseMatrix> v_mats;
  for (std::size_t j = 1; j <= P; ++j) v_mats.push_back(DenseMatrix::from_poly(phi.matrix(v_(static_cast<int>(j)))));
  DenseMatrix span(phi.dim, (std::size_t{1} << P) * generating.size());
  std::size_t col = 0;
  for (unsigned mask = 0; mask < (1u << P); ++mask) {
    for (auto g : generating) {
      std::vector<Rational> x(phi.dim, Rational(0));
      x[g] = 1;
      for (std::size_t j = P; j-- > 0;) {
        if (!(mask & (1u << j))) continue;
        std::vector<Rational> y(phi.dim, Rational(0));
        for (std::size_t r = 0; r < phi.dim; ++r) {
          for (std::size_t c = 0; c < phi.dim; ++c) {
            if (v_mats[j](r, c) != 0 && x[c] != 0) y[r] += v_mats[j](r, c) * x[c];
          }
        }
        x = std::move(y);
      }
      for (std::size_t r = 0; r < phi.dim; ++r) span(r, col) = x[r];
      ++col;
    }
  }
  const auto rank = row_reduce(span).rank;
  report.add("free g_{-1}-module on L' (x) J_n: rank " + std::to_string(rank), rank == phi.dim,
             "wedge rank", std::to_string(rank) + " of " + std::to_string(phi.dim));

  Family kills{"phi(a+) = 0 on the generating subspace"};
  for (const auto& l : H.basis) {
    if (l.kind != GenKind::u) continue;
    const auto& m = phi.matrix(l);
    PolyMatrix cols(phi.dim, phi.dim, phi.params);
    for (std::size_t r = 0; r < phi.dim; ++r) {
      for (const auto& [c, p] : m.row(r)) {
        if (phi.basis[c].layer() == 0) cols.set(r, c, p);
      }
    }
    kills.check(cols, l.name());
  }
  kills.into(report);

  Family shift{"phi(h)(w (x) v_i) = nu(h) w (x) v_{i+1}"};
  Family trivial{"h' acts trivially within each J_n layer"};
  for (const auto& l : H.basis) {
    if (!in_h_prime(l)) continue;
    const Rational s = l.kind == GenKind::y ? spec.nu_y : spec.nu_c;
    PolyMatrix expected(phi.dim, phi.dim, phi.params);
    if (s != 0) {
      for (std::size_t beta = 0; beta + 1 < n; ++beta) {
        for (std::size_t g = 0; g < dK; ++g) expected.set(beta * dK + g, (beta + 1) * dK + g, ParamPoly(phi.params, s));
      }
    }
    const auto& m = phi.matrix(l);
    shift.check(m - expected, l.name());
    PolyMatrix diag(phi.dim, phi.dim, phi.params);
    for (std::size_t r = 0; r < phi.dim; ++r) {
      for (const auto& [c, p] : m.row(r)) {
        if (phi.basis[r].block == phi.basis[c].block) diag.set(r, c, p);
      }
    }
    trivial.check(diag, l.name());
  }
  shift.into(report);
  trivial.into(report);

  if (rho_t) {
    Family derived{"rho' = 0 on [g0,g0]"};
    for (const auto& [label, m] : rho_t->matrices) {
      if (label.kind == GenKind::h || label.kind == GenKind::e || label.kind == GenKind::f) {
        derived.check(m.derivative("t"), label.name());
      }
    }
    derived.into(report);
  }
  return report;
}

}  // namespace kacrep
