#include <kacrep/errors.hpp>
#include <kacrep/serialize.hpp>

#include <sstream>

namespace kacrep {

namespace {

std::string monomial_key(const ParamPoly::Exponents& e, const std::vector<std::string>& names) {
  std::string key;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!key.empty()) key += ".";
    key += names[k] + "^" + std::to_string(e[k]);
  }
  return key.empty() ? "1" : key;
}

ParamPoly::Exponents parse_key(const std::string& key, const ParamPoly& probe) {
  ParamPoly::Exponents e(probe.params()->size(), 0);
  if (key == "1") return e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) {
    const auto caret = part.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == part.size()) {
      throw PreconditionError("malformed monomial key '" + key + "'");
    }
    const auto idx = probe.index_of(part.substr(0, caret));
    const auto power = std::stoul(part.substr(caret + 1));
    if (power == 0 || e[idx] != 0) throw PreconditionError("malformed monomial key '" + key + "'");
    e[idx] = static_cast<unsigned>(power);
  }
  return e;
}

Json weight_json(const IntWeight& w) { return Json(w); }

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

ParamNames params_from(const Json& j) {
  return make_params(j.get<std::vector<std::string>>());
}

}  // namespace

Json to_json(const ParamPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[monomial_key(e, *p.params())] = to_string(c);
  return out;
}

ParamPoly poly_from_json(const Json& j, const ParamNames& params) {
  if (!j.is_object()) throw PreconditionError("polynomial must be a JSON object");
  const ParamPoly probe(params);
  ParamPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    const auto q = parse_rational(value.get<std::string>());
    if (q == 0) throw PreconditionError("polynomial term '" + key + "' has a zero coefficient");
    terms.emplace(parse_key(key, probe), q);
  }
  return ParamPoly::from_terms(params, std::move(terms));
}

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, p] : m.row(r)) entries.push_back(Json::array({r, c, to_json(p)}));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMatrix matrix_from_json(const Json& j, const ParamNames& params) {
  PolyMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), params);
  for (const auto& e : j.at("entries")) {
    m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), poly_from_json(e.at(2), params));
  }
  return m;
}

Json to_json(const Representation& rep) {
  Json basis = Json::array();
  for (const auto& b : rep.basis) {
    basis.push_back(Json{{"block", b.block},
                         {"odd_subset", b.odd_subset},
                         {"even_index", b.even_index},
                         {"weight", weight_json(b.weight)}});
  }
  Json matrices = Json::object();
  for (const auto& [label, m] : rep.matrices) matrices[label.name()] = to_json(m);
  return Json{{"kind", rep.kind},
              {"params", rep.params ? *rep.params : std::vector<std::string>{}},
              {"dim", rep.dim},
              {"basis", basis},
              {"matrices", matrices},
              {"conventions",
               {{"basis_order", "block, layer, lex on odd_subset, even_index"},
                {"wedge_sign", "v_j inserts with (-1)^{#{i in subset : i < j}}"},
                {"weight", "offset from the highest weight in epsilon/delta coordinates"},
                {"odd_index", "idx = (m - i) * n + j for eps_i - delta_j"}}}};
}

Representation representation_from_json(const Json& j) {
  Representation rep;
  rep.kind = j.at("kind").get<std::string>();
  rep.params = params_from(j.at("params"));
  rep.dim = j.at("dim").get<std::size_t>();
  for (const auto& b : j.at("basis")) {
    BasisVectorInfo info;
    info.block = b.at("block").get<int>();
    info.odd_subset = b.at("odd_subset").get<std::vector<int>>();
    info.even_index = b.at("even_index").get<std::size_t>();
    info.weight = b.at("weight").get<IntWeight>();
    rep.basis.push_back(std::move(info));
  }
  for (const auto& [name, m] : j.at("matrices").items()) {
    rep.matrices.emplace(GeneratorLabel::parse(name), matrix_from_json(m, rep.params));
  }
  return rep;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"location", c.location}, {"residual", c.residual}});
  }
  return Json{{"passed", report.passed()}, {"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    r.add(c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("location").get<std::string>(),
          c.at("residual").get<std::string>());
  }
  return r;
}

Json to_json(const RootDatum& d) {
  Json even = Json::array();
  for (std::size_t k = 0; k < d.even_positive.size(); ++k) {
    even.push_back(Json{{"label", "e" + std::to_string(k + 1)},
                        {"coords", d.even_positive[k].coords},
                        {"simple_coords", d.even_positive[k].simple_coords}});
  }
  Json odd = Json::array();
  for (std::size_t k = 0; k < d.odd_positive.size(); ++k) {
    odd.push_back(Json{{"label", "u" + std::to_string(k + 1)},
                       {"i", d.odd_positive[k].i},
                       {"j", d.odd_positive[k].j},
                       {"coords", d.odd_positive[k].coords}});
  }
  Json hp = Json::array();
  for (const auto& l : d.h_prime) hp.push_back(l.name());
  return Json{{"algebra", d.spec.name()},
              {"rank", d.rank},
              {"P", d.P},
              {"simple_roots", d.simple_roots},
              {"even_positive", even},
              {"odd_positive", odd},
              {"cartan", d.cartan},
              {"rho0", rational_list(d.rho0)},
              {"rho1", rational_list(d.rho1)},
              {"rho", rational_list(d.rho)},
              {"h_prime", hp}};
}

Json to_json(const StructureConstants& sc) {
  Json table = Json::object();
  for (std::size_t a = 0; a < sc.size(); ++a) {
    for (std::size_t b = 0; b < sc.size(); ++b) {
      if (sc.table[a][b].empty()) continue;
      Json v = Json::object();
      for (const auto& [c, f] : sc.table[a][b]) v[sc.basis[c].name()] = to_string(f);
      table["[" + sc.basis[a].name() + "," + sc.basis[b].name() + "]"] = v;
    }
  }
  Json basis = Json::array();
  for (const auto& l : sc.basis) basis.push_back(l.name());
  return Json{{"basis", basis}, {"k", to_string(sc.k)}, {"brackets", table}};
}

Json to_json(const TypicalityResult& t) {
  Json factors = Json::array();
  for (const auto& f : t.factors) factors.push_back(to_json(f));
  Json out{{"s", to_json(t.s)},
           {"factors", factors},
           {"factor_product", to_json(t.factor_product)},
           {"s_roots", rational_list(t.s_roots)},
           {"factor_roots", rational_list(t.factor_roots)},
           {"roots_match", t.roots_match}};
  out["constant"] = t.constant ? Json(to_string(*t.constant)) : Json(nullptr);
  return out;
}

Json to_json(const SingularVectorReport& s) {
  Json vecs = Json::array();
  for (const auto& v : s.vectors) {
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < v.coefficients.size(); ++i) {
      if (v.coefficients[i] != 0) coeffs[std::to_string(i)] = to_string(v.coefficients[i]);
    }
    vecs.push_back(Json{{"weight", v.weight}, {"layers", v.layers}, {"coefficients", coeffs}});
  }
  return Json{{"b", to_string(s.b)},
              {"mode", s.mode == RaisingSet::even_only ? "even-only" : "even-and-odd"},
              {"vectors", vecs}};
}

Json profile_to_json(const std::map<IntWeight, int>& profile) {
  Json out = Json::array();
  for (const auto& [w, d] : profile) out.push_back(Json{{"weight", w}, {"degree", d}});
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kacrep
