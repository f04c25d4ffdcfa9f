#include <kacrep/cli.hpp>
#include <kacrep/errors.hpp>
#include <kacrep/evenrep.hpp>
#include <kacrep/heisenberg.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/matryoshka.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

namespace kacrep::cli {

namespace {

const std::vector<std::string> kActions = {"build",  "verify",     "typicality", "replicate",
                                           "twist", "heisenberg", "export"};

// Generic binding for symbolic reruns and singular-vector controls.
const Rational kGenericB(5, 7);

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw PreconditionError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    const auto q = parse_rational(s);
    if (!is_integer(q)) throw PreconditionError("expected an integer, got '" + s + "'");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::optional<Rational> parse_binding(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  return parse_rational(text);
}

Rational rational_from_json(const Json& j, const std::string& key) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw PreconditionError("config field '" + key + "' must be an integer or a \"p/q\" string");
}

template <class T>
T typed(const Json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError("config field '" + key + "' has the wrong type");
  }
}

// ---- reporting

void print_report(const VerificationReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (c.passed) {
      out << "[ok]   " << c.name << "\n";
    } else {
      ++failed;
      out << "[FAIL] " << c.name;
      if (!c.location.empty()) out << " at " << c.location;
      if (!c.residual.empty()) out << ": " << c.residual;
      out << "\n";
    }
  }
  if (failed == 0) {
    out << "verdict: pass (" << report.checks.size() << " checks)\n";
  } else {
    out << "verdict: FAIL (" << failed << " of " << report.checks.size() << " checks failed)\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw PreconditionError("write to '" + path + "' failed");
}

Bindings bindings_of(const JobConfig& cfg) {
  Bindings b;
  if (cfg.b) b.emplace("b", *cfg.b);
  if (cfg.c) b.emplace("c", *cfg.c);
  return b;
}

std::string bindings_text(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
  return s;
}

// ---- shared checks

VerificationReport kac_checks(const KacModule& K) {
  VerificationReport r;
  const auto& alg = *K.algebra;
  r.append(check_super_relations(K.rep, alg.sc), "kac: ");
  r.append(check_degree_profile(K.rep), "kac: ");

  const mpz_class expected = mpz_class(1) << alg.datum.P;
  const bool dim_ok = mpz_class(static_cast<unsigned long>(K.dim())) == expected * K.even.dim();
  r.add("kac: dim = 2^P * dim L0", dim_ok, {},
        dim_ok ? "" : std::to_string(K.dim()) + " vs " + mpz_class(expected * K.even.dim()).get_str());
  r.add("kac: character = prod(1 + e^-beta) ch L0", character(K.rep) == expected_character(K));

  // Y acts by y0 - layer.
  const auto& Y = K.rep.matrix(kY);
  PolyMatrix want(K.dim(), K.dim(), Y.params());
  for (std::size_t i = 0; i < K.dim(); ++i) {
    want.set(i, i, (K.y0() - ParamPoly(K.y0().params(), Rational(K.rep.basis[i].layer()))).rebase(Y.params()));
  }
  const auto diff = Y - want;
  r.add("kac: Y = y0 - layer", diff.is_zero(), diff.is_zero() ? "" : describe_first_entry(diff));

  const auto D = odd_derivative(K);
  r.append(check_heisenberg_identity(K, D), "kac: ");
  return r;
}

VerificationReport nested_checks(const ReplicatedModule& R, const KacModule& K, int expected,
                                 const std::string& prefix) {
  VerificationReport r;
  r.append(check_super_relations(R.rep, K.algebra->sc), prefix);
  r.append(check_block_structure(R, K), prefix);
  r.append(check_degree_profile(R.rep), prefix);
  const auto profile = jordan_minpoly_profile(R);
  std::string bad;
  for (const auto& [w, d] : profile) {
    if (d != expected && bad.empty()) {
      bad = "weight (" + Json(w).dump() + ") has degree " + std::to_string(d);
    }
  }
  r.add(prefix + "minimal polynomial of " + R.probe.name() + " has degree " + std::to_string(expected) +
            " on all " + std::to_string(profile.size()) + " weight spaces",
        bad.empty(), bad);
  return r;
}

void bound_relations(const Representation& rep, const StructureConstants& sc, const Bindings& b,
                     VerificationReport& r) {
  if (b.empty()) return;
  r.append(check_super_relations(substitute(rep, b), sc), "at " + bindings_text(b) + ": ");
}

// ---- config helpers

std::vector<int> labels_of(const JobConfig& cfg, const RootDatum& datum) {
  if (!cfg.labels.empty()) return cfg.labels;
  return std::vector<int>(static_cast<std::size_t>(datum.rank), 0);
}

ReplicationSpec replication_of(const JobConfig& cfg) {
  ReplicationSpec s;
  s.N = cfg.N.value_or(2);
  s.lambdas = cfg.lambdas;
  if (s.lambdas.empty() && s.N > 1) s.lambdas.assign(static_cast<std::size_t>(s.N - 1), Rational(1));
  s.validate();
  return s;
}

TwistSpec twist_of(const JobConfig& cfg) {
  TwistSpec s;
  s.n = cfg.n_twist.value_or(2);
  const std::size_t want = cfg.spec.flavor == Flavor::gl ? 2 : 1;
  if (!cfg.nu.empty()) {
    if (cfg.nu.size() != want) {
      throw PreconditionError("nu on " + cfg.spec.name() + " needs " + std::to_string(want) +
                              " components (y" + (want == 2 ? ", z0" : "") + "), got " +
                              std::to_string(cfg.nu.size()));
    }
    s.nu_y = cfg.nu[0];
    s.nu_c = want == 2 ? cfg.nu[1] : Rational(0);
  }
  s.validate(cfg.spec);
  return s;
}

Json replicated_json(const ReplicatedModule& R, const Bindings& b) {
  Json sd = Json::array();
  for (const auto& q : R.superdiagonal) sd.push_back(to_string(q));
  return Json{{"module", to_json(b.empty() ? R.rep : substitute(R.rep, b))},
              {"blocks", R.blocks},
              {"base_dim", R.base_dim},
              {"superdiagonal", sd},
              {"probe", R.probe.name()},
              {"jordan_profile", profile_to_json(jordan_minpoly_profile(R))}};
}

Json even_json(const EvenModule& L) {
  return Json{{"labels", L.labels}, {"y0", to_json(L.y0)}, {"c", to_json(L.c)}, {"module", to_json(L.rep)}};
}

// ---- actions

struct Outcome {
  VerificationReport report;
  Json artifact;
};

Outcome do_build(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto b = bindings_of(cfg);
  out << alg->spec.name() << " Kac module, labels " << Json(K.labels()).dump() << ", dim " << K.dim()
      << ", y0 = " << K.y0().str() << "\n";
  const mpz_class expected = (mpz_class(1) << alg->datum.P) * K.even.dim();
  o.report.add("dim = 2^P * dim L0", mpz_class(static_cast<unsigned long>(K.dim())) == expected);
  o.report.append(check_degree_profile(K.rep));
  o.artifact = Json{{"module", to_json(b.empty() ? K.rep : substitute(K.rep, b))},
                    {"y0", to_json(K.y0())},
                    {"even_dim", K.even.dim()}};
  return o;
}

Outcome do_verify(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto b = bindings_of(cfg);
  out << alg->spec.name() << " Kac module, dim " << K.dim() << "\n";
  o.report.append(kac_checks(K));
  bound_relations(K.rep, alg->sc, b, o.report);
  if (cfg.N && *cfg.N > 1) {
    const auto spec = replication_of(cfg);
    const auto R = replicate(K, odd_derivative(K), spec);
    out << "replication N = " << spec.N << ", dim " << R.rep.dim << "\n";
    o.report.append(nested_checks(R, K, spec.N, "replicate: "));
    bound_relations(R.rep, alg->sc, b, o.report);
    o.artifact["replication"] = Json{{"N", spec.N}, {"jordan_profile", profile_to_json(jordan_minpoly_profile(R))}};
  }
  if (!cfg.nu.empty() || cfg.n_twist) {
    const auto spec = twist_of(cfg);
    const auto T = twist(K, spec);
    out << "twist n = " << spec.n << ", dim " << T.rep.dim << "\n";
    o.report.append(nested_checks(T, K, spec.n, "twist: "));
    bound_relations(T.rep, alg->sc, b, o.report);
  }
  o.artifact["report"] = to_json(o.report);
  return o;
}

Outcome do_typicality(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto t = kac_typicality(K);
  out << "s(b) = " << t.s.str() << "\n";
  out << "prod <Lambda+rho|beta_i> = " << t.factor_product.str() << "\n";
  if (t.constant) out << "s / prod = " << to_string(*t.constant) << "\n";
  o.report.add("rational roots of s(b) match the typicality factors", t.roots_match);
  o.report.add("s(b) is a constant multiple of the factor product", t.constant.has_value());

  std::vector<Rational> points;
  if (cfg.b) {
    points.push_back(*cfg.b);
  } else {
    points = t.factor_roots;
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  Json svs = Json::array();
  for (const auto& bv : points) {
    const auto cls = classify(t, bv);
    const auto sv = singular_vectors(K, bv, RaisingSet::even_and_odd);
    const IntWeight top(alg->datum.dim(), 0);
    const auto below = std::count_if(sv.vectors.begin(), sv.vectors.end(),
                                     [&](const SingularVector& v) { return v.weight != top; });
    out << "b = " << to_string(bv) << ": " << (cls.typical ? "typical" : "atypical");
    if (!cls.typical) out << " of type " << Json(cls.atypical_types).dump();
    out << ", " << below << " singular vector(s) below the top\n";
    if (cls.typical) {
      o.report.add("b = " + to_string(bv) + ": no singular vector below the top", below == 0);
    } else {
      o.report.add("b = " + to_string(bv) + ": singular vector below the top", below > 0);
    }
    Json entry = to_json(sv);
    entry["typical"] = cls.typical;
    entry["atypical_types"] = cls.atypical_types;
    svs.push_back(entry);
  }
  if (!cfg.b) {
    const bool generic_typical = classify(t, kGenericB).typical;
    const auto sv = singular_vectors(K, kGenericB, RaisingSet::even_and_odd);
    const IntWeight top(alg->datum.dim(), 0);
    const bool only_top = std::all_of(sv.vectors.begin(), sv.vectors.end(),
                                      [&](const SingularVector& v) { return v.weight == top; });
    o.report.add("generic b = " + to_string(kGenericB) + ": only the top is singular",
                 generic_typical && only_top && !sv.vectors.empty());
  }
  o.artifact = Json{{"typicality", to_json(t)}, {"singular_vectors", svs}};
  return o;
}

Outcome do_replicate(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto spec = replication_of(cfg);
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto D = odd_derivative(K);
  const auto R = replicate(K, D, spec);
  const auto b = bindings_of(cfg);
  out << alg->spec.name() << " replication N = " << spec.N << ", dim " << R.rep.dim << "\n";
  o.report.append(check_heisenberg_identity(K, D), "base: ");
  o.report.append(nested_checks(R, K, spec.N, ""));
  for (const auto& lambda : spec.lambdas) {
    o.report.append(rescale_conjugation_check(K, D, lambda), "lambda = " + to_string(lambda) + ": ");
  }
  bound_relations(R.rep, alg->sc, b, o.report);
  if (spec.N == 2) {
    Json mu = Json::object();
    for (const auto& [label, p] : upsilon_extract(R)) mu[label.name()] = to_json(p);
    o.artifact["upsilon"] = mu;
  }
  o.artifact.update(replicated_json(R, b));
  return o;
}

Outcome do_twist(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto spec = twist_of(cfg);
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto T = twist(K, spec);
  const auto b = bindings_of(cfg);
  out << alg->spec.name() << " twist n = " << spec.n << ", nu = (" << to_string(spec.nu_y) << ", "
      << to_string(spec.nu_c) << "), dim " << T.rep.dim << "\n";
  o.report.append(nested_checks(T, K, spec.n, ""));
  bound_relations(T.rep, alg->sc, b, o.report);
  if (spec.n == 2) {
    Json mu = Json::object();
    for (const auto& [label, p] : upsilon_extract(T)) mu[label.name()] = to_json(p);
    o.artifact["upsilon"] = mu;
  }
  o.artifact.update(replicated_json(T, b));
  o.artifact["nu"] = Json{{"y", to_string(spec.nu_y)}, {"z0", to_string(spec.nu_c)}};
  return o;
}

Outcome do_heisenberg(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto spec = twist_of(cfg);
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto H = build_heisenberg(*alg);
  const auto rho_t = rho_family(K, spec);
  const auto phi = phi_map(rho_t, H);
  out << alg->spec.name() << " Heisenberg superalgebra, dim " << H.size() << "; module dim " << phi.dim << "\n";
  o.report.append(check_rho_family(rho_t, K, spec), "rho_t: ");
  o.report.append(check_mixed_identity(rho_t, alg->sc), "mixed: ");
  o.report.append(check_phi_representation(phi, H), "phi: ");
  o.report.append(compare_with_KH(phi, K, spec, H, rho_t), "K_H: ");
  const auto b = bindings_of(cfg);
  bound_relations(phi, H, b, o.report);
  o.artifact = Json{{"H", to_json(H)}, {"phi", to_json(b.empty() ? phi : substitute(phi, b))}};
  return o;
}

Outcome do_export(const JobConfig& cfg, const std::shared_ptr<const Algebra>& alg, std::ostream& out) {
  Outcome o;
  const auto K = build_kac_module(alg, labels_of(cfg, alg->datum));
  const auto b = bindings_of(cfg);
  out << "exporting " << alg->spec.name() << " root datum, structure constants, fundamental, even and Kac modules\n";
  o.report.append(check_super_relations(fundamental_representation(*alg), alg->sc), "fundamental: ");
  o.artifact = Json{{"root_datum", to_json(alg->datum)},
                    {"structure_constants", to_json(alg->sc)},
                    {"fundamental", to_json(fundamental_representation(*alg))},
                    {"even_module", even_json(K.even)},
                    {"kac_module", to_json(b.empty() ? K.rep : substitute(K.rep, b))},
                    {"typicality", to_json(kac_typicality(K))}};
  return o;
}

}  // namespace

void apply_algebra_text(JobConfig& cfg, const std::string& text) {
  static const std::regex full(R"(\s*(gl|sl)\s*\(\s*(\d+)\s*[|/]\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, full)) {
    cfg.spec.flavor = parse_flavor(m[1].str());
    cfg.spec.m = std::stoi(m[2].str());
    cfg.spec.n = std::stoi(m[3].str());
    return;
  }
  cfg.spec.flavor = parse_flavor(text);
}

JobConfig JobConfig::from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  static const std::set<std::string> known = {"action", "algebra", "m",      "n",       "labels", "b",
                                              "c",      "N",       "lambdas", "nu",     "n_twist",
                                              "out",    "report"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw PreconditionError("unknown config field '" + key + "'");
  }
  JobConfig cfg;
  if (j.contains("action")) cfg.action = typed<std::string>(j["action"], "action");
  if (j.contains("algebra")) apply_algebra_text(cfg, typed<std::string>(j["algebra"], "algebra"));
  if (j.contains("m")) cfg.spec.m = typed<int>(j["m"], "m");
  if (j.contains("n")) cfg.spec.n = typed<int>(j["n"], "n");
  if (j.contains("labels")) cfg.labels = typed<std::vector<int>>(j["labels"], "labels");
  for (const char* key : {"b", "c"}) {
    if (!j.contains(key)) continue;
    const auto& v = j[key];
    std::optional<Rational> value;
    if (!(v.is_string() && v.get<std::string>() == "symbolic")) value = rational_from_json(v, key);
    (std::string(key) == "b" ? cfg.b : cfg.c) = value;
  }
  if (j.contains("N")) cfg.N = typed<int>(j["N"], "N");
  if (j.contains("n_twist")) cfg.n_twist = typed<int>(j["n_twist"], "n_twist");
  for (const char* key : {"lambdas", "nu"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw PreconditionError(std::string("config field '") + key + "' must be an array");
    auto& dst = std::string(key) == "nu" ? cfg.nu : cfg.lambdas;
    for (const auto& v : j[key]) dst.push_back(rational_from_json(v, key));
  }
  if (j.contains("out")) cfg.out = typed<std::string>(j["out"], "out");
  if (j.contains("report")) cfg.report = typed<std::string>(j["report"], "report");
  return cfg;
}

Json JobConfig::to_json() const {
  auto binding = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("symbolic"); };
  Json j{{"action", action},
         {"algebra", spec.name()},
         {"labels", labels},
         {"b", binding(b)}};
  if (spec.flavor == Flavor::gl) j["c"] = binding(c);
  if (N) j["N"] = *N;
  if (n_twist) j["n_twist"] = *n_twist;
  if (!lambdas.empty()) j["lambdas"] = rational_list_json(lambdas);
  if (!nu.empty()) j["nu"] = rational_list_json(nu);
  return j;
}

int execute(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (std::find(kActions.begin(), kActions.end(), cfg.action) == kActions.end()) {
      throw PreconditionError("unknown action '" + cfg.action +
                              "' (expected build, verify, typicality, replicate, twist, heisenberg or export)");
    }
    cfg.spec.validate();
    if (cfg.c && cfg.spec.flavor != Flavor::gl) {
      throw PreconditionError("c binds the z0 eigenvalue, which " + cfg.spec.name() + " does not have");
    }
    const auto alg = make_algebra(cfg.spec);

    Outcome o;
    if (cfg.action == "build") o = do_build(cfg, alg, out);
    else if (cfg.action == "verify") o = do_verify(cfg, alg, out);
    else if (cfg.action == "typicality") o = do_typicality(cfg, alg, out);
    else if (cfg.action == "replicate") o = do_replicate(cfg, alg, out);
    else if (cfg.action == "twist") o = do_twist(cfg, alg, out);
    else if (cfg.action == "heisenberg") o = do_heisenberg(cfg, alg, out);
    else o = do_export(cfg, alg, out);

    print_report(o.report, out);
    o.artifact["config"] = cfg.to_json();
    if (!cfg.out.empty()) write_file(cfg.out, dump(o.artifact));
    if (!cfg.report.empty()) write_file(cfg.report, dump(to_json(o.report)));
    return o.report.passed() ? kExitOk : kExitVerification;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructuralError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerification;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kac modules, matryoshka replications and twists for gl(m|n) and sl(m|n)", "kacrep"};
  std::string action, algebra, labels, b, c, lambdas, nu, config;
  std::optional<int> m, n, N, n_twist;
  std::string out_path, report_path;
  app.add_option("action", action, "build | verify | typicality | replicate | twist | heisenberg | export");
  app.add_option("--config", config, "JSON job config; flags given on the command line override it");
  app.add_option("--algebra", algebra, "gl, sl, or a full name such as sl(2|1)");
  app.add_option("--m", m, "even block size");
  app.add_option("--n", n, "odd block size");
  app.add_option("--labels", labels, "even Dynkin labels, comma separated");
  app.add_option("--b", b, "odd label: symbolic or a rational p/q");
  app.add_option("--c", c, "z0 eigenvalue (gl only): symbolic or a rational");
  app.add_option("--N", N, "replication depth");
  app.add_option("--lambdas", lambdas, "N-1 nonzero rationals, comma separated");
  app.add_option("--nu", nu, "twist functional on (y[, z0]), comma separated");
  app.add_option("--n-twist", n_twist, "length of the twist J_n");
  app.add_option("--out", out_path, "artifact JSON path");
  app.add_option("--report", report_path, "verification report JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  JobConfig cfg;
  try {
    if (!config.empty()) {
      std::ifstream f(config);
      if (!f) throw PreconditionError("cannot read config '" + config + "'");
      Json j;
      try {
        j = Json::parse(f);
      } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError("config '" + config + "' is not valid JSON: " + e.what());
      }
      cfg = JobConfig::from_json(j);
    }
    if (!action.empty()) cfg.action = action;
    if (!algebra.empty()) apply_algebra_text(cfg, algebra);
    if (m) cfg.spec.m = *m;
    if (n) cfg.spec.n = *n;
    if (!labels.empty()) cfg.labels = parse_int_list(labels);
    if (!b.empty()) cfg.b = parse_binding(b);
    if (!c.empty()) cfg.c = parse_binding(c);
    if (N) cfg.N = N;
    if (!lambdas.empty()) cfg.lambdas = parse_rational_list(lambdas);
    if (!nu.empty()) cfg.nu = parse_rational_list(nu);
    if (n_twist) cfg.n_twist = n_twist;
    if (!out_path.empty()) cfg.out = out_path;
    if (!report_path.empty()) cfg.report = report_path;
    if (cfg.action.empty()) throw PreconditionError("no action given");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return execute(cfg, out, err);
}

}  // namespace kacrep::cli
