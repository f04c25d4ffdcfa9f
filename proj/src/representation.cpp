#include <kacrep/errors.hpp>
#include <kacrep/representation.hpp>

#include <algorithm>

namespace kacrep {

const PolyMatrix& Representation::matrix(const GeneratorLabel& label) const {
  const auto it = matrices.find(label);
  if (it == matrices.end()) {
    throw PreconditionError("representation has no matrix for " + label.name());
  }
  return it->second;
}

std::map<IntWeight, std::vector<std::size_t>> Representation::weight_spaces() const {
  std::map<IntWeight, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out[basis[i].weight].push_back(i);
  return out;
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.kind != b.kind || a.dim != b.dim || !same_params(a.params, b.params) ||
      a.basis != b.basis || a.matrices.size() != b.matrices.size()) {
    return false;
  }
  for (const auto& [label, m] : a.matrices) {
    const auto it = b.matrices.find(label);
    if (it == b.matrices.end() || !(it->second == m)) return false;
  }
  return true;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool ok, std::string location,
                             std::string residual) {
  checks.push_back({std::move(name), ok, std::move(location), std::move(residual)});
}

void VerificationReport::append(const VerificationReport& other, std::string_view prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = std::string(prefix) + c.name;
    checks.push_back(std::move(c));
  }
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

PolyMatrix expand(const StructureConstants& sc, const SparseVector& v,
                  const std::map<GeneratorLabel, PolyMatrix>& matrices, std::size_t dim,
                  const ParamNames& params) {
  PolyMatrix out(dim, dim, params);
  for (const auto& [c, coeff] : v) {
    const auto it = matrices.find(sc.basis[c]);
    if (it == matrices.end()) {
      throw PreconditionError("no matrix for " + sc.basis[c].name() + " in the expansion");
    }
    out += it->second * coeff;
  }
  return out;
}

PolyMatrix label_bracket(const Representation& rep, const GeneratorLabel& a,
                         const GeneratorLabel& b) {
  return super_bracket(rep.matrix(a), a.odd(), rep.matrix(b), b.odd());
}

std::string describe_first_entry(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) {
      const auto& [c, p] = *m.row(r).begin();
      return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + p.str();
    }
  }
  return "zero";
}

VerificationReport check_super_relations(const Representation& rep, const StructureConstants& sc,
                                         const std::optional<std::vector<GeneratorLabel>>& only) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < sc.size(); ++a) {
    if (only && std::find(only->begin(), only->end(), sc.basis[a]) == only->end()) continue;
    const auto& m = rep.matrix(sc.basis[a]);
    if (m.rows() != rep.dim || m.cols() != rep.dim) {
      throw PreconditionError("matrix of " + sc.basis[a].name() + " is " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(rep.dim) + "x" +
                              std::to_string(rep.dim));
    }
    idx.push_back(a);
  }
  std::string binding;
  if (rep.params && !rep.params->empty()) {
    for (const auto& p : *rep.params) binding += (binding.empty() ? "" : ",") + p;
    binding = "; symbolic " + binding;
  }
  VerificationReport report;
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) {
      const auto a = idx[i];
      const auto b = idx[j];
      ++pairs;
      auto lhs = label_bracket(rep, sc.basis[a], sc.basis[b]);
      lhs -= expand(sc, sc.bracket(a, b), rep.matrices, rep.dim, rep.params);
      if (!lhs.is_zero()) {
        ++bad;
        const auto where = describe_first_entry(lhs);
        const auto eq = where.find(" = ");
        report.add("super_relation", false,
                   "[" + sc.basis[a].name() + "," + sc.basis[b].name() + "] " +
                       where.substr(0, eq) + binding,
                   where.substr(eq + 3));
      }
    }
  }
  if (bad == 0) report.add("super_relations (" + std::to_string(pairs) + " pairs)", true);
  return report;
}

Representation fundamental_representation(const Algebra& alg) {
  Representation rep;
  rep.kind = "fundamental";
  rep.params = alg.params;
  rep.dim = alg.datum.dim();
  for (const auto& [label, m] : alg.fundamental.matrices) rep.matrices.emplace(label, m.rebase(alg.params));
  for (std::size_t c = 0; c < rep.dim; ++c) {
    BasisVectorInfo info;
    info.even_index = c;
    info.weight.assign(rep.dim, 0);
    info.weight[c] = 1;
    rep.basis.push_back(std::move(info));
  }
  return rep;
}

}  // namespace kacrep
