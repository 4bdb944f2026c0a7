#include "genmult/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "genmult/error.hpp"
#include "genmult/fixtures.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/multiplicity.hpp"
#include "genmult/oracle.hpp"
#include "genmult/polyhedra.hpp"

namespace genmult {

namespace {

using Json = nlohmann::ordered_json;

// Largest n for which the epsilon oracle scans lattice points.
constexpr std::size_t kEpsilonOracleMaxVars = 4;

struct Input {
  InputKind kind = InputKind::Hypergraph;
  std::optional<Hypergraph> graph;
  std::optional<MonomialIdeal> ideal;
  std::vector<std::string> notices;
};

bool looks_like_ideal(std::string_view doc) {
  const auto first = doc.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || doc[first] != '{') return false;
  const Json j = Json::parse(doc, nullptr, false);
  return j.is_object() && j.contains("vars");
}

MonomialIdeal parse_ideal(std::string_view doc) {
  const Json j = Json::parse(doc, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InputError("ideal document is not a JSON object");
  if (!j.contains("vars") || !j["vars"].is_number_unsigned() || j["vars"].get<std::size_t>() == 0)
    throw InputError("ideal document needs a positive integer \"vars\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("ideal document needs a \"generators\" array");
  const auto n = j["vars"].get<std::size_t>();
  std::vector<IntVector> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array() || row.size() != n)
      throw InputError("every generator must be an array of " + std::to_string(n) + " exponents");
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_unsigned()) throw InputError("exponents must be non-negative integers");
      v.emplace_back(x.get<unsigned long>());
    }
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

Input load(const RunConfig& cfg) {
  if (!cfg.document) throw InputError("command '" + cfg.command + "' needs an input document");
  const std::string& doc = *cfg.document;
  Input in;
  in.kind = cfg.kind;
  if (in.kind == InputKind::Auto) in.kind = looks_like_ideal(doc) ? InputKind::Ideal : InputKind::Hypergraph;
  if (in.kind == InputKind::Ideal) {
    in.ideal.emplace(parse_ideal(doc));
    if (in.ideal->dropped() > 0)
      in.notices.push_back("dropped " + std::to_string(in.ideal->dropped()) + " non-minimal generator(s)");
  } else {
    in.graph.emplace(parse_hypergraph(doc));
    const EdgeIdeal e = edge_ideal(*in.graph);
    if (e.reduced) in.notices.push_back("some edge monomials are not minimal generators");
    in.ideal.emplace(e.ideal);
  }
  return in;
}

Json vector_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json labels_json(const Hypergraph& g, const NodeSet& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(g.label(v));
  return out;
}

Json sets_json(const Hypergraph& g, const std::vector<NodeSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(labels_json(g, s));
  return out;
}

template <class T>
Json maybe_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
    return to_string(*v);
  else
    return *v;
}

Json facets_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& f : compact_facet_terms(ideal)) {
    Json verts = Json::array();
    for (const auto& v : f.vertices) verts.push_back(vector_json(v));
    out.push_back({{"normal", vector_json(f.normal)},
                   {"lattice_distance", to_string(f.lattice_distance)},
                   {"relative_volume", to_string(f.relative_volume)},
                   {"contribution", to_string(f.contribution())},
                   {"vertices", std::move(verts)}});
  }
  return out;
}

Json oracle_j(const MonomialIdeal& ideal, const Integer& j) {
  const Rational e = ehrhart_j(ideal);
  if (e != Rational(j))
    throw CrossCheckError("oracle j", "Ehrhart volume " + to_string(e) + ", triangulation " + to_string(j));
  return {{"ehrhart_j", to_string(e)}, {"agree", true}};
}

Json oracle_epsilon(const MonomialIdeal& ideal, const Rational& eps) {
  Json out;
  const Rational box = epsilon_monomial(ideal, EpsilonRegion::Box);
  if (box != eps)
    throw CrossCheckError("oracle epsilon", "box region " + to_string(box) + ", simplex region " + to_string(eps));
  out["box_region"] = to_string(box);
  const std::size_t n = ideal.nvars();
  if (n > kEpsilonOracleMaxVars) {
    out["ehrhart"] = nullptr;
    out["ehrhart_reason"] = "lattice scan skipped for more than " + std::to_string(kEpsilonOracleMaxVars) + " variables";
  } else {
    // P-hat minus P sits inside prod_i [0, max_i], a much smaller scan than
    // the regions used above.
    std::vector<Inequality> cap;
    for (std::size_t i = 0; i < n; ++i) {
      Integer mx = 1;
      for (const auto& g : ideal.generators()) mx = std::max(mx, g[i]);
      IntVector normal(n, Integer(0));
      normal[i] = -1;
      cap.push_back({normal, Rational(-mx)});
    }
    const Polyhedron p = newton_polyhedron(ideal);
    const Rational hat = ehrhart_volume_dilated(intersect(epsilon_hull(p), cap));
    const Rational base = ehrhart_volume_dilated(intersect(p, cap));
    if (hat - base != eps)
      throw CrossCheckError("oracle epsilon", "Ehrhart volume " + to_string(hat - base) + ", triangulation " +
                                                  to_string(eps));
    out["ehrhart"] = to_string(hat - base);
  }
  out["agree"] = true;
  return out;
}

Json profile_json(const Hypergraph& g, const CombinatorialProfile& pr) {
  Json out;
  out["n"] = pr.n;
  out["e"] = pr.e;
  out["m"] = maybe_json(pr.m);
  out["components"] = sets_json(g, pr.components);
  out["c"] = pr.c;
  out["c0"] = maybe_json(pr.c0);
  out["pivot_classes"] = sets_json(g, pr.pivot_classes);
  out["p"] = pr.p;
  Json pc = Json::array();
  for (bool b : pr.properly_connected) pc.push_back(b);
  out["properly_connected"] = std::move(pc);
  out["free_nodes"] = labels_json(g, pr.free_nodes);
  out["isolated_nodes"] = labels_json(g, pr.isolated_nodes);
  if (pr.tulgeity_requested) {
    out["tulgeity_odd"] = maybe_json(pr.tulgeity_odd);
    if (!pr.tulgeity_odd) out["tulgeity_reason"] = "more nodes than the tulgeity cap";
  }
  out["pivot_hypotheses"] = pr.pivot_hypotheses;
  if (!pr.pivot_hypotheses) out["pivot_hypotheses_reason"] = pr.pivot_hypotheses_reason;
  return out;
}

Json report_json(const Hypergraph& g, const MultiplicityReport& r) {
  Json out;
  out["j"] = to_string(r.j);
  out["epsilon"] = maybe_json(r.epsilon);
  out["analytic_spread"] = r.analytic_spread;
  out["toric_height"] = maybe_json(r.toric_height.value);
  if (!r.toric_height.value) out["toric_height_reason"] = r.toric_height.reason;
  out["edge_subring_multiplicity"] = maybe_json(r.edge_subring_multiplicity.value);
  if (!r.edge_subring_multiplicity.value) out["edge_subring_multiplicity_reason"] = r.edge_subring_multiplicity.reason;
  out["bounds"] = {{"lower", maybe_json(r.bounds.lower)},
                   {"upper", maybe_json(r.bounds.upper)},
                   {"sources", r.bounds.sources}};
  out["families"] = r.families;
  Json checks = Json::array();
  for (const auto& c : r.cross_checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  out["cross_checks"] = std::move(checks);
  out["notes"] = r.notes;
  out["profile"] = profile_json(g, r.profile);
  return out;
}

Json fixtures_json(const std::vector<FixtureResult>& rows) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : rows) {
    passed += r.pass;
    list.push_back({{"topic", r.topic},
                    {"name", r.name},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"pass", r.pass}});
  }
  return {{"command", "fixtures"}, {"passed", passed}, {"failed", rows.size() - passed}, {"fixtures", list}};
}

// Text rendering of a JSON result: one "key: value" line per scalar field,
// nested objects indented, arrays of scalars joined on one line.
std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ", ") + k + ": " + scalar_text(x);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

void render_text(const Json& doc, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : doc.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : v) out << pad << "  - " << scalar_text(item) << "\n";
    } else {
      out << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

void render_fixtures_text(const std::vector<FixtureResult>& rows, std::ostream& out) {
  std::size_t passed = 0, width = 0;
  for (const auto& r : rows) width = std::max(width, r.topic.size());
  for (const auto& r : rows) {
    passed += r.pass;
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.topic << "  "
        << r.name << ": expected " << r.expected << ", computed " << r.computed << "\n";
  }
  out << passed << "/" << rows.size() << " fixtures passed\n";
}

Json dispatch(const RunConfig& cfg) {
  const Input in = load(cfg);
  const MonomialIdeal& ideal = *in.ideal;
  const bool graph = in.graph.has_value();
  Json doc;
  doc["command"] = cfg.command;
  doc["kind"] = graph ? "hypergraph" : "ideal";
  doc["vars"] = ideal.nvars();
  if (!in.notices.empty()) doc["notices"] = in.notices;

  if (cfg.command == "j") {
    const Integer j = graph ? j_edge(*in.graph) : j_monomial(ideal);
    doc["j"] = to_string(j);
    if (cfg.oracle) doc["oracle"] = oracle_j(ideal, j);
  } else if (cfg.command == "epsilon") {
    const Rational e = epsilon_monomial(ideal);
    doc["epsilon"] = to_string(e);
    if (cfg.oracle) doc["oracle"] = oracle_epsilon(ideal, e);
  } else if (cfg.command == "spread") {
    doc["analytic_spread"] = graph ? analytic_spread_edge(*in.graph) : analytic_spread(ideal);
  } else if (cfg.command == "profile") {
    if (!graph) throw InputError("profile needs a hypergraph");
    doc["profile"] = profile_json(*in.graph, profile(*in.graph, true, cfg.tulgeity_cap));
  } else if (cfg.command == "report") {
    if (graph) {
      ReportOptions opts;
      opts.tulgeity_cap = cfg.tulgeity_cap;
      const auto r = report(*in.graph, opts);
      const Json body = report_json(*in.graph, r);
      for (const auto& [k, v] : body.items()) doc[k] = v;
      if (cfg.oracle) {
        doc["oracle"] = {{"j", oracle_j(ideal, r.j)}};
        if (r.epsilon) doc["oracle"]["epsilon"] = oracle_epsilon(ideal, *r.epsilon);
      }
    } else {
      const Integer j = j_monomial(ideal);
      const Rational e = epsilon_monomial(ideal);
      const std::size_t l = analytic_spread(ideal);
      // Both multiplicities vanish exactly when the spread drops below n.
      if ((j == 0) != (l < ideal.nvars()) || (e == 0) != (l < ideal.nvars()))
        throw CrossCheckError("vanishing vs spread", "j = " + to_string(j) + ", epsilon = " + to_string(e) +
                                                         ", spread = " + std::to_string(l));
      if (e > Rational(j))
        throw CrossCheckError("epsilon <= j", to_string(e) + " > " + to_string(j));
      doc["j"] = to_string(j);
      doc["epsilon"] = to_string(e);
      doc["analytic_spread"] = l;
      if (cfg.oracle) doc["oracle"] = {{"j", oracle_j(ideal, j)}, {"epsilon", oracle_epsilon(ideal, e)}};
    }
  } else {
    throw InputError("unknown command '" + cfg.command + "'");
  }
  if (cfg.explain) doc["compact_facets"] = facets_json(ideal);
  return doc;
}

void emit_error(const RunConfig& cfg, std::ostream& err, const std::string& kind, const std::string& check,
                const std::string& message) {
  if (cfg.format == OutputFormat::Json) {
    Json e{{"error", {{"kind", kind}, {"message", message}}}};
    if (!check.empty()) e["error"]["check"] = check;
    err << e.dump(2) << "\n";
  } else {
    err << "error (" << kind << (check.empty() ? "" : ", check '" + check + "'") << "): " << message << "\n";
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "fixtures") {
      const auto rows = run_fixtures();
      if (cfg.format == OutputFormat::Json)
        out << fixtures_json(rows).dump(2) << "\n";
      else
        render_fixtures_text(rows, out);
      const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
      return all ? kExitOk : kExitCrossCheck;
    }
    const Json doc = dispatch(cfg);
    if (cfg.format == OutputFormat::Json)
      out << doc.dump(2) << "\n";
    else
      render_text(doc, out);
    return kExitOk;
  } catch (const CrossCheckError& e) {
    emit_error(cfg, err, "cross-check", e.check(), e.what());
    return kExitCrossCheck;
  } catch (const InputError& e) {
    emit_error(cfg, err, "input", "", e.what());
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    emit_error(cfg, err, "input", "", e.what());
    return kExitInput;
  }
}

}  // namespace genmult
