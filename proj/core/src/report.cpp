#include "grassmann/report.hpp"

#include <sstream>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

Json bounds_to_json(const Bounds& b) {
  if (b.exact()) return Json(b.lower);
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

Json fraction_to_json(const Fraction& f) {
  return Json{{"numerator", f.num.str()},
              {"denominator", f.den.str()},
              {"integer", f.is_integer()},
              {"text", f.str()}};
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"text", p.to_string("q")}, {"degree", p.degree()}, {"coefficients", coeffs}};
}

Json exponents_to_json(const CycloFactorization& f) {
  Json out = Json::object();
  for (auto [t, e] : f.exponents) out[std::to_string(t)] = e;
  return out;
}

Json matrix_rows(const Subspace& s) {
  Json rows = Json::array();
  for (auto& r : s.digit_rows()) rows.push_back(r);
  return rows;
}

Elem digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<Elem>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Elem>(c - 'a' + 10);
  throw_invalid(std::string("bad matrix digit '") + c + "'");
}

}  // namespace

std::string render_matrix(const Subspace& s) {
  std::string out;
  for (const auto& row : s.digit_rows()) {
    if (!out.empty()) out.push_back('/');
    out += row;
  }
  return out;
}

Json params_to_json(const FieldSpec& field, int n, int m) {
  Json modulus = Json::array();
  for (auto c : field.modulus) modulus.push_back(c);
  return Json{{"q", field.q},
              {"n", n},
              {"m", m},
              {"field", Json{{"p", field.p}, {"e", field.e}, {"modulus", modulus}}}};
}

Json graph_to_json(const GrassmannGraph& g) {
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.size(); ++v) {
    vertices.push_back(Json{{"id", v}, {"matrix", matrix_rows(g.vertex(v))}});
  }
  Json edges = Json::array();
  for (VertexId a = 0; a < g.size(); ++a) {
    const VertexSet& nb = g.neighbours(a);
    for (VertexId b = nb.next(a + 1); b < g.size(); b = nb.next(b + 1)) edges.push_back(Json::array({a, b}));
  }
  Json params = params_to_json(g.field()->spec(), g.n(), g.m());
  params["vertex_count"] = g.size();
  params["edge_count"] = g.edge_count();
  return Json{{"params", params}, {"vertices", vertices}, {"edges", edges}};
}

GrassmannGraph graph_from_json(const Json& doc) {
  try {
    const Json& params = doc.at("params");
    const int n = params.at("n").get<int>();
    const int m = params.at("m").get<int>();
    const Json& field_doc = params.at("field");
    FieldSpec spec = make_field(field_doc.at("p").get<std::uint64_t>(), field_doc.at("e").get<int>());
    if (field_doc.at("modulus").get<std::vector<std::uint32_t>>() != spec.modulus) {
      throw_invalid("field modulus differs from the canonical choice");
    }
    const FieldPtr field = make_field_ptr(spec);
    std::vector<Subspace> vertices;
    for (const Json& v : doc.at("vertices")) {
      const auto rows = v.at("matrix").get<std::vector<std::string>>();
      if (rows.empty()) throw_invalid("vertex without rows");
      std::vector<Elem> entries;
      for (const auto& r : rows) {
        if (r.size() != static_cast<std::size_t>(n)) throw_invalid("vertex row has the wrong length");
        for (char c : r) entries.push_back(digit_value(c));
      }
      vertices.push_back(canonicalize(FqMatrix(field, rows.size(), static_cast<std::size_t>(n), std::move(entries))));
    }
    Adjacency adjacency(vertices.size(), VertexSet(vertices.size()));
    for (const Json& e : doc.at("edges")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      if (a >= vertices.size() || b >= vertices.size()) throw_invalid("edge endpoint out of range");
      adjacency[a].set(b);
      adjacency[b].set(a);
    }
    return GrassmannGraph::from_parts(field, n, m, std::move(vertices), std::move(adjacency));
  } catch (const nlohmann::json::exception& e) {
    throw_invalid(std::string("malformed graph document: ") + e.what());
  }
}

std::string graph_to_dot(const GrassmannGraph& g) {
  std::ostringstream out;
  out << "graph J_" << g.q() << "_" << g.n() << "_" << g.m() << " {\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "  v" << v << " [tooltip=\"" << render_matrix(g.vertex(v)) << "\"];\n";
  }
  for (VertexId a = 0; a < g.size(); ++a) {
    const VertexSet& nb = g.neighbours(a);
    for (VertexId b = nb.next(a + 1); b < g.size(); b = nb.next(b + 1)) out << "  v" << a << " -- v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_text(const GrassmannGraph& g) {
  std::ostringstream out;
  out << "J_" << g.q() << "(" << g.n() << "," << g.m() << "): " << g.size() << " vertices, "
      << g.edge_count() << " edges\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    out << v << "\t" << render_matrix(g.vertex(v)) << "\t";
    bool first = true;
    for (VertexId u : g.neighbours(v).members()) {
      out << (first ? "" : " ") << u;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

Json census_to_json(const GrassmannGraph& g, const CliqueCensus& census) {
  Json list = Json::array();
  for (const auto& c : census.cliques) {
    Json entry{{"kind", c.kind ? to_string(*c.kind) : "unmatched"}, {"size", c.members.count()}};
    if (c.catalog_index) entry["catalog_index"] = *c.catalog_index;
    entry["members"] = c.members.members();
    list.push_back(std::move(entry));
  }
  return Json{{"count", census.cliques.size()},
              {"stars", census.stars},
              {"tops", census.tops},
              {"unmatched", census.unmatched},
              {"star_catalog", census.star_catalog_size},
              {"top_catalog", census.top_catalog_size},
              {"star_size", star_size(g.q(), g.n(), g.m())},
              {"top_size", top_size(g.q(), g.m())},
              {"every_clique_is_star_or_top", census.chow_holds()},
              {"cliques", list}};
}

Json lemmas_to_json(const LemmaReport& r) {
  Json examples = Json::array();
  for (const auto& c : r.counterexamples) {
    examples.push_back(Json{{"check", c.check}, {"centers", c.centers}, {"detail", c.detail}});
  }
  return Json{{"star_top_incidence", r.star_top_incidence},
              {"distinct_overlap", r.distinct_overlap},
              {"star_meet", r.star_meet},
              {"top_meet", r.top_meet},
              {"q_plus_one", r.q_plus_one},
              {"incident_pairs", r.incident_pairs},
              {"star_top_pairs", r.star_top_pairs},
              {"star_pairs", r.star_pairs},
              {"top_pairs", r.top_pairs},
              {"counterexamples", examples},
              {"pass", r.all_pass()}};
}

Json dual_to_json(const DualReport& r) {
  return Json{{"bijective", r.bijective},
              {"involution", r.involution},
              {"preserves_adjacency", r.preserves_adjacency},
              {"reflects_adjacency", r.reflects_adjacency},
              {"stars_to_tops", r.stars_to_tops},
              {"tops_to_stars", r.tops_to_stars},
              {"pass", r.all_pass()}};
}

Json coreness_to_json(const CorenessReport& r) {
  Json out{{"verdict", to_string(r.verdict)},
           {"vertices", r.vertices.str()},
           {"omega", r.omega},
           {"omega_verified", r.omega_verified}};
  out["alpha"] = r.alpha ? bounds_to_json(*r.alpha) : Json(nullptr);
  out["chi"] = r.chi ? bounds_to_json(*r.chi) : Json(nullptr);
  out["integrality"] = r.integrality ? fraction_to_json(*r.integrality) : Json(nullptr);
  out["evidence"] = r.evidence;
  if (r.fixture) {
    Json violations = Json::array();
    for (const auto& v : r.fixture->violations) {
      violations.push_back(Json{{"kind", v.kind}, {"labels", v.labels}, {"detail", v.detail}});
    }
    out["fixture"] = Json{{"distinct", r.fixture->distinct},
                          {"exhaustive", r.fixture->exhaustive},
                          {"partition", r.fixture->partition},
                          {"independent", r.fixture->independent},
                          {"classes", r.fixture->class_count},
                          {"class_sizes", r.fixture->class_sizes},
                          {"violations", violations},
                          {"pass", r.fixture->all_pass()}};
  }
  if (r.witness) {
    VertexSet image(r.witness->map.size());
    for (VertexId v : r.witness->map) image.set(v);
    out["witness"] = Json{{"kind", to_string(*r.witness_kind)},
                          {"image", image.members()},
                          {"map", r.witness->map}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json h_report_to_json(const HReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"gcd", r.gcd_value},
              {"applicable", r.applicable},
              {"exponents", exponents_to_json(r.exponents)},
              {"gcd_exponent", r.gcd_exponent},
              {"f", polynomial_to_json(r.f)},
              {"g", polynomial_to_json(r.g)},
              {"f1", polynomial_to_json(r.f1)},
              {"r", polynomial_to_json(r.r)},
              {"remainder_nonzero", r.remainder_nonzero},
              {"exponents_in_range", r.exponents_in_range},
              {"consistent", r.consistent},
              {"criterion_holds", r.criterion_holds()}};
}

Json scan_to_json(const ScanReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"q", e.q}, {"value", e.value.str()}, {"integer", e.value.is_integer()}});
  }
  return Json{{"n", r.n},
              {"m", r.m},
              {"q_max", r.q_max},
              {"applicable", r.applicable},
              {"all_non_integer", r.all_non_integer()},
              {"largest_integer_q", r.largest_integer_q ? Json(*r.largest_integer_q) : Json(nullptr)},
              {"entries", entries}};
}

Json qbinom_to_json(int n, int m, std::optional<std::uint64_t> at_q) {
  const IntPolynomial poly = gaussian_binomial_poly(n, m);
  Json out{{"n", n},
           {"m", m},
           {"exponents", exponents_to_json(knuth_wilf_exponents(n, m))},
           {"polynomial", polynomial_to_json(poly)}};
  if (at_q) {
    if (!prime_power(*at_q)) throw_invalid("q is not a prime power: " + std::to_string(*at_q));
    out["value"] = poly.evaluate(BigInt(*at_q)).str();
  }
  if (4 <= 2 * m && 2 * m <= n) {
    out["h"] = h_report_to_json(h_report(n, m));
    if (at_q) out["h_value"] = fraction_to_json(h_integrality(n, m, *at_q));
  }
  return out;
}

}  // namespace grassmann
