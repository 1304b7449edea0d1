#include "symprod/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace symprod::cli {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json coords_json(const PkPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_string(c));
  return a;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json json_header(const std::string& command) {
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  return j;
}

std::string class_label(const ConjugateClass& c) {
  return c.point.infinity ? "inf" : c.minpoly.to_string("x");
}

std::string multiset_label(const std::vector<ConjugateClass>& classes) {
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += "*";
    out += c.point.infinity ? "inf" : "(" + c.minpoly.to_string("x") + ")";
    if (c.multiplicity > 1) out += "^" + std::to_string(c.multiplicity);
  }
  return out;
}

Json height_json(const HeightValue& h) {
  Json j;
  j["value"] = h.value;
  j["error_bound"] = h.error_bound;
  Json places = Json::array();
  for (const auto& p : h.places) places.push_back({{"place", p.place}, {"contribution", p.contribution}});
  j["places"] = places;
  j["certified"] = h.certified;
  if (!h.note.empty()) j["note"] = h.note;
  return j;
}

std::string height_text(const HeightValue& h) {
  std::ostringstream os;
  os << "canonical height: " << fixed(h.value) << " +/- " << fixed(h.error_bound) << "\n";
  for (const auto& p : h.places) os << "  place " << p.place << ": " << fixed(p.contribution) << "\n";
  if (!h.certified) os << "error bound not certified\n";
  if (!h.note.empty()) os << "note: " << h.note << "\n";
  return os.str();
}

GraphReport build_graph_report(const RationalMap1& f, unsigned k, unsigned n_max, std::uint64_t budget) {
  GraphReport r;
  r.map = f.to_string();
  r.k = k;
  r.n_max = n_max;
  r.budget = budget;
  r.graph = preperiodic_graph(f, k, n_max, budget);
  r.classes = recovered_classes(f, r.graph);
  r.fields = field_summaries(r.classes);
  return r;
}

Json graph_json(const GraphReport& r) {
  Json j = json_header("preperiodic");
  j["map"] = r.map;
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  j["budget"] = r.budget;
  Json nodes = Json::array(), edges = Json::array(), fields = Json::array(), points = Json::array();
  for (std::size_t i = 0; i < r.graph.nodes.size(); ++i) {
    const auto& n = r.graph.nodes[i];
    nodes.push_back({{"id", i},
                     {"coords", coords_json(n.point)},
                     {"minpoly", multiset_label(n.conjugates)},
                     {"tail", n.tail},
                     {"period", n.period}});
    edges.push_back({{"source", i}, {"target", r.graph.image[i]}});
  }
  for (const auto& fs : r.fields) {
    Json members = Json::array();
    for (const auto& m : fs.members) members.push_back(m.to_string("x"));
    fields.push_back({{"minpoly", fs.minpoly.to_string("x")},
                      {"degree", fs.degree},
                      {"galois", fs.galois},
                      {"points", fs.rational_points},
                      {"members", members}});
  }
  for (const auto& c : r.classes)
    points.push_back({{"minpoly", class_label(c.cls)},
                      {"degree", c.cls.degree()},
                      {"tail", c.tail},
                      {"period", c.period}});
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["fields"] = fields;
  j["points"] = points;
  return j;
}

std::string graph_text(const GraphReport& r) {
  std::ostringstream os;
  std::size_t periodic = 0;
  for (const auto& n : r.graph.nodes) periodic += n.tail == 0;
  os << "map: " << r.map << "\n";
  os << "k: " << r.k << "  n_max: " << r.n_max << "  budget: " << r.budget << "\n";
  os << "nodes: " << r.graph.nodes.size() << "  periodic: " << periodic << "\n";
  os << "preperiodic points of f recovered: " << r.classes.size() << " Galois orbits\n";
  os << "fields:\n";
  for (const auto& fs : r.fields) {
    if (fs.degree == 1)
      os << "  Q";
    else
      os << "  Q[x]/(" << fs.minpoly.to_string("x") << ")";
    os << "  degree " << fs.degree << (fs.galois ? "  Galois" : "  non-Galois") << "  points " << fs.rational_points
       << "\n";
    if (fs.degree > 1) {
      os << "    generated by:";
      for (const auto& m : fs.members) os << " (" << m.to_string("x") << ")";
      os << "\n";
    }
  }
  os << "points:\n";
  for (const auto& c : r.classes)
    os << "  " << class_label(c.cls) << "  degree " << c.cls.degree() << "  tail " << c.tail << "  period " << c.period
       << "\n";
  return os.str();
}

std::string graph_dot(const GraphReport& r) {
  std::ostringstream os;
  os << "digraph preperiodic {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < r.graph.nodes.size(); ++i) {
    const auto& n = r.graph.nodes[i];
    const std::string label = "minpoly=" + multiset_label(n.conjugates) + "; coords=" + n.point.to_string();
    os << "  n" << i << " [label=\"" << dot_escape(label) << "\"" << (n.tail == 0 ? ", peripheries=2" : "")
       << "];\n";
  }
  for (std::size_t i = 0; i < r.graph.nodes.size(); ++i) os << "  n" << i << " -> n" << r.graph.image[i] << ";\n";
  os << "}\n";
  return os.str();
}

Json orbit_json(const OrbitClassification& o) {
  Json j;
  j["status"] = o.preperiodic() ? "preperiodic" : "wandering";
  if (o.preperiodic()) {
    j["tail"] = o.tail;
    j["period"] = o.period;
  } else {
    j["escape_index"] = o.escape_index;
    j["escape_height"] = o.escape_height;
  }
  j["bound"] = o.bound;
  j["bound_certified"] = o.bound_certified;
  j["orbit"] = o.orbit;
  return j;
}

std::string orbit_text(const OrbitClassification& o) {
  std::ostringstream os;
  if (o.preperiodic())
    os << "preperiodic: tail " << o.tail << ", period " << o.period << "\n";
  else
    os << "wandering: height " << fixed(o.escape_height) << " at iterate " << o.escape_index << " exceeds bound "
       << fixed(o.bound) << (o.bound_certified ? "" : " (uncertified)") << "\n";
  os << "orbit:";
  for (const auto& s : o.orbit) os << " " << s;
  os << "\n";
  return os.str();
}

Json multiplier_json(const MultiplierReport& m) {
  Json j;
  j["point"] = coords_json(m.point);
  j["period"] = m.period;
  j["chart"] = m.chart;
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) row.push_back(to_string(m.matrix(r, c)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["charpoly"] = m.charpoly.to_string("x");
  j["charpoly_factored"] = factored_string(m.charpoly);
  Json base = Json::array();
  for (const auto& b : m.base)
    base.push_back({{"point", class_label(b.cls)},
                    {"multiplicity", b.cls.multiplicity},
                    {"period", b.period},
                    {"multiplier", b.multiplier.to_string()}});
  j["base"] = base;
  return j;
}

std::string multiplier_text(const MultiplierReport& m) {
  std::ostringstream os;
  os << "point " << m.point.to_string() << "  period " << m.period << "  chart " << m.chart << "\n";
  os << "  charpoly: " << factored_string(m.charpoly) << "\n";
  for (const auto& b : m.base)
    os << "  base point " << class_label(b.cls) << (b.cls.multiplicity > 1 ? "^" + std::to_string(b.cls.multiplicity) : "")
       << "  period " << b.period << "  multiplier " << b.multiplier.to_string() << "\n";
  return os.str();
}

Json pcf_json(const PCFCertificate& c) {
  Json j;
  j["pcf"] = c.pcf;
  j["k"] = c.k;
  j["justification"] = c.justification;
  Json crit = Json::array();
  for (const auto& co : c.critical)
    crit.push_back({{"point", class_label(co.point)}, {"multiplicity", co.point.multiplicity},
                    {"orbit", orbit_json(co.orbit)}});
  j["critical_points"] = crit;
  return j;
}

std::string pcf_text(const PCFCertificate& c) {
  std::ostringstream os;
  os << (c.pcf ? "PCF" : "not PCF");
  if (c.k > 1) os << " (symmetric product k = " << c.k << ")";
  os << "\n" << c.justification << "\n";
  for (const auto& co : c.critical) {
    os << "critical point " << class_label(co.point);
    if (co.point.multiplicity > 1) os << " (multiplicity " << co.point.multiplicity << ")";
    os << ": " << orbit_text(co.orbit);
  }
  return os.str();
}

}  // namespace symprod::cli
