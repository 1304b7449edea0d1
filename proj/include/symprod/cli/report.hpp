#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symprod/dynamics/dynamics.hpp"
#include "symprod/heights/heights.hpp"
#include "symprod/spectra/spectra.hpp"

namespace symprod::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// {schema_version, command} header shared by every JSON document.
Json json_header(const std::string& command);

/// Minimal polynomial of a Galois orbit, "inf" for the point at infinity.
std::string class_label(const ConjugateClass& c);
/// The multiset behind a node: "(4*x - 7)*(4*x + 3)^2*inf".
std::string multiset_label(const std::vector<ConjugateClass>& classes);

/// {value, error_bound, places:[{place, contribution}], certified, note}
Json height_json(const HeightValue& h);
std::string height_text(const HeightValue& h);

struct GraphReport {
  std::string map;
  unsigned k = 1;
  unsigned n_max = 0;
  std::uint64_t budget = default_budget;
  PreperiodicGraph graph;
  std::vector<RecoveredClass> classes;
  std::vector<FieldSummary> fields;
};

GraphReport build_graph_report(const RationalMap1& f, unsigned k, unsigned n_max, std::uint64_t budget);
/// {nodes[], edges[], fields[], points[]} after the header.
Json graph_json(const GraphReport& r);
std::string graph_text(const GraphReport& r);
/// Graphviz digraph; node labels "minpoly=<poly>; coords=<list>".
std::string graph_dot(const GraphReport& r);

Json orbit_json(const OrbitClassification& o);
std::string orbit_text(const OrbitClassification& o);

Json multiplier_json(const MultiplierReport& m);
std::string multiplier_text(const MultiplierReport& m);

Json pcf_json(const PCFCertificate& c);
std::string pcf_text(const PCFCertificate& c);

}  // namespace symprod::cli
