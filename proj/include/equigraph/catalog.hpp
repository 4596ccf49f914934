#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equigraph/graph.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg_params.hpp"

namespace equigraph {

/// A graph from the curated tables: its spectrum, where it comes from and,
/// when defined, a construction.
struct CatalogEntry {
    int row = 0;
    std::string name;
    std::int64_t n = 0;
    std::int64_t k = 0;
    Spectrum spectrum;
    std::string provenance;
    std::function<Graph()> build;  // empty when only spectrum data is carried
};

/// The 13 connected integral cubic graphs.
std::vector<CatalogEntry> integral_cubic_graphs();
/// The 13 distance-regular cubic graphs.
std::vector<CatalogEntry> distance_regular_cubic_graphs();

struct SrgCatalogEntry {
    std::string name;
    SrgParams params;
    Spectrum spectrum;
};

/// Sporadic DS strongly regular graphs of conference type (Paley 5, 13, 17).
std::vector<SrgCatalogEntry> ds_conference_sporadics();
/// Sporadic DS strongly regular graphs of non-conference type.
std::vector<SrgCatalogEntry> ds_nonconference_sporadics();

Graph heawood_graph();
Graph pappus_graph();
Graph dodecahedron_graph();
Graph desargues_graph();
Graph tutte_coxeter_graph();
Graph coxeter_graph();
Graph foster_graph();
Graph tutte_12_cage();
Graph c6_prism();

/// Root of a polynomial (coefficients low to high) isolated in [lo, hi],
/// refined by bisection until the half-width is at most `radius`.
Approx isolate_root(const std::vector<double>& poly, double lo, double hi, double radius = 1e-10);

}  // namespace equigraph
