#include "equigraph/catalog.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace equigraph {

namespace {

using P = std::vector<std::pair<Surd, long long>>;

Surd root(long long d, long long coeff = 1) { return Surd::normalize(0, coeff, d); }

Spectrum exact_spectrum(const P& entries) {
    std::vector<SpectrumEntry> out;
    for (const auto& [v, m] : entries) out.push_back({v, m});
    return Spectrum(std::move(out), Surd(3));
}

Graph complete(std::size_t n) { return gen_named({Family::Complete, static_cast<std::int64_t>(n)}); }

double evaluate(const std::vector<double>& poly, double x) {
    double out = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) out = out * x + poly[i];
    return out;
}

const char* kConstructed = "constructed; spectrum checked against the numeric solver";
const char* kCurated = "curated spectrum data; the construction is not defined here";

}  // namespace

Approx isolate_root(const std::vector<double>& poly, double lo, double hi, double radius) {
    double flo = evaluate(poly, lo);
    const double fhi = evaluate(poly, hi);
    if (flo == 0.0) return {lo, 0.0, true};
    if (fhi == 0.0) return {hi, 0.0, true};
    if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("interval does not isolate a sign change");
    while ((hi - lo) / 2 > radius) {
        const double mid = lo + (hi - lo) / 2;
        const double fm = evaluate(poly, mid);
        if (fm == 0.0) return {mid, 0.0, true};
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo + (hi - lo) / 2, (hi - lo) / 2, true};
}

// ---------------------------------------------------------------------------
// Constructions

Graph heawood_graph() { return lcf(14, {5, -5}); }
Graph pappus_graph() { return lcf(18, {5, 7, -7, 7, -7, -5}); }
Graph dodecahedron_graph() { return lcf(20, {10, 7, 4, -4, -7, 10, -4, 7, -7, 4}); }
Graph desargues_graph() { return lcf(20, {5, -5, 9, -9}); }
Graph tutte_coxeter_graph() { return lcf(30, {-13, -9, 7, -7, 9, 13}); }
Graph foster_graph() { return lcf(90, {17, -9, 37, -37, 9, -17}); }

Graph tutte_12_cage() {
    return lcf(126, {17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17});
}

Graph c6_prism() { return cartesian(gen_named({Family::Cycle, 6}), complete(2)); }

Graph coxeter_graph() {
    // 3-subsets of {0..6} that are not lines of the Fano plane, adjacent when disjoint.
    const std::vector<std::array<int, 3>> lines = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                                   {0, 4, 5}, {1, 5, 6}, {0, 2, 6}};
    std::vector<unsigned> sets;
    for (unsigned mask = 0; mask < 128; ++mask) {
        if (std::popcount(mask) != 3) continue;
        bool line = false;
        for (const auto& l : lines) {
            if (mask == ((1u << l[0]) | (1u << l[1]) | (1u << l[2]))) line = true;
        }
        if (!line) sets.push_back(mask);
    }
    Graph g(sets.size());
    for (std::size_t u = 0; u < sets.size(); ++u) {
        for (std::size_t v = u + 1; v < sets.size(); ++v) {
            if ((sets[u] & sets[v]) == 0) g.add_edge(u, v);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Cubic tables

std::vector<CatalogEntry> integral_cubic_graphs() {
    std::vector<CatalogEntry> out;
    auto add = [&](int row, std::string name, P spec, std::function<Graph()> build) {
        auto spectrum = exact_spectrum(spec);
        const auto n = spectrum.n();
        out.push_back({row, std::move(name), n, 3, std::move(spectrum), build ? kConstructed : kCurated, std::move(build)});
    };
    add(1, "K33", {{3, 1}, {0, 4}, {-3, 1}}, [] { return gen_named({Family::CompleteBipartite, 3, 3}); });
    add(2, "Q3", {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}, [] { return gen_named({Family::Q3}); });
    add(3, "K23* x K2", {{3, 1}, {2, 1}, {1, 2}, {0, 2}, {-1, 2}, {-2, 1}, {-3, 1}}, nullptr);
    // (+-2)^2 is forced by the trace.
    add(4, "C6 x K2", {{3, 1}, {2, 2}, {1, 1}, {0, 4}, {-1, 1}, {-2, 2}, {-3, 1}}, c6_prism);
    add(5, "Desargues", {{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}}, desargues_graph);
    add(6, "T* x K2", {{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}}, nullptr);
    add(7, "Sigma x K2", {{3, 1}, {2, 6}, {1, 3}, {0, 4}, {-1, 3}, {-2, 6}, {-3, 1}}, nullptr);
    add(8, "Tutte-Coxeter", {{3, 1}, {2, 9}, {0, 10}, {-2, 9}, {-3, 1}}, tutte_coxeter_graph);
    add(9, "K4", {{3, 1}, {-1, 3}}, [] { return complete(4); });
    add(10, "K3 x K2", {{3, 1}, {1, 1}, {0, 2}, {-2, 2}}, [] { return gen_named({Family::K3PrismK2}); });
    add(11, "Petersen", {{3, 1}, {1, 5}, {-2, 4}}, [] { return gen_named({Family::Petersen}); });
    add(12, "(Pi x K2)/sigma", {{3, 1}, {2, 1}, {1, 3}, {-1, 2}, {-2, 3}}, nullptr);
    add(13, "Sigma", {{3, 1}, {2, 3}, {0, 2}, {-1, 3}, {-2, 3}}, nullptr);
    return out;
}

std::vector<CatalogEntry> distance_regular_cubic_graphs() {
    std::vector<CatalogEntry> out;
    auto add = [&](int row, std::string name, Spectrum spectrum, std::function<Graph()> build, std::string note = "") {
        const auto n = spectrum.n();
        std::string provenance = build ? kConstructed : kCurated;
        if (!note.empty()) provenance += "; " + note;
        out.push_back({row, std::move(name), n, 3, std::move(spectrum), provenance, std::move(build)});
    };
    add(1, "K4", exact_spectrum({{3, 1}, {-1, 3}}), [] { return complete(4); });
    add(2, "K33", exact_spectrum({{3, 1}, {0, 4}, {-3, 1}}), [] { return gen_named({Family::CompleteBipartite, 3, 3}); });
    add(3, "Q3", exact_spectrum({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}), [] { return gen_named({Family::Q3}); });
    add(4, "Petersen", exact_spectrum({{3, 1}, {1, 5}, {-2, 4}}), [] { return gen_named({Family::Petersen}); });
    add(5, "Heawood", exact_spectrum({{3, 1}, {root(2), 6}, {root(2, -1), 6}, {-3, 1}}), heawood_graph,
        "corrected to +-sqrt2");
    add(6, "Pappus", exact_spectrum({{3, 1}, {root(3), 6}, {0, 4}, {root(3, -1), 6}, {-3, 1}}), pappus_graph);
    add(7, "Dodecahedron", exact_spectrum({{3, 1}, {root(5), 3}, {1, 5}, {0, 4}, {root(5, -1), 3}, {-2, 4}}),
        dodecahedron_graph);
    add(8, "Desargues", exact_spectrum({{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}}), desargues_graph);
    add(9, "Coxeter",
        exact_spectrum({{3, 1}, {2, 8}, {Surd::normalize(-1, 1, 2), 6}, {-1, 7}, {Surd::normalize(-1, -1, 2), 6}}),
        coxeter_graph, "corrected to -1+-sqrt2");
    add(10, "Tutte-Coxeter", exact_spectrum({{3, 1}, {2, 9}, {0, 10}, {-2, 9}, {-3, 1}}), tutte_coxeter_graph);
    add(11, "Foster",
        exact_spectrum({{3, 1}, {root(6), 12}, {2, 9}, {1, 18}, {0, 10}, {-1, 18}, {-2, 9}, {root(6, -1), 12}, {-3, 1}}),
        foster_graph, "multiplicities completed from the construction");
    {
        const std::vector<double> quad = {-4, -1, 1};      // x^2 - x - 4
        const std::vector<double> cubic = {-3, 0, 3, 1};   // x^3 + 3x^2 - 3
        const auto l1 = isolate_root(quad, 2.5, 2.6);
        const auto l4 = isolate_root(quad, -1.6, -1.5);
        const auto l2 = isolate_root(cubic, 0.8, 0.9);
        const auto l3 = isolate_root(cubic, -1.4, -1.3);
        const auto l5 = isolate_root(cubic, -2.6, -2.5);
        Spectrum spectrum({{Surd(3), 1}, {l1, 9}, {Surd(2), 18}, {l2, 16}, {Surd(0), 17}, {l3, 16}, {l4, 9}, {l5, 16}},
                          Surd(3));
        add(12, "Biggs-Smith", std::move(spectrum), nullptr,
            "irrational eigenvalues isolated by bisection on x^2-x-4 and x^3+3x^2-3");
    }
    add(13, "Tutte 12-cage",
        exact_spectrum({{3, 1}, {root(6), 21}, {root(2), 27}, {0, 28}, {root(2, -1), 27}, {root(6, -1), 21}, {-3, 1}}),
        tutte_12_cage);
    return out;
}

// ---------------------------------------------------------------------------
// DS strongly regular sporadics

std::vector<SrgCatalogEntry> ds_conference_sporadics() {
    std::vector<SrgCatalogEntry> out;
    for (std::int64_t d : {1, 3, 4}) {
        const std::int64_t n = 4 * d + 1;
        const auto r = Surd::normalize(Rational(-1, 2), Rational(1, 2), n);
        const auto s = Surd::normalize(Rational(-1, 2), Rational(-1, 2), n);
        out.push_back({"Paley P(" + std::to_string(n) + ")", {n, 2 * d, d - 1, d},
                       Spectrum({{Surd(2 * d), 1}, {r, 2 * d}, {s, 2 * d}}, Surd(2 * d))});
    }
    return out;
}

std::vector<SrgCatalogEntry> ds_nonconference_sporadics() {
    struct Row {
        const char* name;
        std::int64_t n, k, r, mr, s, ms;
    };
    static const Row rows[] = {
        {"folded 5-cube", 16, 5, 1, 10, -3, 5},
        {"GQ(2,4)", 27, 10, 1, 20, -5, 6},
        {"Hoffman-Singleton", 50, 7, 2, 28, -3, 21},
        {"Gewirtz", 56, 10, 2, 35, -4, 20},
        {"Mesner M22", 77, 16, 2, 55, -6, 21},
        {"Brouwer-Haemers", 81, 20, 2, 60, -7, 20},
        {"Higman-Sims", 100, 22, 2, 77, -8, 22},
        {"flags of PG(2,4)", 105, 32, 2, 84, -10, 20},
        {"GQ(3,9)", 112, 30, 2, 90, -10, 21},
        {"001.. in S(5,8,24)", 120, 42, 2, 99, -12, 20},
        {"Goethals", 126, 50, 2, 105, -13, 20},
        {"local McLaughlin", 162, 56, 2, 140, -16, 21},
        {"01.. in S(5,8,24)", 176, 70, 2, 154, -18, 21},
        {"McLaughlin", 275, 112, 2, 252, -28, 22},
    };
    std::vector<SrgCatalogEntry> out;
    for (const auto& row : rows) {
        const SrgParams p{row.n, row.k, row.k + row.r + row.s + row.r * row.s, row.k + row.r * row.s};
        out.push_back({row.name, p,
                       Spectrum({{Surd(row.k), 1}, {Surd(row.r), row.mr}, {Surd(row.s), row.ms}}, Surd(row.k))});
    }
    return out;
}

}  // namespace equigraph
