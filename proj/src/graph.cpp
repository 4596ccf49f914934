#include "equigraph/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "equigraph/jacobi.hpp"

namespace equigraph {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph complete_multipartite(std::size_t parts, std::size_t size) {
    Graph g(parts * size);
    for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t v = u + 1; v < g.n(); ++v) {
            if (u / size != v / size) g.add_edge(u, v);
        }
    }
    return g;
}

Graph hypercube(std::size_t d) {
    Graph g(std::size_t{1} << d);
    for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t v = u ^ (std::size_t{1} << i);
            if (u < v) g.add_edge(u, v);
        }
    }
    return g;
}

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    }
    Graph g(pairs.size());
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            const auto [a, b] = pairs[u];
            const auto [c, d] = pairs[v];
            if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
    }
    return g;
}

// 2cos(2*pi*j/n) as a Surd when it is rational or quadratic.
std::optional<Surd> recognize_cosine(double x) {
    static const std::array<Surd, 11> candidates = {
        Surd(0), Surd(1), Surd(-1), Surd(2), Surd(-2),
        Surd::normalize(0, 1, 2), Surd::normalize(0, -1, 2),
        Surd::normalize(0, 1, 3), Surd::normalize(0, -1, 3),
        Surd::normalize(Rational(-1, 2), Rational(1, 2), 5), Surd::normalize(Rational(-1, 2), Rational(-1, 2), 5),
    };
    for (const auto& c : candidates) {
        if (std::abs(c.to_double() - x) < 1e-12) return c;
        if (std::abs(-c.to_double() - x) < 1e-12) return -c;
    }
    return std::nullopt;
}

Spectrum cycle_spectrum(std::int64_t n) {
    std::vector<SpectrumEntry> entries;
    for (std::int64_t j = 0; j < n; ++j) {
        const double x = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
        if (auto s = recognize_cosine(x)) {
            entries.push_back({*s, 1});
        } else {
            entries.push_back({Approx{x, 1e-12, true}, 1});
        }
    }
    return Spectrum(std::move(entries), Surd(2));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, bool loops_allowed) : n_(n), words_((n + 63) / 64), loops_(loops_allowed) {
    require(n <= kMaxVertices, "graph too large");
    bits_.assign(n_ * words_, 0);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    require(u < n_ && v < n_, "vertex out of range");
    require(u != v || loops_, "loop in a loopless graph");
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    require(u < n_ && v < n_, "vertex out of range");
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(std::size_t u) const {
    std::size_t out = 0;
    for (std::size_t w = 0; w < words_; ++w) out += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
    return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v) {
        if (has_edge(u, v)) out.push_back(v);
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    std::size_t loops = 0;
    for (std::size_t u = 0; u < n_; ++u) {
        twice += degree(u);
        if (has_edge(u, u)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u; v < n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const {
    std::size_t out = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        out += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w] & bits_[v * words_ + w]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named families

std::string family_name(Family f) {
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete-bipartite";
        case Family::CompleteMultipartite: return "complete-multipartite";
        case Family::Crown: return "crown";
        case Family::Lattice: return "lattice";
        case Family::Triangular: return "triangular";
        case Family::Hypercube: return "hypercube";
        case Family::Paley: return "paley";
        case Family::Petersen: return "petersen";
        case Family::Shrikhande: return "shrikhande";
        case Family::Q3: return "q3";
        case Family::K3PrismK2: return "prism";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Family::K3PrismK2); ++i) {
        const auto f = static_cast<Family>(i);
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

Graph gen_named(const NamedGraph& spec) {
    const auto a = spec.a;
    const auto b = spec.b;
    switch (spec.family) {
        case Family::Cycle: {
            require(a >= 3, "cycle needs n >= 3");
            Graph g(static_cast<std::size_t>(a));
            for (std::int64_t i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
            return g;
        }
        case Family::Complete:
            require(a >= 1, "complete graph needs n >= 1");
            return complete(a);
        case Family::CompleteBipartite: {
            require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
            Graph g(a + b);
            for (std::int64_t u = 0; u < a; ++u) {
                for (std::int64_t v = a; v < a + b; ++v) g.add_edge(u, v);
            }
            return g;
        }
        case Family::CompleteMultipartite:
            require(a >= 1 && b >= 1, "complete multipartite needs a, m >= 1");
            return complete_multipartite(a, b);
        case Family::Crown: {
            require(a >= 2, "crown needs t >= 2");
            Graph g(2 * a);
            for (std::int64_t i = 0; i < a; ++i) {
                for (std::int64_t j = 0; j < a; ++j) {
                    if (i != j) g.add_edge(i, a + j);
                }
            }
            return g;
        }
        case Family::Lattice:
            require(a >= 2, "lattice needs n >= 2");
            return cartesian(complete(a), complete(a));
        case Family::Triangular:
            require(a >= 4, "triangular needs n >= 4");
            return line_graph(complete(a));
        case Family::Hypercube:
            require(a >= 1 && a <= 14, "hypercube needs 1 <= d <= 14");
            return hypercube(a);
        case Family::Paley: {
            require(a >= 5 && a % 4 == 1 && as_prime_power(a), "paley needs a prime power q = 1 mod 4");
            return gp_graph(2, a);
        }
        case Family::Petersen:
            return petersen();
        case Family::Shrikhande:
            return cayley(AbelianGroup{{4, 4}}, {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}});
        case Family::Q3:
            return hypercube(3);
        case Family::K3PrismK2:
            return cartesian(complete(3), complete(2));
    }
    throw std::invalid_argument("unknown family");
}

Spectrum named_spectrum(const NamedGraph& spec) {
    const auto a = spec.a;
    const auto b = spec.b;
    using P = std::vector<std::pair<Surd, long long>>;
    auto build = [](P entries, long long k) {
        std::vector<SpectrumEntry> out;
        for (auto& [v, m] : entries) {
            if (m > 0) out.push_back({v, m});
        }
        return Spectrum(std::move(out), Surd(k));
    };
    switch (spec.family) {
        case Family::Cycle:
            require(a >= 3, "cycle needs n >= 3");
            return cycle_spectrum(a);
        case Family::Complete:
            require(a >= 1, "complete graph needs n >= 1");
            return build({{a - 1, 1}, {-1, a - 1}}, a - 1);
        case Family::CompleteBipartite: {
            require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
            const auto r = Surd::normalize(0, 1, a * b);
            // Non-regular unless a == b; the principal entry is the spectral radius.
            std::vector<SpectrumEntry> out = {{r, 1}, {-r, 1}};
            if (a + b > 2) out.push_back({Surd(0), a + b - 2});
            return Spectrum(std::move(out), r);
        }
        case Family::CompleteMultipartite:
            require(a >= 1 && b >= 1, "complete multipartite needs a, m >= 1");
            return build({{(a - 1) * b, 1}, {0, a * (b - 1)}, {-b, a - 1}}, (a - 1) * b);
        case Family::Crown:
            require(a >= 2, "crown needs t >= 2");
            return build({{a - 1, 1}, {1, a - 1}, {-1, a - 1}, {-(a - 1), 1}}, a - 1);
        case Family::Lattice:
            require(a >= 2, "lattice needs n >= 2");
            return build({{2 * a - 2, 1}, {a - 2, 2 * a - 2}, {-2, (a - 1) * (a - 1)}}, 2 * a - 2);
        case Family::Triangular:
            require(a >= 4, "triangular needs n >= 4");
            return build({{2 * a - 4, 1}, {a - 4, a - 1}, {-2, a * (a - 3) / 2}}, 2 * a - 4);
        case Family::Hypercube: {
            require(a >= 1 && a <= 14, "hypercube needs 1 <= d <= 14");
            P entries;
            for (std::int64_t i = 0; i <= a; ++i) entries.push_back({a - 2 * i, binomial(a, i)});
            return build(entries, a);
        }
        case Family::Paley: {
            require(a >= 5 && a % 4 == 1 && as_prime_power(a), "paley needs a prime power q = 1 mod 4");
            const auto r = Surd::normalize(Rational(-1, 2), Rational(1, 2), a);
            const auto s = Surd::normalize(Rational(-1, 2), Rational(-1, 2), a);
            return build({{(a - 1) / 2, 1}, {r, (a - 1) / 2}, {s, (a - 1) / 2}}, (a - 1) / 2);
        }
        case Family::Petersen:
            return build({{3, 1}, {1, 5}, {-2, 4}}, 3);
        case Family::Shrikhande:
            return build({{6, 1}, {2, 6}, {-2, 9}}, 6);
        case Family::Q3:
            return build({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}, 3);
        case Family::K3PrismK2:
            return build({{3, 1}, {1, 1}, {0, 2}, {-2, 2}}, 3);
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Constructions

Graph lcf(std::size_t n, const std::vector<int>& shifts) {
    require(n >= 3 && !shifts.empty(), "lcf needs n >= 3 and shifts");
    Graph g(n);
    const auto nn = static_cast<long long>(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        const long long j = ((static_cast<long long>(i) + shifts[i % shifts.size()]) % nn + nn) % nn;
        require(j != static_cast<long long>(i), "lcf shift maps a vertex to itself");
        g.add_edge(i, static_cast<std::size_t>(j));
    }
    return g;
}

Graph kronecker(const Graph& g, const Graph& h) {
    const bool loops = g.loops_allowed() || h.loops_allowed();
    Graph out(g.n() * h.n(), loops);
    for (std::size_t u1 = 0; u1 < g.n(); ++u1) {
        for (std::size_t v1 = 0; v1 < g.n(); ++v1) {
            if (!g.has_edge(u1, v1)) continue;
            for (std::size_t u2 = 0; u2 < h.n(); ++u2) {
                for (std::size_t v2 = 0; v2 < h.n(); ++v2) {
                    if (h.has_edge(u2, v2)) out.add_edge(u1 * h.n() + u2, v1 * h.n() + v2);
                }
            }
        }
    }
    return out;
}

Graph cartesian(const Graph& g, const Graph& h) {
    const bool loops = g.loops_allowed() || h.loops_allowed();
    Graph out(g.n() * h.n(), loops);
    for (std::size_t u1 = 0; u1 < g.n(); ++u1) {
        for (std::size_t u2 = 0; u2 < h.n(); ++u2) {
            const std::size_t u = u1 * h.n() + u2;
            for (std::size_t v2 = 0; v2 < h.n(); ++v2) {
                if (h.has_edge(u2, v2)) out.add_edge(u, u1 * h.n() + v2);
            }
            for (std::size_t v1 = 0; v1 < g.n(); ++v1) {
                if (g.has_edge(u1, v1)) out.add_edge(u, v1 * h.n() + u2);
            }
        }
    }
    return out;
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (const auto& e : g.edges()) {
        require(e.first != e.second, "line graph of a graph with loops");
        es.push_back(e);
    }
    Graph out(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto [a, b] = es[i];
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
        }
    }
    return out;
}

Graph complement(const Graph& g, bool loops) {
    Graph out(g.n(), loops);
    for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t v = u; v < g.n(); ++v) {
            if (u == v && !loops) continue;
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cayley graphs

std::size_t AbelianGroup::order() const {
    std::size_t out = 1;
    for (auto m : moduli) out *= m;
    return out;
}

std::size_t AbelianGroup::index(const std::vector<std::uint32_t>& x) const {
    require(x.size() == moduli.size(), "group element has wrong arity");
    std::size_t out = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) out = out * moduli[i] + x[i] % moduli[i];
    return out;
}

std::vector<std::uint32_t> AbelianGroup::element(std::size_t index) const {
    std::vector<std::uint32_t> out(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(index % moduli[i]);
        index /= moduli[i];
    }
    return out;
}

Graph cayley(const AbelianGroup& group, const std::vector<std::vector<std::uint32_t>>& connection, bool loops) {
    for (auto m : group.moduli) require(m >= 1, "group moduli must be positive");
    const std::size_t n = group.order();
    std::vector<bool> in(n, false);
    for (const auto& s : connection) in[group.index(s)] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) continue;
        auto x = group.element(i);
        for (std::size_t c = 0; c < x.size(); ++c) x[c] = (group.moduli[c] - x[c]) % group.moduli[c];
        require(in[group.index(x)], "connection set is not closed under negation");
    }
    require(!in[0] || loops, "connection set contains 0");
    Graph g(n, loops);
    for (std::size_t u = 0; u < n; ++u) {
        const auto x = group.element(u);
        for (std::size_t v = u; v < n; ++v) {
            const auto y = group.element(v);
            std::vector<std::uint32_t> diff(x.size());
            for (std::size_t c = 0; c < x.size(); ++c) diff[c] = (x[c] + group.moduli[c] - y[c]) % group.moduli[c];
            if (in[group.index(diff)]) g.add_edge(u, v);
        }
    }
    return g;
}

Graph cayley(const FiniteField& field, const std::vector<FiniteField::Elem>& connection, bool loops) {
    const std::size_t n = field.order();
    std::vector<bool> in(n, false);
    for (auto s : connection) {
        require(s < n, "connection element outside the field");
        in[s] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i]) require(in[field.neg(static_cast<FiniteField::Elem>(i))], "connection set is not closed under negation");
    }
    require(!in[0] || loops, "connection set contains 0");
    Graph g(n, loops);
    for (FiniteField::Elem u = 0; u < n; ++u) {
        for (FiniteField::Elem v = u; v < n; ++v) {
            if (in[field.sub(u, v)]) g.add_edge(u, v);
        }
    }
    return g;
}

Graph gp_graph(std::uint32_t k, std::uint64_t q) {
    require(k >= 1, "gp_graph needs k >= 1");
    const FiniteField field(q);
    require((q - 1) % k == 0, "gp_graph needs k | q - 1");
    return cayley(field, field.power_residues(k));
}

std::string LocalFactor::str() const {
    return (kind == Kind::Field ? "F" : "Z") + std::to_string(order);
}

LocalFactor LocalFactor::parse(const std::string& text) {
    require(text.size() >= 2 && (text[0] == 'F' || text[0] == 'Z'), "local factor must look like F9 or Z4");
    LocalFactor out;
    out.kind = text[0] == 'F' ? Kind::Field : Kind::IntegersMod;
    std::size_t used = 0;
    out.order = std::stoull(text.substr(1), &used);
    require(used + 1 == text.size(), "bad local factor '" + text + "'");
    require(as_prime_power(out.order).has_value(), "local factor order must be a prime power");
    return out;
}

Graph unitary_cayley_concrete(const std::vector<LocalFactor>& factors) {
    require(!factors.empty(), "unitary Cayley graph needs at least one factor");
    std::optional<Graph> out;
    for (const auto& f : factors) {
        const auto pp = as_prime_power(f.order);
        require(pp.has_value(), "unsupported local factor " + f.str());
        Graph g;
        if (f.kind == LocalFactor::Kind::Field) {
            const FiniteField field(f.order);
            g = cayley(field, field.nonzero());
        } else {
            std::vector<std::vector<std::uint32_t>> units;
            for (std::uint32_t x = 0; x < f.order; ++x) {
                if (x % pp->p != 0) units.push_back({x});
            }
            g = cayley(AbelianGroup{{static_cast<std::uint32_t>(f.order)}}, units);
        }
        out = out ? kronecker(*out, g) : g;
    }
    return *out;
}

// ---------------------------------------------------------------------------
// Spectra and predicates

Spectrum numeric_spectrum(const Graph& g) {
    require(g.n() >= 1 && g.n() <= 5000, "numeric_spectrum needs 1 <= n <= 5000");
    Eigen::VectorXd values;
    try {
        values = jacobi_eigenvalues(g.adjacency<double>());
    } catch (const JacobiNoConvergence& e) {
        throw ConvergenceError(e.what());
    }
    std::vector<SpectrumEntry> entries;
    std::size_t i = 0;
    const auto n = static_cast<std::size_t>(values.size());
    while (i < n) {
        std::size_t j = i + 1;
        double sum = values[static_cast<Eigen::Index>(i)];
        while (j < n && values[static_cast<Eigen::Index>(j - 1)] - values[static_cast<Eigen::Index>(j)] <= 1e-9) {
            sum += values[static_cast<Eigen::Index>(j)];
            ++j;
        }
        entries.push_back({Approx{sum / static_cast<double>(j - i), 1e-8, false}, static_cast<long long>(j - i)});
        i = j;
    }
    if (const auto k = regularity(g)) {
        return Spectrum(std::move(entries), Approx{static_cast<double>(*k), 0.0, false});
    }
    return Spectrum(std::move(entries));
}

std::optional<std::size_t> regularity(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    const std::size_t k = g.degree(0);
    for (std::size_t u = 1; u < g.n(); ++u) {
        if (g.degree(u) != k) return std::nullopt;
    }
    return k;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.n(), -1);
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : g.neighbors(u)) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<SrgParams> srg_detect(const Graph& g) {
    for (std::size_t u = 0; u < g.n(); ++u) {
        if (g.has_edge(u, u)) return std::nullopt;
    }
    const auto k = regularity(g);
    if (!k || *k == 0 || *k + 1 >= g.n()) return std::nullopt;
    std::optional<std::size_t> e;
    std::optional<std::size_t> d;
    for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t v = u + 1; v < g.n(); ++v) {
            const auto c = g.common_neighbors(u, v);
            auto& slot = g.has_edge(u, v) ? e : d;
            if (!slot) {
                slot = c;
            } else if (*slot != c) {
                return std::nullopt;
            }
        }
    }
    return SrgParams{static_cast<std::int64_t>(g.n()), static_cast<std::int64_t>(*k),
                     static_cast<std::int64_t>(e.value_or(0)), static_cast<std::int64_t>(d.value_or(0))};
}

bool is_isospectral(const Graph& g, const Graph& h, double tol) {
    if (g.n() != h.n()) return false;
    return isospectral(numeric_spectrum(g), numeric_spectrum(h), tol);
}

}  // namespace equigraph
