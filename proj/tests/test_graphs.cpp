#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>
#include <set>

#include "equigraph/catalog.hpp"
#include "equigraph/graph.hpp"
#include "equigraph/jacobi.hpp"

using namespace equigraph;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

// Brute-force strong regularity, independent of srg_detect.
std::optional<SrgParams> brute_srg(const Graph& g) {
    const auto n = g.n();
    std::set<std::size_t> deg, adj, non;
    for (std::size_t u = 0; u < n; ++u) {
        deg.insert(g.neighbors(u).size());
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t c = 0;
            for (std::size_t w = 0; w < n; ++w) c += g.has_edge(u, w) && g.has_edge(v, w);
            (g.has_edge(u, v) ? adj : non).insert(c);
        }
    }
    if (deg.size() != 1 || adj.size() != 1 || non.size() != 1) return std::nullopt;
    return SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(*deg.begin()),
                     static_cast<std::int64_t>(*adj.begin()), static_cast<std::int64_t>(*non.begin())};
}

}  // namespace

TEST_CASE("Graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK_THROWS(g.add_edge(2, 2));
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    Graph looped(3, true);
    looped.add_edge(0, 0);
    CHECK(looped.has_edge(0, 0));
    CHECK(looped.degree(0) == 1);
    CHECK_THROWS(Graph(Graph::kMaxVertices + 1));
}

TEST_CASE("named family examples") {
    const auto cr3 = gen_named({Family::Crown, 3});
    CHECK(cr3.n() == 6);
    CHECK(regularity(cr3) == std::optional<std::size_t>(2));
    CHECK(is_isospectral(cr3, gen_named({Family::Cycle, 6})));
    CHECK(srg_detect(gen_named({Family::Lattice, 4})) == std::optional(SrgParams{16, 6, 2, 2}));
    CHECK(is_isospectral(gen_named({Family::CompleteMultipartite, 2, 2}), gen_named({Family::Cycle, 4})));
    CHECK_THROWS(gen_named({Family::Crown, 1}));
    CHECK_THROWS(gen_named({Family::Paley, 7}));
    CHECK(parse_family("crown") == std::optional(Family::Crown));
    CHECK_FALSE(parse_family("nope"));
}

TEST_CASE("products, line graphs and complements") {
    CHECK(kronecker(gen_named({Family::Complete, 2}), gen_named({Family::Complete, 3})) == gen_named({Family::Crown, 3}));
    CHECK(srg_detect(line_graph(gen_named({Family::CompleteBipartite, 4, 4}))) == std::optional(SrgParams{16, 6, 2, 2}));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_graph(rng, 9, 0.4);
        CHECK(complement(complement(g)) == g);
        const auto c = complement(g);
        for (std::size_t u = 0; u < g.n(); ++u) {
            for (std::size_t v = 0; v < g.n(); ++v) CHECK(c.has_edge(u, v) == (u != v && !g.has_edge(u, v)));
        }
    }
    Graph looped(3, true);
    looped.add_edge(0, 0);
    looped.add_edge(1, 2);
    const auto lc = complement(looped, true);
    CHECK_FALSE(lc.has_edge(0, 0));
    CHECK(lc.has_edge(1, 1));
    CHECK(lc.has_edge(0, 1));
    CHECK_FALSE(lc.has_edge(1, 2));
}

TEST_CASE("with-loops complement spectrum matches J - A numerically") {
    Graph looped(3, true);
    looped.add_edge(0, 0);
    looped.add_edge(1, 2);
    const auto s = numeric_spectrum(looped);
    const auto expected = complement_spectrum(Spectrum::exact({{1, 2}, {-1, 1}}), 1, true);
    CHECK(spectra_match(expected, numeric_spectrum(complement(looped, true)), 1e-7));
    CHECK(spectra_match(Spectrum::exact({{1, 2}, {-1, 1}}), s, 1e-7));
    // a 2-regular looped graph on 4 vertices: loops at all, perfect matching
    Graph g(4, true);
    for (std::size_t u = 0; u < 4; ++u) g.add_edge(u, u);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    const auto sg = numeric_spectrum(g);
    const auto ex = Spectrum::exact({{2, 2}, {0, 2}});
    CHECK(spectra_match(ex, sg, 1e-7));
    const auto rep = check_equienergetic(ex, 2, true);
    CHECK(rep.equal);  // n = 2k
    CHECK(spectra_match(complement_spectrum(ex, 2, true), numeric_spectrum(complement(g, true)), 1e-7));
}

TEST_CASE("cayley graphs") {
    const FiniteField f5(5);
    CHECK(is_isospectral(cayley(f5, f5.power_residues(2)), gen_named({Family::Cycle, 5})));
    const auto shr = cayley(AbelianGroup{{4, 4}}, {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}});
    CHECK(shr == gen_named({Family::Shrikhande}));
    CHECK(srg_detect(shr) == std::optional(SrgParams{16, 6, 2, 2}));
    const auto p9 = gp_graph(2, 9);
    CHECK(srg_detect(p9) == std::optional(SrgParams{9, 4, 1, 2}));
    CHECK(brute_srg(p9) == srg_detect(p9));
    CHECK_THROWS(cayley(AbelianGroup{{5}}, {{1}}));
    CHECK_THROWS(cayley(AbelianGroup{{5}}, {{0}}));
}

TEST_CASE("gp_graph examples") {
    CHECK(gp_graph(2, 5) == cayley(FiniteField(5), FiniteField(5).power_residues(2)));
    const auto g64 = gp_graph(3, 64);
    CHECK(g64.n() == 64);
    CHECK(regularity(g64) == std::optional<std::size_t>(21));
    const auto g16 = gp_graph(3, 16);
    CHECK(regularity(g16) == std::optional<std::size_t>(5));
    CHECK(srg_detect(g16) == std::optional(SrgParams{16, 5, 0, 2}));
    CHECK_THROWS(gp_graph(2, 7));  // -1 is not a square mod 7
}

TEST_CASE("unitary Cayley graphs of realizable rings") {
    const auto g = unitary_cayley_concrete({LocalFactor::parse("F3"), LocalFactor::parse("F5"), LocalFactor::parse("F5")});
    CHECK(g.n() == 75);
    CHECK(regularity(g) == std::optional<std::size_t>(32));
    const auto z4 = unitary_cayley_concrete({LocalFactor::parse("Z4")});
    CHECK(is_isospectral(z4, gen_named({Family::Cycle, 4})));
    CHECK(regularity(z4) == std::optional<std::size_t>(2));
    CHECK(unitary_cayley_concrete({LocalFactor::parse("F2")}) == gen_named({Family::Complete, 2}));
    CHECK(srg_detect(unitary_cayley_concrete({LocalFactor::parse("F4"), LocalFactor::parse("F4")})) ==
          std::optional(SrgParams{16, 9, 4, 6}));
    CHECK_THROWS(LocalFactor::parse("Z6"));
    CHECK_THROWS(LocalFactor::parse("F6"));
    CHECK(LocalFactor::parse("Z8").str() == "Z8");
}

TEST_CASE("numeric spectra of small graphs") {
    CHECK(spectra_match(Spectrum::exact({{3, 1}, {1, 5}, {-2, 4}}), numeric_spectrum(gen_named({Family::Petersen})), 1e-8));
    const auto sqrt2 = Surd::normalize(0, 1, 2);
    CHECK(spectra_match(Spectrum::exact({{3, 1}, {sqrt2, 6}, {-sqrt2, 6}, {-3, 1}}), numeric_spectrum(heawood_graph()), 1e-8));
    const auto k1 = numeric_spectrum(Graph(1));
    CHECK(k1.n() == 1);
    CHECK(to_double(k1.entries()[0].eig) == doctest::Approx(0.0));
}

TEST_CASE("trace identities on numeric spectra") {
    std::vector<Graph> graphs = {gen_named({Family::Petersen}), gen_named({Family::Shrikhande}), dodecahedron_graph(),
                                 desargues_graph(), gen_named({Family::Triangular, 7}), gp_graph(3, 16)};
    for (const auto& g : graphs) {
        const auto k = *regularity(g);
        const auto v = numeric_spectrum(g).expanded();
        double s1 = 0;
        double s2 = 0;
        for (double x : v) {
            s1 += x;
            s2 += x * x;
        }
        CHECK(std::abs(s1) < 1e-6);
        CHECK(std::abs(s2 - static_cast<double>(g.n() * k)) < 1e-5);
    }
}

TEST_CASE("kronecker spectrum is the product multiset") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    for (int i = 0; i < 25; ++i) {
        const auto g = random_graph(rng, size(rng), 0.5);
        const auto h = random_graph(rng, size(rng), 0.5);
        const auto eg = jacobi_eigenvalues(g.adjacency());
        const auto eh = jacobi_eigenvalues(h.adjacency());
        std::vector<double> prod;
        for (double x : eg) {
            for (double y : eh) prod.push_back(x * y);
        }
        std::sort(prod.begin(), prod.end());
        auto ek = jacobi_eigenvalues(kronecker(g, h).adjacency());
        std::sort(ek.begin(), ek.end());
        REQUIRE(static_cast<std::size_t>(ek.size()) == prod.size());
        for (Eigen::Index j = 0; j < ek.size(); ++j) CHECK(ek[j] == doctest::Approx(prod[static_cast<std::size_t>(j)]).epsilon(1e-9).scale(1));
    }
}

TEST_CASE("jacobi matches Eigen's solver on random symmetric matrices") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss;
    for (int n : {1, 2, 5, 17, 40}) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = gauss(rng);
        }
        const auto ours = jacobi_eigenvalues(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, Eigen::EigenvaluesOnly);
        std::vector<double> theirs(ref.eigenvalues().data(), ref.eigenvalues().data() + n);
        std::sort(theirs.rbegin(), theirs.rend());
        for (int i = 0; i < n; ++i) CHECK(ours[i] == doctest::Approx(theirs[i]).epsilon(1e-10).scale(1));
    }
}

TEST_CASE("srg_detect on lattices, and negative cases") {
    for (std::int64_t n = 3; n <= 12; ++n) {
        const auto g = gen_named({Family::Lattice, n});
        CHECK(srg_detect(g) == std::optional(SrgParams{n * n, 2 * n - 2, n - 2, 2}));
    }
    CHECK(srg_detect(gen_named({Family::Lattice, 3})) == std::optional(SrgParams{9, 4, 1, 2}));
    CHECK(srg_detect(gen_named({Family::Petersen})) == std::optional(SrgParams{10, 3, 0, 1}));
    CHECK_FALSE(srg_detect(gen_named({Family::Cycle, 6})));
    CHECK_FALSE(srg_detect(gen_named({Family::Complete, 5})));
    CHECK_FALSE(srg_detect(Graph(5)));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_graph(rng, 8, 0.5);
        const auto brute = brute_srg(g);
        const bool trivial = brute && (brute->k == 0 || brute->k == 7);
        if (!trivial) CHECK(srg_detect(g) == brute);
    }
}

TEST_CASE("bipartite, regularity, isospectrality") {
    CHECK(is_bipartite(gen_named({Family::Crown, 4})));
    CHECK_FALSE(is_bipartite(gen_named({Family::Cycle, 5})));
    CHECK(is_isospectral(gen_named({Family::Shrikhande}), line_graph(gen_named({Family::CompleteBipartite, 4, 4}))));
    CHECK(gen_named({Family::Shrikhande}) != line_graph(gen_named({Family::CompleteBipartite, 4, 4})));
    const auto q3 = gen_named({Family::Q3});
    CHECK_FALSE(is_isospectral(q3, complement(q3)));
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(regularity(path));
}

TEST_CASE("closed forms agree with numeric spectra for named families") {
    std::vector<NamedGraph> specs;
    for (std::int64_t t = 2; t <= 12; ++t) specs.push_back({Family::Crown, t});
    for (std::int64_t n = 3; n <= 16; ++n) specs.push_back({Family::Cycle, n});
    for (std::int64_t n = 1; n <= 8; ++n) specs.push_back({Family::Complete, n});
    for (std::int64_t a = 1; a <= 5; ++a) specs.push_back({Family::CompleteBipartite, a, a});
    specs.push_back({Family::CompleteBipartite, 2, 5});
    for (std::int64_t a = 2; a <= 5; ++a) specs.push_back({Family::CompleteMultipartite, a, 3});
    for (std::int64_t n = 2; n <= 8; ++n) specs.push_back({Family::Lattice, n});
    for (std::int64_t n = 4; n <= 10; ++n) specs.push_back({Family::Triangular, n});
    for (std::int64_t d = 1; d <= 6; ++d) specs.push_back({Family::Hypercube, d});
    for (std::int64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49}) specs.push_back({Family::Paley, q});
    specs.push_back({Family::Petersen});
    specs.push_back({Family::Shrikhande});
    specs.push_back({Family::Q3});
    specs.push_back({Family::K3PrismK2});
    for (const auto& spec : specs) {
        INFO(family_name(spec.family), " ", spec.a, " ", spec.b);
        const auto g = gen_named(spec);
        CHECK(spectra_match(named_spectrum(spec), numeric_spectrum(g), 1e-7));
        if (spec.family == Family::Crown && spec.a >= 3) CHECK(is_bipartite(g));
    }
}

TEST_CASE("catalog graphs match their spectra") {
    for (const auto& entry : integral_cubic_graphs()) {
        if (!entry.build) continue;
        INFO(entry.name);
        const auto g = entry.build();
        CHECK(g.n() == static_cast<std::size_t>(entry.n));
        CHECK(regularity(g) == std::optional<std::size_t>(3));
        CHECK(spectra_match(entry.spectrum, numeric_spectrum(g), 1e-7));
    }
    for (const auto& entry : distance_regular_cubic_graphs()) {
        if (!entry.build) continue;
        INFO(entry.name);
        const auto g = entry.build();
        CHECK(g.n() == static_cast<std::size_t>(entry.n));
        CHECK(spectra_match(entry.spectrum, numeric_spectrum(g), 1e-7));
    }
}

TEST_CASE("finite fields") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 343, 512, 625, 729, 1024}) {
        INFO(q);
        const FiniteField f(q);
        CHECK(f.order() == q);
        CHECK(is_primitive_polynomial(f.characteristic(), f.modulus()));
        // generator order is q - 1
        std::uint64_t order = 1;
        auto x = f.generator();
        while (x != 1) {
            x = f.mul(x, f.generator());
            ++order;
        }
        CHECK(order == q - 1);
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
        for (int i = 0; i < 200; ++i) {
            const auto a = pick(rng);
            const auto b = pick(rng);
            const auto c = pick(rng);
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
    // Conway polynomials: F_4 = x^2+x+1, F_8 = x^3+x+1, F_9 = x^2+2x+2, F_16 = x^4+x+1
    CHECK(reference_modulus(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(reference_modulus(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(reference_modulus(3, 2) == std::vector<std::uint32_t>{2, 2, 1});
    CHECK(reference_modulus(2, 4) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK_FALSE(is_primitive_polynomial(2, {1, 1, 1, 1, 1}));  // x^4+x^3+x^2+x+1 has order 5
    CHECK(as_prime_power(1024)->p == 2);
    CHECK(as_prime_power(1024)->m == 10);
    CHECK_FALSE(as_prime_power(12));
    CHECK_FALSE(as_prime_power(1));
    CHECK_THROWS(FiniteField(6));
}
