#include <doctest.h>

#include <algorithm>
#include <set>

#include "equigraph/graph.hpp"
#include "equigraph/srg.hpp"

using namespace equigraph;

namespace {

bool trace_identities_hold(const SrgParams& p) {
    const auto ed = eigen_data(p);
    const Surd k(p.k);
    const Surd mr(ed.m_r);
    const Surd ms(ed.m_s);
    const Surd first = k + mr * ed.r + ms * ed.s;
    const Surd second = k * k + mr * ed.r * ed.r + ms * ed.s * ed.s;
    return first == Surd(0) && second == Surd(p.n * p.k) && ed.m_r + ed.m_s + 1 == p.n;
}

}  // namespace

TEST_CASE("eigen_data examples") {
    const auto clebsch = eigen_data({16, 6, 2, 2});
    CHECK(clebsch.alpha == 16);
    CHECK(clebsch.r == Surd(2));
    CHECK(clebsch.s == Surd(-2));
    CHECK(clebsch.m_r == 6);
    CHECK(clebsch.m_s == 9);
    CHECK_FALSE(clebsch.conference);

    const auto c5 = eigen_data({5, 2, 0, 1});
    CHECK(c5.alpha == 5);
    CHECK(c5.conference);
    CHECK(c5.r == Surd::normalize(Rational(-1, 2), Rational(1, 2), 5));
    CHECK(c5.m_r == 2);
    CHECK(c5.m_s == 2);

    const auto petersen = eigen_data({10, 3, 0, 1});
    CHECK(petersen.r == Surd(1));
    CHECK(petersen.s == Surd(-2));
    CHECK(petersen.m_r == 5);
    CHECK(petersen.m_s == 4);

    CHECK_THROWS_AS(eigen_data({10, 3, 1, 1}), InfeasibleParams);
    CHECK_THROWS_AS(eigen_data({5, 4, 3, 0}), InfeasibleParams);
    CHECK_FALSE(is_feasible({22, 7, 0, 3}));  // non-integral multiplicities
}

TEST_CASE("complement and primitivity") {
    CHECK(complement_params({16, 6, 2, 2}) == SrgParams{16, 9, 4, 6});
    CHECK(complement_params({10, 3, 0, 1}) == SrgParams{10, 6, 3, 4});
    CHECK(complement_params({9, 4, 1, 2}) == SrgParams{9, 4, 1, 2});
    CHECK(is_primitive({16, 6, 2, 2}));
    CHECK_FALSE(is_primitive({6, 4, 2, 4}));  // K_{3x2}
    CHECK(is_conference({5, 2, 0, 1}));
    CHECK(is_conference({25, 12, 5, 6}));
    CHECK_FALSE(is_conference({16, 6, 2, 2}));
}

TEST_CASE("orthogonal array parameters") {
    CHECK(oa_params({16, 6, 2, 2}) == OaParams{4, 2});
    CHECK(oa_params({4, 2, 0, 2}) == OaParams{2, 2});
    CHECK_FALSE(oa_params({10, 3, 0, 1}).has_value());
    CHECK(oa_params({25, 12, 5, 6}) == OaParams{5, 3});
    for (std::int64_t n = 2; n <= 20; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) CHECK(oa_params(oa_to_srg(n, m)) == OaParams{n, m});
    }
}

TEST_CASE("equien_condition examples") {
    CHECK(equien_condition({16, 6, 2, 2}));
    CHECK(equien_condition({16, 9, 4, 6}));
    CHECK(equien_condition({5, 2, 0, 1}));
    CHECK(equien_condition({9, 4, 1, 2}));
    CHECK_FALSE(equien_condition({10, 3, 0, 1}));
    CHECK_FALSE(equien_condition({15, 6, 1, 3}));
    const auto detail = equien_detail({16, 6, 2, 2});
    CHECK(detail.formula);
    CHECK(detail.discrepancy);
    CHECK(detail.delta == ExactValue(2 * 6 + 1 - 16));
}

TEST_CASE("classify examples") {
    CHECK(classify({16, 6, 2, 2}) == EquienClass{CaseB{0, 2}});
    CHECK(classify({25, 12, 5, 6}) == EquienClass{Conference{6}});
    CHECK(classify({5, 2, 0, 1}) == EquienClass{Conference{1}});
    CHECK(std::holds_alternative<NotEquien>(classify({10, 3, 0, 1})));
    CHECK(describe(EquienClass{CaseB{0, 2}}) == "CaseB(h=0,l=2)");
    CHECK(describe(EquienClass{Conference{6}}) == "Conference(d=6)");
}

TEST_CASE("family_params") {
    CHECK(family_params(CaseB{0, 2}) == SrgParams{16, 6, 2, 2});
    CHECK(family_params(Conference{1}) == SrgParams{5, 2, 0, 1});
    for (std::int64_t t = 2; t <= 20; ++t) {
        const auto p = family_params(CaseB{0, t});
        CHECK(p.n == 4 * t * t);
        CHECK(equien_condition(p));
    }
    CHECK_THROWS_AS(family_params(NotEquien{"x"}), std::invalid_argument);
    CHECK_THROWS_AS(family_params(Conference{0}), std::invalid_argument);
}

TEST_CASE("classify inverts family_params") {
    int hits = 0;
    for (std::int64_t h = -10; h <= 10; ++h) {
        for (std::int64_t l = 1; l <= 30; ++l) {
            for (const EquienClass& c : {EquienClass{CaseB{h, l}}, EquienClass{CaseC{h, l}}}) {
                SrgParams p;
                try {
                    p = family_params(c);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                ++hits;
                CHECK(classify(p) == c);
                CHECK(equien_condition(p));
                CHECK(energy_closed(p) == class_energy(c));
            }
        }
    }
    CHECK(hits > 100);
    for (std::int64_t d = 1; d <= 40; ++d) {
        const auto p = family_params(Conference{d});
        CHECK(classify(p) == EquienClass{Conference{d}});
        CHECK(energy_closed(p) == class_energy(Conference{d}));
    }
}

TEST_CASE("energy_closed") {
    CHECK(energy_closed({16, 6, 2, 2}) == ExactValue(36));
    CHECK(energy_closed({5, 2, 0, 1}) == ExactValue(Surd::normalize(2, 2, 5)));
    CHECK(energy_closed({9, 4, 1, 2}) == ExactValue(16));
    const auto paley9 = numeric_spectrum(gen_named({Family::Paley, 9, 0}));
    CHECK(energy(paley9).value() == doctest::Approx(16.0).epsilon(1e-7));
    CHECK(class_energy(CaseB{0, 2}) == ExactValue(36));
    CHECK(class_energy(Conference{1}) == ExactValue(Surd::normalize(2, 2, 5)));
}

TEST_CASE("negative Latin square parameters") {
    CHECK(negative_latin_square_params(4, 1) == SrgParams{16, 5, 0, 2});
    CHECK_THROWS_AS(negative_latin_square_params(9, 1), InfeasibleParams);
    for (std::int64_t n = 2; n <= 40; ++n) {
        for (std::int64_t m = 1; m < n; ++m) {
            SrgParams p;
            try {
                p = negative_latin_square_params(n, m);
            } catch (const InfeasibleParams&) {
                continue;
            }
            CHECK(oa_params(p).has_value() == (n == 2 * m + 1));
        }
    }
}

TEST_CASE("named parameter families") {
    CHECK(lattice_params(4) == SrgParams{16, 6, 2, 2});
    CHECK(triangular_params(5) == SrgParams{10, 6, 3, 4});
    CHECK(latin_square_params(3, 5) == oa_to_srg(5, 3));
    for (std::int64_t n = 3; n <= 15; ++n) CHECK(trace_identities_hold(lattice_params(n)));
    for (std::int64_t n = 5; n <= 15; ++n) CHECK(trace_identities_hold(triangular_params(n)));
    CHECK_FALSE(smith_params(2, -4).has_value());
}

TEST_CASE("imprimitive K_{a x m}") {
    const auto r33 = imprimitive_equien(3, 3);
    CHECK(r33.equal);
    CHECK(r33.energy == 12);
    CHECK(r33.complement_energy == 12);
    CHECK_FALSE(imprimitive_equien(2, 3).equal);
    const auto r22 = imprimitive_equien(2, 2);
    CHECK(r22.equal);
    CHECK(r22.energy == 4);
    for (std::int64_t a = 2; a <= 12; ++a) {
        for (std::int64_t m = 2; m <= 12; ++m) CHECK(imprimitive_equien(a, m).equal == (a == m));
    }
}

TEST_CASE("GP semiprimitive spectra") {
    const auto g64 = gp_spectrum(3, 64);
    CHECK(g64.p == 2);
    CHECK(g64.m == 6);
    CHECK(g64.t == 1);
    CHECK(g64.s == 3);
    CHECK(g64.spectrum == Spectrum::exact({{21, 1}, {5, 21}, {-3, 42}}));
    CHECK(g64.equienergetic);

    const auto g16 = gp_spectrum(3, 16);
    CHECK(g16.s == 2);
    CHECK(g16.spectrum == Spectrum::exact({{5, 1}, {1, 10}, {-3, 5}}));
    CHECK_FALSE(g16.equienergetic);

    CHECK_THROWS_AS(gp_spectrum(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(gp_spectrum(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(gp_spectrum(4, 13), std::invalid_argument);
}

TEST_CASE("GP closed form matches constructed graphs") {
    for (const auto& [k, q] : {std::pair{3, 16}, std::pair{3, 64}, std::pair{2, 9}, std::pair{5, 81}, std::pair{4, 49}}) {
        const auto gs = gp_spectrum(k, q);
        CHECK(isospectral(gs.spectrum, numeric_spectrum(gp_graph(k, q))));
    }
}

TEST_CASE("trace identities over feasible tuples") {
    int feasible = 0;
    for (std::int64_t n = 5; n <= 80; ++n) {
        for (std::int64_t k = 1; k < n - 1; ++k) {
            for (std::int64_t d = 1; d <= k; ++d) {
                if ((k * (k - 1) - d * (n - k - 1)) < 0) continue;
                for (std::int64_t e = 0; e < k; ++e) {
                    const SrgParams p{n, k, e, d};
                    if (!is_feasible(p)) continue;
                    ++feasible;
                    CHECK(trace_identities_hold(p));
                    if (n - 2 - 2 * k + d < 0) {
                        CHECK_THROWS_AS(complement_params(p), InfeasibleParams);
                    } else {
                        CHECK(complement_params(complement_params(p)) == p);
                    }
                }
            }
        }
    }
    CHECK(feasible > 50);
    for (const auto& row : enumerate_equien(400)) CHECK(trace_identities_hold(row.params));
}

TEST_CASE("primitive OA graphs with m outside {n, n+1} are equienergetic") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        for (std::int64_t m = 2; m <= n + 2; ++m) {
            if (m == n || m == n + 1) continue;
            const auto p = oa_to_srg(n, m);
            if (!is_primitive(p)) continue;
            CHECK(equien_condition(p));
            CHECK(oa_params(complement_params(p)) == OaParams{n, n + 1 - m});
            if (2 * m == n + 1) CHECK(complement_params(p).k == p.k);
        }
    }
}

TEST_CASE("enumeration") {
    const auto small = enumerate_equien(5);
    REQUIRE(small.size() == 1);
    CHECK(small[0].params == SrgParams{5, 2, 0, 1});

    const auto upto16 = enumerate_equien(16);
    std::set<SrgParams> tuples;
    for (const auto& row : upto16) tuples.insert(row.params);
    CHECK(tuples.count({16, 6, 2, 2}) == 1);
    CHECK(tuples.count({16, 9, 4, 6}) == 1);
    CHECK(tuples.count({9, 4, 1, 2}) == 1);
    CHECK(std::is_sorted(upto16.begin(), upto16.end(),
                         [](const auto& a, const auto& b) { return a.params < b.params; }));
    for (const auto& row : upto16) {
        CHECK(is_primitive(row.params));
        CHECK(equien_condition(row.params));
        CHECK(classify(row.params) == row.cls);
    }
    const auto serial = enumerate_equien(300, 1);
    const auto parallel = enumerate_equien(300, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].params == parallel[i].params);
}

TEST_CASE("Smith tuples are never OA tuples") {
    int found = 0;
    for (std::int64_t r = 1; r <= 30; ++r) {
        for (std::int64_t s = -40; s <= -2; ++s) {
            const auto p = smith_params(r, s);
            if (!p || !is_feasible(*p)) continue;
            ++found;
            CHECK_FALSE(oa_params(*p).has_value());
        }
    }
    CHECK(found > 0);
}
