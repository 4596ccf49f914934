#include <doctest.h>

#include <random>

#include "equigraph/graph.hpp"
#include "equigraph/rings.hpp"
#include "equigraph/srg.hpp"

using namespace equigraph;

namespace {

RingProfile profile(std::initializer_list<LocalProfile> factors) { return RingProfile{factors}; }

LocalProfile to_profile(const LocalFactor& f) {
    const auto order = static_cast<std::int64_t>(f.order);
    if (f.kind == LocalFactor::Kind::Field) return {order, 1};
    std::int64_t prime = 2;
    while (order % prime != 0) ++prime;
    return {prime, order / prime};
}

}  // namespace

TEST_CASE("unitary spectrum examples") {
    CHECK(unitary_spectrum(profile({{5, 1}})) == Spectrum::exact({{4, 1}, {-1, 4}}));
    CHECK(unitary_spectrum(profile({{2, 2}})) == Spectrum::exact({{2, 1}, {0, 2}, {-2, 1}}));
    const auto two = unitary_spectrum(profile({{3, 1}, {4, 1}}));
    CHECK(two.n() == 12);
    CHECK(two == Spectrum::exact({{6, 1}, {-2, 3}, {-3, 2}, {1, 6}}));
    CHECK(isospectral(unitary_spectrum(profile({{4, 1}, {4, 1}})), srg_spectrum(two_fields_srg(4))));
}

TEST_CASE("profile text and validation") {
    const auto p = RingProfile::parse("3:1,5:1,5:1");
    CHECK(p == profile({{3, 1}, {5, 1}, {5, 1}}));
    CHECK(p.str() == "3:1,5:1,5:1");
    CHECK(p.order() == 75);
    CHECK(p.units() == 32);
    CHECK(RingProfile::parse("2:4").units() == 4);
    CHECK_THROWS(profile({{6, 1}}).validate());
    CHECK_THROWS(profile({{4, 3}}).validate());
    CHECK_THROWS(profile({{3, 0}}).validate());
    CHECK_THROWS(RingProfile::parse("3:"));
    CHECK_THROWS(RingProfile::parse("x"));
}

TEST_CASE("subset sums") {
    const auto sums = subset_sums(profile({{3, 1}, {5, 1}, {5, 1}}));
    CHECK(sums.S_o == 10);
    CHECK(sums.S_e == 32);
    CHECK(sums.full_product == 32);
    CHECK(sums.M == 1);
    CHECK(1 + sums.S_o + sums.S_e + sums.full_product == 75);
}

TEST_CASE("equien_check examples") {
    const auto f355 = equien_check(profile({{3, 1}, {5, 1}, {5, 1}}));
    CHECK(f355.equal);
    CHECK(f355.spectral.energy.exact == ExactValue(256));
    CHECK(equien_check(profile({{4, 1}, {4, 1}, {4, 1}})).equal);
    CHECK(equien_check(profile({{3, 1}, {4, 1}})).equal);
    CHECK(equien_check(profile({{3, 3}})).equal);
    CHECK_FALSE(equien_check(profile({{3, 1}})).equal);
    CHECK_FALSE(equien_check(profile({{3, 1}, {3, 3}})).equal);
    for (std::int64_t q : {2, 3, 4, 5, 7}) {
        CHECK_FALSE(equien_check(profile({{q, 1}, {q, 1}, {q, 1}, {q, 1}, {q, 1}})).equal);
    }
}

TEST_CASE("spectra conserve vertex count and have zero trace") {
    std::mt19937_64 rng(5);
    const auto locals = local_profiles(64);
    std::uniform_int_distribution<std::size_t> pick(0, locals.size() - 1);
    std::uniform_int_distribution<int> size(1, 6);
    for (int i = 0; i < 300; ++i) {
        RingProfile p;
        const int s = size(rng);
        for (int j = 0; j < s; ++j) p.factors.push_back(locals[pick(rng)]);
        const auto spec = unitary_spectrum(p);
        CHECK(Integer(spec.n()) == p.order());
        CHECK(exact_sum([&] {
                  std::vector<std::pair<Surd, Integer>> e;
                  for (const auto& x : spec.entries()) e.emplace_back(std::get<Surd>(x.eig), x.mult);
                  return e;
              }())
                  .is_zero());
        CHECK(spec.principal_value() == Eig(Surd(p.units())));
    }
}

TEST_CASE("closed spectrum agrees with constructed unitary Cayley graphs") {
    const std::vector<std::vector<LocalFactor>> cases = {
        {LocalFactor::parse("F4"), LocalFactor::parse("F3")},
        {LocalFactor::parse("Z9")},
        {LocalFactor::parse("Z4"), LocalFactor::parse("F5")},
        {LocalFactor::parse("F3"), LocalFactor::parse("F5"), LocalFactor::parse("F5")},
        {LocalFactor::parse("F8"), LocalFactor::parse("Z8")},
        {LocalFactor::parse("F2"), LocalFactor::parse("F3"), LocalFactor::parse("F4"), LocalFactor::parse("F5")},
    };
    for (const auto& factors : cases) {
        RingProfile p;
        for (const auto& f : factors) p.factors.push_back(to_profile(f));
        CHECK(isospectral(unitary_spectrum(p), numeric_spectrum(unitary_cayley_concrete(factors))));
    }
}

TEST_CASE("two fields give OA graphs") {
    CHECK(two_fields_srg(4) == SrgParams{16, 9, 4, 6});
    CHECK(oa_params(two_fields_srg(4)) == OaParams{4, 3});
    CHECK(two_fields_srg(3) == SrgParams{9, 4, 1, 2});
    for (std::int64_t q : prime_powers_up_to(40)) {
        if (q < 3) continue;
        const auto p = two_fields_srg(q);
        CHECK(equien_condition(p));
    }
}

TEST_CASE("field product search") {
    const auto small = search_field_products(3, 4);
    REQUIRE(small.size() == 1);
    CHECK(small[0] == std::vector<std::int64_t>{4, 4, 4});
    const auto serial = search_field_products(3, 64, 1);
    CHECK(serial == search_field_products(3, 64, 3));
    for (const auto& t : serial) {
        RingProfile p;
        for (auto q : t) p.factors.push_back({q, 1});
        CHECK(equien_check(p).equal);
    }
    CHECK_THROWS_AS(search_field_products(2, 10), std::invalid_argument);
}

TEST_CASE("profile enumeration") {
    for (const auto& lp : local_profiles(32)) {
        CHECK(lp.q * lp.m <= 32);
        CHECK_NOTHROW(RingProfile{{lp}}.validate());
    }
    const auto pairs = enumerate_profiles(2, 30);
    for (const auto& p : pairs) {
        CHECK(p.factors.size() == 2);
        CHECK(p.order() <= 30);
        CHECK(p.factors[0] <= p.factors[1]);
    }
    CHECK(prime_powers_up_to(10) == std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9});
}
