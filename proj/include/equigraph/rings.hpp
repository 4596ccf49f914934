#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equigraph/exact.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg_params.hpp"

namespace equigraph {

/// Residue-field size q and maximal-ideal size m of a finite local ring.
struct LocalProfile {
    std::int64_t q = 0;
    std::int64_t m = 1;
    friend auto operator<=>(const LocalProfile&, const LocalProfile&) = default;
};

/// Artin profile of R = R_1 x ... x R_s.
struct RingProfile {
    std::vector<LocalProfile> factors;

    /// Throws std::invalid_argument unless every q_i is a prime power and
    /// every m_i a power of the same prime.
    void validate() const;
    Integer order() const;
    Integer units() const;

    std::string str() const;
    /// "q1:m1,q2:m2,..."
    static RingProfile parse(const std::string& text);

    friend bool operator==(const RingProfile&, const RingProfile&) = default;
};

Spectrum unitary_spectrum(const RingProfile& profile);

struct SubsetSums {
    Integer S_e;
    Integer S_o;
    Integer M;
    Integer full_product;
};

SubsetSums subset_sums(const RingProfile& profile);

struct RingEquienReport {
    bool equal = false;
    bool route_delta = false;
    bool route_closed = false;
    EquienergyReport spectral;
};

/// Throws std::logic_error when the two routes disagree.
RingEquienReport equien_check(const RingProfile& profile);

/// Nondecreasing prime-power tuples (q_1, ..., q_s) with q_i <= q_max such
/// that F_{q_1} x ... x F_{q_s} is complementary equienergetic.
std::vector<std::vector<std::int64_t>> search_field_products(int s, std::int64_t q_max, unsigned jobs = 1);

/// srg(q^2, (q-1)^2, (q-2)^2, (q-1)(q-2)).
SrgParams two_fields_srg(std::int64_t q);

/// Local profiles (q, m) with q*m <= max_order, sorted.
std::vector<LocalProfile> local_profiles(std::int64_t max_order);
/// Profiles with exactly s factors (as sorted multisets) and |R| <= max_order.
std::vector<RingProfile> enumerate_profiles(int s, std::int64_t max_order);

std::vector<std::int64_t> prime_powers_up_to(std::int64_t limit);

}  // namespace equigraph
