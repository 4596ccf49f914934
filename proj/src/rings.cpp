#include "equigraph/rings.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "equigraph/finite_field.hpp"

namespace equigraph {

namespace {

constexpr int kMaxFactors = 24;

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + " '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("bad " + what + " '" + text + "'");
    return value;
}

// e_1 + e_3 + ... + e_{s-2} of y_j = 1/x_j.
double odd_reciprocal_sum(const std::vector<double>& x) {
    const std::size_t s = x.size();
    std::vector<double> e(s + 1, 0.0);
    e[0] = 1.0;
    for (double xj : x) {
        const double y = 1.0 / xj;
        for (std::size_t j = s; j >= 1; --j) e[j] += e[j - 1] * y;
    }
    double out = 0.0;
    for (std::size_t j = 1; j + 2 <= s; j += 2) out += e[j];
    return out;
}

bool field_product_condition(const std::vector<std::int64_t>& q) {
    RingProfile profile;
    for (auto qi : q) profile.factors.push_back({qi, 1});
    const auto sums = subset_sums(profile);
    return sums.S_e == sums.full_product;
}

void search_from(std::vector<std::int64_t>& prefix, std::size_t start, int s, const std::vector<std::int64_t>& pp,
                 std::int64_t q_max, std::vector<std::vector<std::int64_t>>& out) {
    constexpr double eps = 1e-9;
    const auto depth = prefix.size();
    if (static_cast<int>(depth) == s) {
        if (field_product_condition(prefix)) out.push_back(prefix);
        return;
    }
    for (std::size_t i = start; i < pp.size(); ++i) {
        prefix.push_back(pp[i]);
        std::vector<double> lo(s);
        std::vector<double> hi(s);
        for (int j = 0; j < s; ++j) {
            if (j <= static_cast<int>(depth)) {
                lo[j] = hi[j] = static_cast<double>(prefix[j] - 1);
            } else {
                lo[j] = static_cast<double>(pp[i] - 1);
                hi[j] = static_cast<double>(q_max - 1);
            }
        }
        // The sum decreases in every x_j.
        const double largest = odd_reciprocal_sum(lo);
        const double smallest = odd_reciprocal_sum(hi);
        if (largest < 1.0 - eps) {
            prefix.pop_back();
            break;
        }
        if (smallest <= 1.0 + eps) search_from(prefix, i, s, pp, q_max, out);
        prefix.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Profiles

void RingProfile::validate() const {
    if (factors.empty()) throw std::invalid_argument("ring profile needs at least one factor");
    if (static_cast<int>(factors.size()) > kMaxFactors) throw std::invalid_argument("ring profile has too many factors");
    for (const auto& f : factors) {
        const auto pq = f.q >= 2 ? as_prime_power(static_cast<std::uint64_t>(f.q)) : std::nullopt;
        if (!pq) throw std::invalid_argument("residue field size " + std::to_string(f.q) + " is not a prime power");
        std::int64_t m = f.m;
        if (m < 1) throw std::invalid_argument("maximal ideal size must be >= 1");
        while (m % pq->p == 0) m /= pq->p;
        if (m != 1) {
            throw std::invalid_argument("maximal ideal size " + std::to_string(f.m) + " is not a power of " +
                                        std::to_string(pq->p));
        }
    }
}

Integer RingProfile::order() const {
    Integer out = 1;
    for (const auto& f : factors) out *= Integer(f.q) * f.m;
    return out;
}

Integer RingProfile::units() const {
    Integer out = 1;
    for (const auto& f : factors) out *= Integer(f.m) * (f.q - 1);
    return out;
}

std::string RingProfile::str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(factors[i].q) + ":" + std::to_string(factors[i].m);
    }
    return out;
}

RingProfile RingProfile::parse(const std::string& text) {
    RingProfile out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.factors.push_back({parse_int(item, "residue field size"), 1});
        } else {
            out.factors.push_back(
                {parse_int(item.substr(0, colon), "residue field size"), parse_int(item.substr(colon + 1), "ideal size")});
        }
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Spectrum and sums

Spectrum unitary_spectrum(const RingProfile& profile) {
    profile.validate();
    const std::size_t s = profile.factors.size();
    const Integer units = profile.units();
    const Integer order = profile.order();
    if (order > Integer(std::numeric_limits<long long>::max() / 4)) throw std::invalid_argument("ring too large");
    std::map<Integer, Integer> mults;
    Integer nonzero = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        Integer pc = 1;
        int size = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if (mask >> j & 1u) {
                pc *= profile.factors[j].q - 1;
                ++size;
            }
        }
        const Integer lambda = (size % 2 == 0 ? 1 : -1) * (units / pc);
        mults[lambda] += pc;
        nonzero += pc;
    }
    const Integer zero = order - nonzero;
    std::vector<SpectrumEntry> entries;
    for (const auto& [lambda, mult] : mults) {
        entries.push_back({Surd(Rational(lambda)), mult.convert_to<long long>()});
    }
    if (zero > 0) entries.push_back({Surd(0), zero.convert_to<long long>()});
    return Spectrum(std::move(entries), Surd(Rational(units)));
}

SubsetSums subset_sums(const RingProfile& profile) {
    profile.validate();
    const std::size_t s = profile.factors.size();
    SubsetSums out;
    out.M = 1;
    out.full_product = 1;
    Integer prod_q = 1;
    for (const auto& f : profile.factors) {
        out.M *= f.m;
        out.full_product *= f.q - 1;
        prod_q *= f.q;
    }
    Integer total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        Integer pc = 1;
        std::size_t size = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if (mask >> j & 1u) {
                pc *= profile.factors[j].q - 1;
                ++size;
            }
        }
        total += pc;
        if (size == 0 || size == s) continue;
        if (size % 2 == 0) {
            out.S_e += pc;
        } else {
            out.S_o += pc;
        }
    }
    if (total != prod_q) throw std::logic_error("subset products do not sum to the product of q_i");
    return out;
}

RingEquienReport equien_check(const RingProfile& profile) {
    profile.validate();
    RingEquienReport out;
    const auto spectrum = unitary_spectrum(profile);
    out.spectral = check_equienergetic(spectrum, profile.units().convert_to<long long>(), false);
    out.route_delta = out.spectral.equal;
    const std::size_t s = profile.factors.size();
    if (s % 2 == 0) {
        out.route_closed = s == 2 && std::all_of(profile.factors.begin(), profile.factors.end(),
                                                 [](const auto& f) { return f.m == 1; });
    } else if (s == 1) {
        out.route_closed = profile.factors[0].m == profile.factors[0].q;
    } else {
        const auto sums = subset_sums(profile);
        out.route_closed = sums.M * sums.S_e + (sums.M - 1) * (1 + sums.S_o) == sums.full_product;
    }
    if (out.route_delta != out.route_closed) {
        throw std::logic_error("ring equienergy routes disagree for profile " + profile.str());
    }
    out.equal = out.route_delta;
    return out;
}

std::vector<std::int64_t> prime_powers_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= limit; ++q) {
        if (as_prime_power(static_cast<std::uint64_t>(q))) out.push_back(q);
    }
    return out;
}

std::vector<std::vector<std::int64_t>> search_field_products(int s, std::int64_t q_max, unsigned jobs) {
    if (s < 3 || s % 2 == 0 || s > 7) throw std::invalid_argument("search_field_products needs odd 3 <= s <= 7");
    if (q_max < 2 || q_max > 512) throw std::invalid_argument("search_field_products needs 2 <= q_max <= 512");
    const auto pp = prime_powers_up_to(q_max);
    jobs = std::max(1u, jobs);
    std::vector<std::vector<std::vector<std::int64_t>>> shards(pp.size());
    auto work = [&](unsigned id) {
        for (std::size_t i = id; i < pp.size(); i += jobs) {
            std::vector<std::int64_t> prefix;
            // A one-element range: the first coordinate is fixed to pp[i].
            std::vector<std::int64_t> first(pp.begin() + static_cast<std::ptrdiff_t>(i), pp.end());
            std::vector<std::vector<std::int64_t>> found;
            prefix.push_back(pp[i]);
            std::vector<double> lo(s, static_cast<double>(pp[i] - 1));
            if (odd_reciprocal_sum(lo) < 1.0 - 1e-9) continue;
            search_from(prefix, 0, s, first, q_max, found);
            shards[i] = std::move(found);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(work, id);
        for (auto& t : threads) t.join();
    }
    std::vector<std::vector<std::int64_t>> out;
    for (auto& shard : shards) out.insert(out.end(), shard.begin(), shard.end());
    std::sort(out.begin(), out.end());
    for (const auto& tuple : out) {
        RingProfile profile;
        for (auto q : tuple) profile.factors.push_back({q, 1});
        if (!equien_check(profile).equal) throw std::logic_error("search result fails equien_check: " + profile.str());
    }
    return out;
}

SrgParams two_fields_srg(std::int64_t q) {
    if (q < 3 || !as_prime_power(static_cast<std::uint64_t>(q))) {
        throw std::invalid_argument("two_fields_srg needs a prime power q >= 3");
    }
    return {q * q, (q - 1) * (q - 1), (q - 2) * (q - 2), (q - 1) * (q - 2)};
}

std::vector<LocalProfile> local_profiles(std::int64_t max_order) {
    std::vector<LocalProfile> out;
    for (auto q : prime_powers_up_to(max_order)) {
        const auto p = static_cast<std::int64_t>(as_prime_power(static_cast<std::uint64_t>(q))->p);
        for (std::int64_t m = 1; q * m <= max_order; m *= p) out.push_back({q, m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RingProfile> enumerate_profiles(int s, std::int64_t max_order) {
    const auto locals = local_profiles(max_order);
    std::vector<RingProfile> out;
    std::vector<LocalProfile> current;
    auto rec = [&](auto&& self, std::size_t start, std::int64_t order) -> void {
        if (static_cast<int>(current.size()) == s) {
            out.push_back(RingProfile{current});
            return;
        }
        for (std::size_t i = start; i < locals.size(); ++i) {
            const auto size = locals[i].q * locals[i].m;
            if (order * size > max_order) continue;
            current.push_back(locals[i]);
            self(self, i, order * size);
            current.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace equigraph
