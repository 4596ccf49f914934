#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equigraph/exact.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg_params.hpp"

namespace equigraph {

class InfeasibleParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SrgEigenData {
    Integer alpha;
    Surd r;
    Surd s;
    Rational m_r;
    Rational m_s;
    /// alpha is not a perfect square (half case).
    bool conference = false;
};

/// Exact eigenvalues and multiplicities. Throws InfeasibleParams unless
/// 0 < k < n-1, 0 <= e < k, 0 <= d <= k, k(k-e-1) = d(n-k-1) and the
/// multiplicities are nonnegative integers.
SrgEigenData eigen_data(const SrgParams& p);
bool is_feasible(const SrgParams& p);

/// {k^1, r^m_r, s^m_s} with k as principal.
Spectrum srg_spectrum(const SrgParams& p);

SrgParams complement_params(const SrgParams& p);
/// Both the graph and its complement connected: d >= 1, d < k and the
/// complement's d >= 1.
bool is_primitive(const SrgParams& p);
bool is_conference(const SrgParams& p);

struct OaParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    friend bool operator==(const OaParams&, const OaParams&) = default;
};

/// srg(n^2, m(n-1), m^2-3m+n, m(m-1)).
SrgParams oa_to_srg(std::int64_t n, std::int64_t m);
std::optional<OaParams> oa_params(const SrgParams& p);

/// Result of both equienergy routes for a feasible tuple.
struct EquienDetail {
    bool formula = false;
    bool discrepancy = false;
    /// Delta over Sp', exact.
    ExactValue delta;
};

/// n = 2k(sqrt(alpha)+1)/(sqrt(alpha)-(e-d)) + 1 evaluated exactly and
/// cross-checked against Delta = 2k+1-n. Throws std::logic_error when the
/// routes disagree.
EquienDetail equien_detail(const SrgParams& p);
bool equien_condition(const SrgParams& p);

struct NotEquien {
    std::string reason;
    friend bool operator==(const NotEquien&, const NotEquien&) = default;
};
struct Conference {
    std::int64_t d = 0;
    friend bool operator==(const Conference&, const Conference&) = default;
};
struct CaseB {
    std::int64_t h = 0;
    std::int64_t l = 0;
    friend bool operator==(const CaseB&, const CaseB&) = default;
};
struct CaseC {
    std::int64_t h = 0;
    std::int64_t l = 0;
    friend bool operator==(const CaseC&, const CaseC&) = default;
};

using EquienClass = std::variant<NotEquien, Conference, CaseB, CaseC>;

std::string describe(const EquienClass& c);
EquienClass classify(const SrgParams& p);
/// Throws std::invalid_argument outside the class constraints or when the
/// tuple is not primitive-feasible.
SrgParams family_params(const EquienClass& c);
/// Closed-form energy of a class: 2d(1+sqrt(4d+1)), 2(l-h)(2l-1)(l+h+1) or
/// 4l(l-h+1)(l+h+1).
ExactValue class_energy(const EquienClass& c);

/// k + m_r r + m_s |s|.
ExactValue energy_closed(const SrgParams& p);

std::optional<SrgParams> smith_params(std::int64_t r, std::int64_t s);
/// srg(n^2, m(n+1), m^2+3m-n, m(m+1)); throws InfeasibleParams when an entry
/// is negative or the tuple is infeasible.
SrgParams negative_latin_square_params(std::int64_t n, std::int64_t m);

SrgParams lattice_params(std::int64_t n);
SrgParams triangular_params(std::int64_t n);
SrgParams latin_square_params(std::int64_t m, std::int64_t n);
/// Block graph of a Steiner system S(2, m, mn+m-n); none when v is not integral.
std::optional<SrgParams> steiner_params(std::int64_t m, std::int64_t n);

struct EnumeratedSrg {
    SrgParams params;
    EquienClass cls;
};

/// All primitive feasible tuples with n <= n_max satisfying the equienergy
/// condition, sorted by (n, k, e, d). `jobs` worker threads shard the n range.
std::vector<EnumeratedSrg> enumerate_equien(std::int64_t n_max, unsigned jobs = 1);

struct ImprimitiveReport {
    bool equal = false;
    Integer energy;
    Integer complement_energy;
};

/// K_{a x m} against its complement aK_m.
ImprimitiveReport imprimitive_equien(std::int64_t a, std::int64_t m);

struct GpSpectrum {
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t s = 0;
    Spectrum spectrum;
    bool equienergetic = false;
};

/// Closed-form spectrum of the semiprimitive GP-graph Gamma(k, q). p, m and
/// t are derived from q and k. Throws std::invalid_argument when (k, q) is
/// not semiprimitive.
GpSpectrum gp_spectrum(std::int64_t k, std::int64_t q);

}  // namespace equigraph
