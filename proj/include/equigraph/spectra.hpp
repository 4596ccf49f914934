#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "equigraph/exact.hpp"

namespace equigraph {

/// A real number known only to lie in [value - radius, value + radius].
struct Approx {
    double value = 0.0;
    double radius = 0.0;
    /// Set when the number is a root of an irreducible polynomial of degree
    /// >= 2 (curated data with a known minimal polynomial).
    bool known_irrational = false;

    double lo() const { return value - radius; }
    double hi() const { return value + radius; }
    friend bool operator==(const Approx&, const Approx&) = default;
};

/// An eigenvalue, either exact or certified to within a radius.
using Eig = std::variant<Surd, Approx>;

double to_double(const Eig& x);
bool is_exact(const Eig& x);
std::string describe(const Eig& x);

/// Raised when a decision depends on which side of -1 or 0 an approximate
/// eigenvalue lies and its interval does not settle it.
class UncertifiableBranch : public std::runtime_error {
public:
    UncertifiableBranch(const Approx& value, double branch_point);
    Approx value;
    double branch_point;
};

struct SpectrumEntry {
    Eig eig;
    long long mult = 0;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of eigenvalues sorted descending, exact entries first among
/// equal values. `principal` indexes the entry holding the degree k.
class Spectrum {
public:
    Spectrum() = default;
    /// Sorts and merges the entries; principal is located by value
    /// (`principal_value`) or defaults to the largest eigenvalue.
    explicit Spectrum(std::vector<SpectrumEntry> entries);
    Spectrum(std::vector<SpectrumEntry> entries, const Eig& principal_value);

    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    long long n() const { return n_; }
    std::size_t principal() const { return principal_; }
    const Eig& principal_value() const { return entries_.at(principal_).eig; }
    bool all_exact() const;

    /// Multiplicity of an exact eigenvalue (0 when absent).
    long long multiplicity(const Surd& value) const;

    /// Values expanded by multiplicity, descending.
    std::vector<double> expanded() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

    /// Convenience for exact spectra: {(value, mult), ...}.
    static Spectrum exact(const std::vector<std::pair<Surd, long long>>& entries);

private:
    void canonicalize(const Eig* principal_value);
    std::vector<SpectrumEntry> entries_;
    long long n_ = 0;
    std::size_t principal_ = 0;
};

/// A real quantity made of an exact part plus a floating offset with an
/// error radius. Exact when no approximate eigenvalue contributed.
struct Certified {
    ExactValue exact;
    double offset = 0.0;
    double radius = 0.0;
    bool approximate = false;

    double value() const { return exact.to_double() + offset; }
    std::string str() const;
};

struct DiscrepancyBreakdown {
    long long sigma = 0;
    long long T = 0;
    long long m0 = 0;
    Certified S;
    Certified delta_total;
};

struct DecisionOptions {
    /// Resolve straddling intervals by their center instead of raising.
    bool assume_exact = false;
};

/// delta(x) = |1 + x| - |x|.
Certified delta_of(const Eig& x, const DecisionOptions& options = {});

/// Spectral discrepancy over the spectrum minus one copy of the principal
/// eigenvalue, split into sigma + T + m(0) + S.
DiscrepancyBreakdown discrepancy(const Spectrum& s, const DecisionOptions& options = {});

Certified energy(const Spectrum& s);

/// Spectrum of the complement of a k-regular graph: J - A - I (loopless),
/// principal n - k - 1, others -1 - x; or J - A (with loops), principal
/// n - k, others -x.
Spectrum complement_spectrum(const Spectrum& s, long long k, bool loops);

struct EquienergyReport {
    bool equal = false;
    DiscrepancyBreakdown delta;
    Certified energy;
    Certified complement_energy;
    /// An irrational eigenvalue lies in (-1, 0), which rules out equality.
    bool irrational_in_gap = false;
};

EquienergyReport check_equienergetic(const Spectrum& s, long long k, bool loops,
                                     const DecisionOptions& options = {});

struct SpectrumFlags {
    bool integral = false;
    bool symmetric = false;
    bool almost_symmetric = false;
};

SpectrumFlags classify_spectrum(const Spectrum& s);

/// Entry-wise match: same number of entries, equal multiplicities, values
/// within `tol`.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

/// True when both spectra are exact and equal, or match within `tol`.
bool isospectral(const Spectrum& a, const Spectrum& b, double tol = 1e-7);

}  // namespace equigraph
