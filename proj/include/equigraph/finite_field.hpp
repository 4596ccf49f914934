#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace equigraph {

/// Factorization of a prime power q = p^m.
struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
};

std::optional<PrimePower> as_prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

/// The field F_{p^m} in a fixed polynomial basis.
///
/// Elements are indexed 0..q-1 by their coefficient vector read as base-p
/// digits (index = sum c_i p^i), so the additive group is Z_p^m with that
/// mixed-radix labeling. Multiplication goes through log/antilog tables over
/// the class of x, which is primitive for the chosen modulus.
class FiniteField {
public:
    using Elem = std::uint32_t;

    explicit FiniteField(std::uint64_t q);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    /// Monic modulus, coefficients low to high (size m+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const;
    Elem pow(Elem x, std::uint64_t e) const;
    Elem inv(Elem x) const;
    /// The class of x (a primitive element).
    Elem generator() const { return exp_[1]; }

    /// {x^k : x != 0}.
    std::vector<Elem> power_residues(std::uint32_t k) const;
    std::vector<Elem> nonzero() const;

private:
    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

/// Reference modulus for F_{p^m}: a tabulated Conway polynomial when
/// available, else the lexicographically first primitive polynomial.
std::vector<std::uint32_t> reference_modulus(std::uint32_t p, std::uint32_t m);

/// Whether the class of x generates the multiplicative group of Z_p[x]/(f).
bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& f);

}  // namespace equigraph
