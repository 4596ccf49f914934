#include "equigraph/finite_field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace equigraph {

namespace {

// Conway polynomials, coefficients low to high (monic).
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{11, 1}, {9, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 1}, {11, 1}},
        {{13, 2}, {2, 12, 1}},
        {{17, 1}, {14, 1}},
        {{17, 2}, {3, 16, 1}},
        {{19, 1}, {17, 1}},
        {{19, 2}, {2, 18, 1}},
        {{23, 1}, {18, 1}},
        {{23, 2}, {5, 21, 1}},
        {{29, 1}, {27, 1}},
        {{29, 2}, {2, 24, 1}},
        {{31, 1}, {28, 1}},
        {{31, 2}, {3, 29, 1}},
    };
    return table;
}

// Multiplies the residue (digits low to high) by x modulo the monic f.
void times_x(std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t m = r.size();
    const std::uint32_t top = r[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (top == 0) return;
    for (std::size_t i = 0; i < m; ++i) {
        r[i] = static_cast<std::uint32_t>((r[i] + static_cast<std::uint64_t>(p - f[i]) * top) % p);
    }
}

std::uint32_t to_index(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
    std::uint32_t idx = 0;
    for (std::size_t i = digits.size(); i-- > 0;) idx = idx * p + digits[i];
    return idx;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{static_cast<std::uint32_t>(q), 1};
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), m};
}

bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& f) {
    if (f.size() < 2 || f.back() != 1 || f.front() % p == 0) return false;
    const std::size_t m = f.size() - 1;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < m; ++i) q *= p;
    std::vector<std::uint32_t> r(m, 0);
    r[0] = 1;
    for (std::uint64_t i = 1; i < q; ++i) {
        times_x(r, f, p);
        if (to_index(r, p) == 1) return i == q - 1;
    }
    return false;
}

std::vector<std::uint32_t> reference_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p) || m == 0) throw std::invalid_argument("reference_modulus: bad field parameters");
    const auto& table = conway_table();
    if (auto it = table.find({p, m}); it != table.end()) return it->second;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<std::uint32_t> f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (is_primitive_polynomial(p, f)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

FiniteField::FiniteField(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    if (q > (1u << 24)) throw std::invalid_argument("field order too large");
    q_ = static_cast<std::uint32_t>(q);
    p_ = pp->p;
    m_ = pp->m;
    modulus_ = reference_modulus(p_, m_);
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    std::vector<std::uint32_t> r(m_, 0);
    r[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        const auto idx = to_index(r, p_);
        exp_[i] = idx;
        log_[idx] = i;
        times_x(r, modulus_, p_);
    }
    exp_[q_ - 1] = exp_[0];
}

FiniteField::Elem FiniteField::add(Elem x, Elem y) const {
    if (p_ == 2) return x ^ y;
    Elem out = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::neg(Elem x) const {
    if (p_ == 2) return x;
    Elem out = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem x, std::uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

std::vector<FiniteField::Elem> FiniteField::power_residues(std::uint32_t k) const {
    std::vector<bool> seen(q_, false);
    std::vector<Elem> out;
    for (Elem x = 1; x < q_; ++x) {
        const Elem y = pow(x, k);
        if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteField::Elem> FiniteField::nonzero() const {
    std::vector<Elem> out(q_ - 1);
    for (Elem x = 1; x < q_; ++x) out[x - 1] = x;
    return out;
}

}  // namespace equigraph
