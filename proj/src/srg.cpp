#include "equigraph/srg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "equigraph/finite_field.hpp"

namespace equigraph {

namespace {

std::int64_t isqrt64(std::int64_t x) {
    if (x < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

bool is_nonneg_integer(const Rational& q) { return q >= 0 && denominator(q) == 1; }

std::int64_t to_i64(const Rational& q) { return numerator(q).convert_to<std::int64_t>(); }

// Feasible primitive tuple passing the equienergy condition, decided in
// 64-bit integer arithmetic. Conference tuples always pass.
bool quick_equien(std::int64_t n, std::int64_t k, std::int64_t e, std::int64_t d) {
    const std::int64_t diff = e - d;
    const std::int64_t alpha = diff * diff + 4 * (k - d);
    const std::int64_t root = isqrt64(alpha);
    if (root * root != alpha) {
        // Half case: needs 2k + (n-1)(e-d) = 0, i.e. conference parameters.
        return n == 4 * d + 1 && k == 2 * d && e == d - 1;
    }
    const std::int64_t num = 2 * k + (n - 1) * diff;
    if (num % root != 0) return false;
    const std::int64_t twice_mr = (n - 1) - num / root;
    if (twice_mr < 0 || twice_mr % 2 != 0 || twice_mr / 2 > n - 1) return false;
    return (n - 1) * (root - diff) == 2 * k * (root + 1);
}

void scan_n(std::int64_t n, std::vector<EnumeratedSrg>& out) {
    for (std::int64_t k = 1; k <= n - 2; ++k) {
        const std::int64_t kbar = n - k - 1;
        const std::int64_t step = k / std::gcd(k, kbar);
        for (std::int64_t d = step; d < k; d += step) {
            const std::int64_t e = k - 1 - d * kbar / k;
            if (e < 0) break;
            if (n - 2 * k + e < 1) continue;
            if (!quick_equien(n, k, e, d)) continue;
            const SrgParams p{n, k, e, d};
            if (!equien_condition(p)) throw std::logic_error("integer prefilter disagrees for " + p.str());
            out.push_back({p, classify(p)});
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Eigen-data

SrgEigenData eigen_data(const SrgParams& p) {
    const auto [n, k, e, d] = p;
    if (!(k > 0 && k < n - 1)) throw InfeasibleParams(p.str() + ": need 0 < k < n-1");
    if (!(e >= 0 && e < k && d >= 0 && d <= k)) throw InfeasibleParams(p.str() + ": need 0 <= e < k, 0 <= d <= k");
    if (Integer(k) * (k - e - 1) != Integer(d) * (n - k - 1)) {
        throw InfeasibleParams(p.str() + ": k(k-e-1) != d(n-k-1)");
    }
    SrgEigenData out;
    const Integer diff = e - d;
    out.alpha = diff * diff + 4 * Integer(k - d);
    if (out.alpha <= 0) throw InfeasibleParams(p.str() + ": alpha <= 0");
    const Integer num = 2 * Integer(k) + Integer(n - 1) * diff;
    if (!is_perfect_square(out.alpha)) {
        if (num != 0 || (n - 1) % 2 != 0) throw InfeasibleParams(p.str() + ": irrational eigenvalues with unequal multiplicities");
        out.conference = true;
        out.r = Surd::normalize(Rational(diff, 2), Rational(1, 2), out.alpha);
        out.s = Surd::normalize(Rational(diff, 2), Rational(-1, 2), out.alpha);
        out.m_r = Rational(n - 1, 2);
        out.m_s = out.m_r;
        return out;
    }
    const Integer root = isqrt(out.alpha);
    out.r = Surd(Rational(diff + root, 2));
    out.s = Surd(Rational(diff - root, 2));
    out.m_r = (Rational(n - 1) - Rational(num, root)) / 2;
    out.m_s = Rational(n - 1) - out.m_r;
    if (!is_nonneg_integer(out.m_r) || !is_nonneg_integer(out.m_s)) {
        throw InfeasibleParams(p.str() + ": multiplicities not nonnegative integers");
    }
    return out;
}

bool is_feasible(const SrgParams& p) {
    try {
        eigen_data(p);
        return true;
    } catch (const InfeasibleParams&) {
        return false;
    }
}

Spectrum srg_spectrum(const SrgParams& p) {
    const auto ed = eigen_data(p);
    std::vector<SpectrumEntry> entries = {{Surd(p.k), 1}};
    if (ed.m_r > 0) entries.push_back({ed.r, to_i64(ed.m_r)});
    if (ed.m_s > 0) entries.push_back({ed.s, to_i64(ed.m_s)});
    return Spectrum(std::move(entries), Surd(p.k));
}

SrgParams complement_params(const SrgParams& p) {
    const auto [n, k, e, d] = p;
    const SrgParams out{n, n - k - 1, n - 2 - 2 * k + d, n - 2 * k + e};
    if (out.k < 0 || out.e < 0 || out.d < 0) throw InfeasibleParams("complement of " + p.str() + " has a negative entry");
    eigen_data(out);
    return out;
}

bool is_primitive(const SrgParams& p) {
    if (!is_feasible(p)) return false;
    return p.d >= 1 && p.d < p.k && p.n - 2 * p.k + p.e >= 1;
}

bool is_conference(const SrgParams& p) {
    return p.d >= 1 && p.n == 4 * p.d + 1 && p.k == 2 * p.d && p.e == p.d - 1;
}

SrgParams oa_to_srg(std::int64_t n, std::int64_t m) {
    return {n * n, m * (n - 1), m * m - 3 * m + n, m * (m - 1)};
}

std::optional<OaParams> oa_params(const SrgParams& p) {
    const std::int64_t root = isqrt64(p.n);
    if (root < 2 || root * root != p.n) return std::nullopt;
    if (p.k % (root - 1) != 0) return std::nullopt;
    const std::int64_t m = p.k / (root - 1);
    if (m < 1) return std::nullopt;
    if (p.e != m * m - 3 * m + root || p.d != m * (m - 1)) return std::nullopt;
    return OaParams{root, m};
}

// ---------------------------------------------------------------------------
// Equienergy

EquienDetail equien_detail(const SrgParams& p) {
    const auto ed = eigen_data(p);
    EquienDetail out;
    const Surd root = Surd::normalize(0, 1, ed.alpha);
    const Surd rhs = Surd(2 * p.k) * (root + Surd(1)) / (root - Surd(p.e - p.d)) + Surd(1);
    out.formula = rhs == Surd(p.n);
    out.delta = discrepancy(srg_spectrum(p)).delta_total.exact;
    out.discrepancy = out.delta.compare_to(Rational(2 * p.k + 1 - p.n)) == 0;
    if (out.formula != out.discrepancy) {
        throw std::logic_error("equienergy routes disagree for " + p.str());
    }
    return out;
}

bool equien_condition(const SrgParams& p) { return equien_detail(p).formula; }

std::string describe(const EquienClass& c) {
    struct Visitor {
        std::string operator()(const NotEquien& x) const { return "NotEquien(" + x.reason + ")"; }
        std::string operator()(const Conference& x) const { return "Conference(d=" + std::to_string(x.d) + ")"; }
        std::string operator()(const CaseB& x) const {
            return "CaseB(h=" + std::to_string(x.h) + ",l=" + std::to_string(x.l) + ")";
        }
        std::string operator()(const CaseC& x) const {
            return "CaseC(h=" + std::to_string(x.h) + ",l=" + std::to_string(x.l) + ")";
        }
    };
    return std::visit(Visitor{}, c);
}

EquienClass classify(const SrgParams& p) {
    if (!is_primitive(p)) throw std::invalid_argument(p.str() + " is not primitive feasible");
    if (!equien_condition(p)) return NotEquien{"equienergy condition fails"};
    const std::int64_t diff = p.e - p.d;
    if (diff == -1 && p.k == 2 * p.d) return Conference{p.d};
    const auto ed = eigen_data(p);
    if (ed.conference) return NotEquien{"irrational eigenvalues without conference parameters"};
    const std::int64_t root = isqrt64(ed.alpha.convert_to<std::int64_t>());
    if (diff % 2 == 0) {
        const std::int64_t h = diff / 2;
        if (root % 2 != 0) return NotEquien{"e-d even but sqrt(alpha) odd"};
        const std::int64_t l = root / 2;
        if (p.n != 4 * l * l || p.k != (l - h) * (2 * l - 1) || p.d != (l - h) * (l - h - 1)) {
            return NotEquien{"case (b) forms do not match"};
        }
        if (l == h || l == -h || l == h + 1 || l == -(h + 1)) return NotEquien{"case (b) excluded l"};
        return CaseB{h, l};
    }
    const std::int64_t h = (diff + 1) / 2;
    if (root % 2 == 0) return NotEquien{"e-d odd but sqrt(alpha) even"};
    const std::int64_t l = (root - 1) / 2;
    if (p.n != (2 * l + 1) * (2 * l + 1) || p.k != 2 * l * (l - h + 1) || p.d != (l - h) * (l - h + 1)) {
        return NotEquien{"case (c) forms do not match"};
    }
    if (h == 0 || l == h || l == -h || l == -(h + 1) || l == h - 1) return NotEquien{"case (c) excluded l"};
    return CaseC{h, l};
}

SrgParams family_params(const EquienClass& c) {
    SrgParams p;
    if (const auto* x = std::get_if<Conference>(&c)) {
        if (x->d < 1) throw std::invalid_argument("conference class needs d >= 1");
        p = {4 * x->d + 1, 2 * x->d, x->d - 1, x->d};
    } else if (const auto* x = std::get_if<CaseB>(&c)) {
        const auto h = x->h;
        const auto l = x->l;
        if (l < 1 || l == h || l == -h || l == h + 1 || l == -(h + 1)) throw std::invalid_argument("case (b) excluded l");
        const auto d = (l - h) * (l - h - 1);
        p = {4 * l * l, (l - h) * (2 * l - 1), d + 2 * h, d};
    } else if (const auto* x = std::get_if<CaseC>(&c)) {
        const auto h = x->h;
        const auto l = x->l;
        if (h == 0) throw std::invalid_argument("case (c) needs h != 0");
        if (l < 1 || l == h || l == -h || l == -(h + 1) || l == h - 1) throw std::invalid_argument("case (c) excluded l");
        const auto d = (l - h) * (l - h + 1);
        p = {(2 * l + 1) * (2 * l + 1), 2 * l * (l - h + 1), d + 2 * h - 1, d};
    } else {
        throw std::invalid_argument("NotEquien has no parameters");
    }
    if (!is_primitive(p)) throw std::invalid_argument(describe(c) + " gives " + p.str() + ", not primitive feasible");
    return p;
}

ExactValue class_energy(const EquienClass& c) {
    if (const auto* x = std::get_if<Conference>(&c)) {
        return ExactValue(Surd::normalize(2 * x->d, 2 * x->d, 4 * x->d + 1));
    }
    if (const auto* x = std::get_if<CaseB>(&c)) {
        return ExactValue(Rational(2 * Integer(x->l - x->h) * (2 * x->l - 1) * (x->l + x->h + 1)));
    }
    if (const auto* x = std::get_if<CaseC>(&c)) {
        return ExactValue(Rational(4 * Integer(x->l) * (x->l - x->h + 1) * (x->l + x->h + 1)));
    }
    throw std::invalid_argument("NotEquien has no closed-form energy");
}

ExactValue energy_closed(const SrgParams& p) {
    const auto ed = eigen_data(p);
    return ExactValue(p.k) + ExactValue(abs(ed.r)) * ed.m_r + ExactValue(abs(ed.s)) * ed.m_s;
}

// ---------------------------------------------------------------------------
// Parameter families

std::optional<SrgParams> smith_params(std::int64_t r, std::int64_t s) {
    if (r <= 0 || s > -2) return std::nullopt;
    const Rational R(r);
    const Rational S(s);
    const Rational rs = R - S;
    const Rational den_v = rs * rs - R * R * (R + 1) * (R + 1);
    const Rational den = rs + R * (R + 1);
    if (den_v == 0 || den == 0) return std::nullopt;
    const Rational v = 2 * rs * rs * ((2 * R + 1) * rs - 3 * R * (R + 1)) / den_v;
    const Rational k = -S * ((2 * R + 1) * rs - R * (R + 1)) / den;
    const Rational e = -R * (S + 1) * (rs - R * (R + 3)) / den;
    const Rational d = -S * (R + 1) * (rs - R * (R + 1)) / den;
    for (const auto* x : {&v, &k, &e, &d}) {
        if (denominator(*x) != 1) return std::nullopt;
    }
    if (v <= 0 || k <= 0 || e < 0 || d <= 0) return std::nullopt;
    return SrgParams{to_i64(v), to_i64(k), to_i64(e), to_i64(d)};
}

SrgParams negative_latin_square_params(std::int64_t n, std::int64_t m) {
    const SrgParams p{n * n, m * (n + 1), m * m + 3 * m - n, m * (m + 1)};
    if (n < 1 || m < 1 || p.e < 0) throw InfeasibleParams("NL_" + std::to_string(n) + "(" + std::to_string(m) + ") has a negative entry");
    eigen_data(p);
    return p;
}

SrgParams lattice_params(std::int64_t n) { return {n * n, 2 * n - 2, n - 2, 2}; }

SrgParams triangular_params(std::int64_t n) { return {n * (n - 1) / 2, 2 * n - 4, n - 2, 4}; }

SrgParams latin_square_params(std::int64_t m, std::int64_t n) {
    return {n * n, m * (n - 1), (m - 1) * (m - 2) + n - 2, m * (m - 1)};
}

std::optional<SrgParams> steiner_params(std::int64_t m, std::int64_t n) {
    const std::int64_t u = m * n + m - n;
    const std::int64_t num = u * (u - 1);
    if (m < 2 || num % (m * (m - 1)) != 0) return std::nullopt;
    return SrgParams{num / (m * (m - 1)), m * n, (m - 1) * (m - 1) + n - 1, m * m};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<EnumeratedSrg> enumerate_equien(std::int64_t n_max, unsigned jobs) {
    if (n_max > 1000000) throw std::invalid_argument("enumerate_equien: n_max must be <= 10^6");
    jobs = std::max(1u, jobs);
    std::vector<std::vector<EnumeratedSrg>> shards(jobs);
    auto work = [&](unsigned id) {
        for (std::int64_t n = 5 + id; n <= n_max; n += jobs) scan_n(n, shards[id]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(work, id);
        for (auto& t : threads) t.join();
    }
    std::vector<EnumeratedSrg> out;
    for (auto& shard : shards) out.insert(out.end(), shard.begin(), shard.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.params < y.params; });
    for (const auto& row : out) {
        if (std::holds_alternative<NotEquien>(row.cls)) {
            throw std::logic_error("enumeration produced an unclassified tuple " + row.params.str());
        }
        if (!std::holds_alternative<Conference>(row.cls) && !oa_params(row.params)) {
            throw std::logic_error("non-conference tuple without OA parameters " + row.params.str());
        }
    }
    return out;
}

ImprimitiveReport imprimitive_equien(std::int64_t a, std::int64_t m) {
    if (a < 2 || m < 2) throw std::invalid_argument("imprimitive_equien needs a, m >= 2");
    ImprimitiveReport out;
    out.energy = 2 * Integer(a - 1) * m;
    out.complement_energy = 2 * Integer(a) * (m - 1);
    out.equal = out.energy == out.complement_energy;
    return out;
}

GpSpectrum gp_spectrum(std::int64_t k, std::int64_t q) {
    const auto pp = q >= 2 ? as_prime_power(static_cast<std::uint64_t>(q)) : std::nullopt;
    if (!pp) throw std::invalid_argument("gp_spectrum needs a prime power q");
    GpSpectrum out;
    out.p = pp->p;
    out.m = pp->m;
    if (k < 2) throw std::invalid_argument("gp_spectrum needs k >= 2");
    if (out.m % 2 != 0) throw std::invalid_argument("gp_spectrum needs an even field degree");
    const std::int64_t half = out.m / 2;
    std::int64_t power = 1;
    for (std::int64_t j = 1; j <= half && out.t == 0; ++j) {
        power *= out.p;
        if ((power + 1) % k == 0) out.t = j;
    }
    if (out.t == 0 || half % out.t != 0) throw std::invalid_argument("(k, q) is not semiprimitive");
    std::int64_t sq = 1;
    for (std::int64_t j = 0; j < half; ++j) sq *= out.p;
    if (k == sq + 1) throw std::invalid_argument("gp_spectrum excludes k = sqrt(q) + 1");
    out.s = half / out.t;
    const std::int64_t sign = out.s % 2 == 1 ? 1 : -1;
    const std::int64_t degree = (q - 1) / k;
    const Rational l1(sign * (k - 1) * sq - 1, k);
    const Rational l2(-(sign * sq + 1), k);
    out.spectrum = Spectrum({{Surd(degree), 1}, {Surd(l1), degree}, {Surd(l2), (k - 1) * degree}}, Surd(degree));
    out.equienergetic = check_equienergetic(out.spectrum, degree, false).equal;
    return out;
}

}  // namespace equigraph
