#include "equigraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace equigraph {

namespace {

constexpr double kApproxMerge = 1e-9;

// Exact-aware ordering for sorting: by value, exact before approx on ties.
bool descending(const SpectrumEntry& x, const SpectrumEntry& y) {
    const auto* ex = std::get_if<Surd>(&x.eig);
    const auto* ey = std::get_if<Surd>(&y.eig);
    if (ex && ey) return compare(*ex, *ey) > 0;
    const double vx = to_double(x.eig);
    const double vy = to_double(y.eig);
    if (vx != vy) return vx > vy;
    return ex != nullptr && ey == nullptr;
}

bool same_value(const Eig& x, const Eig& y) {
    const auto* ex = std::get_if<Surd>(&x);
    const auto* ey = std::get_if<Surd>(&y);
    if (ex && ey) return *ex == *ey;
    if (!ex && !ey) return std::abs(to_double(x) - to_double(y)) <= kApproxMerge;
    return false;
}

bool contains(const Eig& entry, const Eig& value) {
    if (same_value(entry, value)) return true;
    if (const auto* a = std::get_if<Approx>(&entry)) {
        const double v = to_double(value);
        return v >= a->lo() - kApproxMerge && v <= a->hi() + kApproxMerge;
    }
    if (const auto* a = std::get_if<Approx>(&value)) {
        const double v = to_double(entry);
        return v >= a->lo() - kApproxMerge && v <= a->hi() + kApproxMerge;
    }
    return false;
}

Eig negate(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) return -*s;
    auto a = std::get<Approx>(x);
    a.value = -a.value;
    return a;
}

Eig minus_one_minus(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) return Surd(-1) - *s;
    auto a = std::get<Approx>(x);
    a.value = -1.0 - a.value;
    return a;
}

enum class Region { AtMostMinusOne, Gap, Zero, Unit, AtLeastOne };

// Locates an eigenvalue relative to the branch points -1, 0, 1.
Region region_of(const Eig& x, const DecisionOptions& options) {
    if (const auto* s = std::get_if<Surd>(&x)) {
        if (compare(*s, Surd(-1)) <= 0) return Region::AtMostMinusOne;
        const int sg = s->sign();
        if (sg < 0) return Region::Gap;
        if (sg == 0) return Region::Zero;
        return compare(*s, Surd(1)) < 0 ? Region::Unit : Region::AtLeastOne;
    }
    const auto& a = std::get<Approx>(x);
    auto straddles = [&](double p) { return a.lo() < p && a.hi() > p; };
    for (double p : {-1.0, 0.0}) {
        if (straddles(p) && !options.assume_exact) throw UncertifiableBranch(a, p);
    }
    const double v = a.value;
    if (options.assume_exact) {
        if (std::abs(v) <= a.radius) return Region::Zero;
        if (std::abs(v + 1.0) <= a.radius) return Region::AtMostMinusOne;
    }
    if (a.hi() <= -1.0 || v <= -1.0) return Region::AtMostMinusOne;
    if (v < 0.0) return Region::Gap;
    if (v == 0.0 && a.radius == 0.0) return Region::Zero;
    return v < 1.0 ? Region::Unit : Region::AtLeastOne;
}

void add_scaled(Certified& target, const Eig& x, const Rational& factor) {
    if (const auto* s = std::get_if<Surd>(&x)) {
        target.exact += ExactValue(*s) * factor;
        return;
    }
    const auto& a = std::get<Approx>(x);
    const double f = factor.convert_to<double>();
    target.offset += f * a.value;
    target.radius += std::abs(f) * a.radius;
    target.approximate = true;
}

bool irrational_in_gap(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) {
        return !s->is_rational() && s->sign() < 0 && compare(*s, Surd(-1)) > 0;
    }
    const auto& a = std::get<Approx>(x);
    return a.known_irrational && a.lo() > -1.0 && a.hi() < 0.0;
}

// Sp': the entries with one copy of the principal eigenvalue removed.
std::vector<SpectrumEntry> reduced_entries(const Spectrum& s) {
    std::vector<SpectrumEntry> out;
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        auto entry = s.entries()[i];
        if (i == s.principal()) --entry.mult;
        if (entry.mult > 0) out.push_back(std::move(entry));
    }
    return out;
}

long long mult_of_negation(const Spectrum& s, const Eig& x) {
    const Eig neg = negate(x);
    for (const auto& e : s.entries()) {
        if (const auto* a = std::get_if<Approx>(&e.eig)) {
            if (std::abs(a->value - to_double(neg)) <= a->radius + kApproxMerge +
                                                           (is_exact(neg) ? 0.0 : std::get<Approx>(neg).radius)) {
                return e.mult;
            }
        } else if (same_value(e.eig, neg)) {
            return e.mult;
        }
    }
    return 0;
}

}  // namespace

double to_double(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) return s->to_double();
    return std::get<Approx>(x).value;
}

bool is_exact(const Eig& x) { return std::holds_alternative<Surd>(x); }

std::string describe(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) return s->str();
    const auto& a = std::get<Approx>(x);
    std::ostringstream os;
    os.precision(17);
    os << a.value << " +- " << a.radius;
    return os.str();
}

UncertifiableBranch::UncertifiableBranch(const Approx& v, double p)
    : std::runtime_error([&] {
          std::ostringstream os;
          os.precision(17);
          os << "eigenvalue interval [" << v.lo() << ", " << v.hi() << "] straddles branch point " << p;
          return os.str();
      }()),
      value(v),
      branch_point(p) {}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
    canonicalize(nullptr);
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, const Eig& principal_value)
    : entries_(std::move(entries)) {
    canonicalize(&principal_value);
}

Spectrum Spectrum::exact(const std::vector<std::pair<Surd, long long>>& entries) {
    std::vector<SpectrumEntry> out;
    out.reserve(entries.size());
    for (const auto& [value, mult] : entries) out.push_back({value, mult});
    return Spectrum(std::move(out));
}

void Spectrum::canonicalize(const Eig* principal_value) {
    for (const auto& e : entries_) {
        if (e.mult <= 0) throw std::invalid_argument("spectrum multiplicities must be positive");
        if (const auto* a = std::get_if<Approx>(&e.eig); a && !(a->radius >= 0.0)) {
            throw std::invalid_argument("approximate eigenvalue radius must be nonnegative");
        }
    }
    std::stable_sort(entries_.begin(), entries_.end(), descending);
    std::vector<SpectrumEntry> merged;
    for (auto& e : entries_) {
        if (!merged.empty() && same_value(merged.back().eig, e.eig)) {
            merged.back().mult += e.mult;
            if (auto* a = std::get_if<Approx>(&merged.back().eig)) {
                a->radius = std::max(a->radius, std::get<Approx>(e.eig).radius);
            }
        } else {
            merged.push_back(std::move(e));
        }
    }
    entries_ = std::move(merged);
    n_ = 0;
    for (const auto& e : entries_) n_ += e.mult;
    principal_ = 0;
    if (principal_value != nullptr) {
        bool found = false;
        for (std::size_t i = 0; i < entries_.size() && !found; ++i) {
            if (same_value(entries_[i].eig, *principal_value)) {
                principal_ = i;
                found = true;
            }
        }
        for (std::size_t i = 0; i < entries_.size() && !found; ++i) {
            if (contains(entries_[i].eig, *principal_value)) {
                principal_ = i;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("principal eigenvalue " + describe(*principal_value) +
                                                " not in spectrum");
    }
}

bool Spectrum::all_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return is_exact(e.eig); });
}

long long Spectrum::multiplicity(const Surd& value) const {
    for (const auto& e : entries_) {
        if (const auto* s = std::get_if<Surd>(&e.eig); s && *s == value) return e.mult;
    }
    return 0;
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.mult), to_double(e.eig));
    return out;
}

// ---------------------------------------------------------------------------
// Discrepancy machinery

std::string Certified::str() const {
    if (!approximate) return exact.str();
    std::ostringstream os;
    os.precision(15);
    os << value() << " +- " << radius;
    return os.str();
}

Certified delta_of(const Eig& x, const DecisionOptions& options) {
    Certified out;
    switch (region_of(x, options)) {
        case Region::AtMostMinusOne:
            out.exact = ExactValue(-1);
            break;
        case Region::Gap:
            out.exact = ExactValue(1);
            add_scaled(out, x, Rational(2));
            break;
        default:
            out.exact = ExactValue(1);
            break;
    }
    return out;
}

DiscrepancyBreakdown discrepancy(const Spectrum& s, const DecisionOptions& options) {
    if (s.entries().empty()) throw std::invalid_argument("empty spectrum");
    DiscrepancyBreakdown out;
    for (const auto& entry : reduced_entries(s)) {
        const Rational m(entry.mult);
        switch (region_of(entry.eig, options)) {
            case Region::AtMostMinusOne:
                out.sigma -= entry.mult;
                break;
            case Region::AtLeastOne:
                out.sigma += entry.mult;
                break;
            case Region::Zero:
                out.m0 += entry.mult;
                break;
            case Region::Unit:
                out.T += entry.mult;
                break;
            case Region::Gap:
                out.S.exact += ExactValue(m);
                add_scaled(out.S, entry.eig, Rational(2) * m);
                break;
        }
    }
    out.delta_total = out.S;
    out.delta_total.exact += ExactValue(out.sigma + out.T + out.m0);
    return out;
}

Certified energy(const Spectrum& s) {
    Certified out;
    for (const auto& entry : s.entries()) {
        if (const auto* x = std::get_if<Surd>(&entry.eig)) {
            out.exact += ExactValue(abs(*x)) * Rational(entry.mult);
        } else {
            const auto& a = std::get<Approx>(entry.eig);
            out.offset += static_cast<double>(entry.mult) * std::abs(a.value);
            out.radius += static_cast<double>(entry.mult) * a.radius;
            out.approximate = true;
        }
    }
    return out;
}

Spectrum complement_spectrum(const Spectrum& s, long long k, bool loops) {
    std::vector<SpectrumEntry> out;
    for (const auto& entry : reduced_entries(s)) {
        out.push_back({loops ? negate(entry.eig) : minus_one_minus(entry.eig), entry.mult});
    }
    const Surd principal(loops ? s.n() - k : s.n() - k - 1);
    out.push_back({principal, 1});
    return Spectrum(std::move(out), principal);
}

EquienergyReport check_equienergetic(const Spectrum& s, long long k, bool loops,
                                     const DecisionOptions& options) {
    EquienergyReport report;
    report.energy = energy(s);
    report.complement_energy = energy(complement_spectrum(s, k, loops));
    const long long n = s.n();
    for (const auto& entry : reduced_entries(s)) {
        if (irrational_in_gap(entry.eig)) report.irrational_in_gap = true;
    }
    if (loops) {
        report.equal = (n == 2 * k);
    } else {
        report.delta = discrepancy(s, options);
        const Rational target(2 * k + 1 - n);
        const auto& d = report.delta.delta_total;
        if (!d.approximate) {
            report.equal = d.exact.compare_to(target) == 0;
        } else {
            const double gap = std::abs(d.value() - target.convert_to<double>());
            if (gap > d.radius + 1e-12 || report.irrational_in_gap) {
                report.equal = false;
            } else if (options.assume_exact) {
                report.equal = true;
            } else {
                throw UncertifiableBranch(Approx{d.value(), d.radius}, target.convert_to<double>());
            }
        }
    }
    // Second route: compare the two energies directly.
    const auto& e1 = report.energy;
    const auto& e2 = report.complement_energy;
    if (!e1.approximate && !e2.approximate) {
        if ((e1.exact == e2.exact) != report.equal) {
            throw std::logic_error("equienergy routes disagree");
        }
    } else if (std::abs(e1.value() - e2.value()) > e1.radius + e2.radius + 1e-9 && report.equal) {
        throw std::logic_error("equienergy routes disagree");
    }
    return report;
}

SpectrumFlags classify_spectrum(const Spectrum& s) {
    SpectrumFlags flags;
    flags.integral = std::all_of(s.entries().begin(), s.entries().end(), [](const auto& e) {
        const auto* x = std::get_if<Surd>(&e.eig);
        return x != nullptr && x->is_integer();
    });
    flags.symmetric = true;
    flags.almost_symmetric = true;
    const Eig& top = s.principal_value();
    for (const auto& e : s.entries()) {
        const bool matched = mult_of_negation(s, e.eig) == e.mult;
        if (!matched) {
            flags.symmetric = false;
            if (!contains(e.eig, top) && !contains(negate(e.eig), top)) flags.almost_symmetric = false;
        }
    }
    return flags;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.entries().size() != b.entries().size()) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        const auto& x = a.entries()[i];
        const auto& y = b.entries()[i];
        if (x.mult != y.mult) return false;
        if (std::abs(to_double(x.eig) - to_double(y.eig)) > tol) return false;
    }
    return true;
}

bool isospectral(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.all_exact() && b.all_exact()) {
        if (a.entries().size() != b.entries().size()) return false;
        for (std::size_t i = 0; i < a.entries().size(); ++i) {
            if (a.entries()[i].mult != b.entries()[i].mult) return false;
            if (!(std::get<Surd>(a.entries()[i].eig) == std::get<Surd>(b.entries()[i].eig))) return false;
        }
        return true;
    }
    if (a.n() != b.n()) return false;
    const auto xa = a.expanded();
    const auto xb = b.expanded();
    for (std::size_t i = 0; i < xa.size(); ++i) {
        if (std::abs(xa[i] - xb[i]) > tol) return false;
    }
    return true;
}

}  // namespace equigraph
