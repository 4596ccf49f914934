#include "equigraph/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace equigraph {

namespace {

int sign_of(const Rational& q) { return q.sign(); }

std::strong_ordering ordering_of(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// sign(p + q*sqrt(d)), d squarefree and > 1.
int sign_single(const Rational& p, const Rational& q, const Integer& d) {
    const int sp = sign_of(p);
    const int sq = sign_of(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const Rational lhs = p * p;
    const Rational rhs = q * q * Rational(d);
    if (lhs > rhs) return sp;
    if (lhs < rhs) return sq;
    return 0;
}

// sign(a + b1*sqrt(d1) + b2*sqrt(d2)) with d1 != d2, both squarefree > 1.
int sign_double(const Rational& a, const Rational& b1, const Integer& d1, const Rational& b2,
                const Integer& d2) {
    if (b1 == 0) return sign_single(a, b2, d2);
    if (b2 == 0) return sign_single(a, b1, d1);
    // sign of w = b1*sqrt(d1) + b2*sqrt(d2); equality of squares is impossible
    // for distinct squarefree radicands.
    int sw = 0;
    if (sign_of(b1) == sign_of(b2)) {
        sw = sign_of(b1);
    } else {
        sw = (b1 * b1 * Rational(d1) > b2 * b2 * Rational(d2)) ? sign_of(b1) : sign_of(b2);
    }
    const int sa = sign_of(a);
    if (sa == 0 || sa == sw) return sw;
    // a and w have opposite signs: compare a^2 with w^2.
    auto [f, core] = square_factor(d1 * d2);
    const Rational p = a * a - b1 * b1 * Rational(d1) - b2 * b2 * Rational(d2);
    const Rational q = Rational(-2) * b1 * b2 * Rational(f);
    const int diff = sign_single(p, q, core);
    return diff > 0 ? sa : sw;
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("bad integer: " + std::string(text));
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("bad integer: " + std::string(text));
        }
    }
    Integer value(std::string(text.substr(i)));
    return text[0] == '-' ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses "c" or "c*sqrt(D)".
std::pair<Rational, Integer> parse_term(std::string_view text) {
    text = trim(text);
    bool negative = false;
    if (!text.empty() && text.front() == '-' && text.substr(1).starts_with("sqrt(")) {
        negative = true;
        text.remove_prefix(1);
    }
    std::size_t open = std::string_view::npos;
    Rational coeff = 1;
    if (text.starts_with("sqrt(")) {
        open = 5;
    } else if (const auto star = text.find("*sqrt("); star != std::string_view::npos) {
        coeff = parse_rational(text.substr(0, star));
        open = star + 6;
    } else {
        return {parse_rational(text), Integer(1)};
    }
    if (text.back() != ')') throw std::invalid_argument("bad surd term: " + std::string(text));
    const auto inner = text.substr(open, text.size() - open - 1);
    return {negative ? Rational(-coeff) : coeff, parse_integer(trim(inner))};
}

// Splits "t1 + t2 - t3 ..." on binary " + " / " - " separators; a " - "
// separator negates the following term.
std::vector<std::pair<Rational, Integer>> parse_terms(std::string_view text) {
    std::vector<std::pair<Rational, Integer>> out;
    std::size_t start = 0;
    bool negate = false;
    while (true) {
        const auto plus = text.find(" + ", start);
        const auto minus = text.find(" - ", start);
        const auto pos = std::min(plus, minus);
        auto term = parse_term(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (negate) term.first = -term.first;
        out.push_back(std::move(term));
        if (pos == std::string_view::npos) break;
        negate = pos == minus;
        start = pos + 3;
    }
    return out;
}

}  // namespace

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    const Integer r = isqrt(n);
    return r * r == n;
}

std::pair<Integer, Integer> square_factor(const Integer& n) {
    if (n < 0) throw std::domain_error("square_factor of negative value");
    if (n < 2) return {Integer(1), n};
    Integer rest = n;
    Integer factor = 1;
    if (rest <= Integer(std::numeric_limits<std::uint64_t>::max())) {
        auto r = rest.convert_to<std::uint64_t>();
        std::uint64_t f = 1;
        for (std::uint64_t p = 2; p * p <= r; ++p) {
            while (r % (p * p) == 0) {
                r /= p * p;
                f *= p;
            }
        }
        return {Integer(f), Integer(r)};
    }
    for (Integer p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            factor *= p;
        }
    }
    return {factor, rest};
}

std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(trim(text.substr(0, slash)));
    const Integer den = parse_integer(trim(text.substr(slash + 1)));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Surd

Surd Surd::normalize(Rational a, Rational b, Integer D) {
    if (D < 0) throw std::domain_error("negative radicand");
    Surd out;
    if (D == 0 || b == 0) {
        out.a_ = std::move(a);
        return out;
    }
    auto [f, core] = square_factor(D);
    b *= Rational(f);
    if (core == 1) {
        out.a_ = a + b;
        return out;
    }
    out.a_ = std::move(a);
    out.b_ = std::move(b);
    out.d_ = std::move(core);
    return out;
}

bool Surd::is_integer() const {
    return is_rational() && boost::multiprecision::denominator(a_) == 1;
}

int Surd::sign() const {
    if (is_rational()) return sign_of(a_);
    return sign_single(a_, b_, d_);
}

double Surd::to_double() const {
    if (is_rational()) return a_.convert_to<double>();
    using Big = boost::multiprecision::cpp_bin_float_50;
    const Big v = Big(a_) + Big(b_) * boost::multiprecision::sqrt(Big(d_));
    return v.convert_to<double>();
}

Surd Surd::operator-() const {
    Surd out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

Surd operator+(const Surd& x, const Surd& y) {
    if (y.is_rational()) return Surd::normalize(x.a_ + y.a_, x.b_, x.d_);
    if (x.is_rational()) return Surd::normalize(x.a_ + y.a_, y.b_, y.d_);
    if (x.d_ != y.d_) throw std::domain_error("sum of surds with different radicands");
    return Surd::normalize(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
    if (y.is_rational()) return Surd::normalize(x.a_ * y.a_, x.b_ * y.a_, x.d_);
    if (x.is_rational()) return Surd::normalize(x.a_ * y.a_, x.a_ * y.b_, y.d_);
    if (x.d_ != y.d_) throw std::domain_error("product of surds with different radicands");
    return Surd::normalize(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_), x.a_ * y.b_ + x.b_ * y.a_,
                           x.d_);
}

Surd operator/(const Surd& x, const Surd& y) {
    if (y.sign() == 0) throw std::domain_error("division by zero surd");
    if (y.is_rational()) return Surd::normalize(x.a_ / y.a_, x.b_ / y.a_, x.d_);
    // multiply by the conjugate
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
    const Surd conj = Surd::normalize(y.a_ / norm, -y.b_ / norm, y.d_);
    return x * conj;
}

std::string Surd::str() const {
    if (is_rational()) return to_string(a_);
    return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + d_.str() + ")";
}

Surd Surd::parse(std::string_view text) {
    const auto parts = parse_terms(trim(text));
    Rational a = 0;
    Rational b = 0;
    Integer d = 1;
    bool have_radical = false;
    for (const auto& [coeff, radicand] : parts) {
        if (radicand == 1) {
            a += coeff;
        } else {
            if (have_radical && radicand != d) {
                throw std::invalid_argument("surd with two radicands: " + std::string(text));
            }
            have_radical = true;
            b += coeff;
            d = radicand;
        }
    }
    return normalize(a, b, d);
}

std::strong_ordering compare(const Surd& x, const Surd& y) {
    const Rational a = x.a() - y.a();
    if (x.is_rational() && y.is_rational()) return ordering_of(sign_of(a));
    if (y.is_rational()) return ordering_of(sign_single(a, x.b(), x.radicand()));
    if (x.is_rational()) return ordering_of(sign_single(a, -y.b(), y.radicand()));
    if (x.radicand() == y.radicand()) {
        return ordering_of(sign_single(a, x.b() - y.b(), x.radicand()));
    }
    return ordering_of(sign_double(a, x.b(), x.radicand(), -y.b(), y.radicand()));
}

Surd abs(const Surd& x) { return x.sign() < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// ExactValue

ExactValue::ExactValue(long long value) : ExactValue(Rational(value)) {}

ExactValue::ExactValue(const Rational& value) { add_term(Integer(1), value); }

ExactValue::ExactValue(const Surd& value) {
    add_term(Integer(1), value.a());
    if (!value.is_rational()) add_term(value.radicand(), value.b());
}

void ExactValue::add_term(const Integer& radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ExactValue::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational ExactValue::rational_part() const {
    auto it = terms_.find(Integer(1));
    return it == terms_.end() ? Rational(0) : it->second;
}

Surd ExactValue::as_surd() const {
    Rational a = rational_part();
    Rational b = 0;
    Integer d = 1;
    for (const auto& [radicand, coeff] : terms_) {
        if (radicand == 1) continue;
        if (b != 0) throw std::domain_error("value has more than one irrational term");
        b = coeff;
        d = radicand;
    }
    return Surd::normalize(a, b, d);
}

double ExactValue::to_double() const {
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big sum = 0;
    for (const auto& [radicand, coeff] : terms_) {
        sum += Big(coeff) * boost::multiprecision::sqrt(Big(radicand));
    }
    return sum.convert_to<double>();
}

ExactValue& ExactValue::operator+=(const ExactValue& other) {
    for (const auto& [radicand, coeff] : other.terms_) add_term(radicand, coeff);
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& other) {
    for (const auto& [radicand, coeff] : other.terms_) add_term(radicand, -coeff);
    return *this;
}

ExactValue& ExactValue::operator*=(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [radicand, coeff] : terms_) coeff *= factor;
    return *this;
}

std::strong_ordering ExactValue::compare_to(const Rational& threshold) const {
    const Rational a = rational_part() - threshold;
    std::vector<std::pair<Rational, Integer>> irr;
    for (const auto& [radicand, coeff] : terms_) {
        if (radicand != 1) irr.emplace_back(coeff, radicand);
    }
    if (irr.empty()) return ordering_of(sign_of(a));
    if (irr.size() == 1) return ordering_of(sign_single(a, irr[0].first, irr[0].second));
    if (irr.size() == 2) {
        return ordering_of(sign_double(a, irr[0].first, irr[0].second, irr[1].first, irr[1].second));
    }
    // Three or more radicands: the square roots are linearly independent over
    // Q, so the value is nonzero; 200 digits separate it from zero.
    using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    Big sum = Big(a);
    for (const auto& [coeff, radicand] : irr) {
        sum += Big(coeff) * boost::multiprecision::sqrt(Big(radicand));
    }
    return ordering_of(sum > 0 ? 1 : -1);
}

std::string ExactValue::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [radicand, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += to_string(coeff);
        if (radicand != 1) out += "*sqrt(" + radicand.str() + ")";
    }
    return out;
}

ExactValue ExactValue::parse(std::string_view text) {
    ExactValue out;
    for (const auto& [coeff, radicand] : parse_terms(trim(text))) {
        if (radicand < 0) throw std::invalid_argument("negative radicand");
        out += ExactValue(Surd::normalize(0, coeff, radicand));
    }
    return out;
}

ExactValue exact_sum(const std::vector<std::pair<Surd, Integer>>& values) {
    ExactValue total;
    for (const auto& [value, mult] : values) {
        if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
        total += ExactValue(value) * Rational(mult);
    }
    return total;
}

}  // namespace equigraph
