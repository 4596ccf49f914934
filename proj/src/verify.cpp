#include "equigraph/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "equigraph/catalog.hpp"
#include "equigraph/graph.hpp"
#include "equigraph/rings.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg.hpp"

namespace equigraph {

namespace {

Claim make(std::string id, std::string description, bool passed, std::string detail = "") {
    return {std::move(id), std::move(description), passed, std::move(detail)};
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 12) {
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
        if (i) out += "; ";
        out += items[i];
    }
    if (items.size() > limit) out += "; ... (" + std::to_string(items.size()) + " total)";
    return out;
}

std::string tuple_str(const std::vector<std::int64_t>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

std::string energy_pair(const EquienergyReport& r) {
    return "E=" + r.energy.str() + ", Ebar=" + r.complement_energy.str();
}

// Collects failing items of a sweep into one claim.
struct Sweep {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
    Claim claim(std::string id, std::string description) const {
        std::string detail = std::to_string(checked) + " checked";
        if (!failures.empty()) detail += ", failing: " + join(failures);
        return make(std::move(id), std::move(description), failures.empty() && checked > 0, detail);
    }
};

// ---------------------------------------------------------------------------

SuiteReport crowns() {
    SuiteReport out{"crowns", {}};
    for (std::int64_t t = 2; t <= 50; ++t) {
        const NamedGraph spec{Family::Crown, t};
        const auto s = named_spectrum(spec);
        const auto rep = check_equienergetic(s, t - 1, false);
        const auto comp = complement_spectrum(s, t - 1, false);
        const ExactValue target(4 * (t - 1));
        const bool energies = !rep.energy.approximate && !rep.complement_energy.approximate &&
                              rep.energy.exact == target && rep.complement_energy.exact == target;
        const bool noniso = !isospectral(s, comp);
        const bool nonbip = t < 3 || !is_bipartite(complement(gen_named(spec)));
        std::string detail = energy_pair(rep);
        if (!noniso) detail += ", isospectral";
        if (!nonbip) detail += ", complement bipartite";
        out.claims.push_back(make("crown-" + std::to_string(t),
                                  "Cr(" + std::to_string(t) + "): E = Ebar = 4(t-1), non-isospectral" +
                                      (t >= 3 ? ", complement non-bipartite" : ""),
                                  rep.equal && energies && noniso && nonbip, detail));
    }
    return out;
}

SuiteReport table1() {
    SuiteReport out{"table1", {}};
    const auto rows = integral_cubic_graphs();
    std::vector<std::string> equal_rows;
    for (const auto& entry : rows) {
        const auto rep = check_equienergetic(entry.spectrum, 3, false);
        const bool expected = entry.row == 2 || entry.row == 10;
        if (rep.equal) equal_rows.push_back(std::to_string(entry.row));
        const auto& d = rep.delta;
        // Integral spectra: Delta = m(0) + sigma; bipartite rows also Delta = m(0) - 1.
        bool lemma = d.S.exact.is_zero() && d.delta_total.exact == ExactValue(d.m0 + d.sigma);
        if (classify_spectrum(entry.spectrum).symmetric) lemma = lemma && d.delta_total.exact == ExactValue(d.m0 - 1);
        const std::string detail =
            energy_pair(rep) + ", Delta=" + d.delta_total.str() + ", 7-n=" + std::to_string(7 - entry.n);
        out.claims.push_back(make("row-" + std::to_string(entry.row),
                                  entry.name + (expected ? " is" : " is not") + " complementary equienergetic",
                                  rep.equal == expected && lemma, detail));
    }
    out.claims.push_back(make("equal-rows", "exactly rows 2 (Q3) and 10 (K3 x K2) are equienergetic",
                              equal_rows == std::vector<std::string>{"2", "10"}, "equal rows: " + join(equal_rows)));
    for (const auto& [row, value] : std::vector<std::pair<int, long long>>{{2, 12}, {10, 8}}) {
        const auto& entry = rows[static_cast<std::size_t>(row - 1)];
        const auto comp = complement_spectrum(entry.spectrum, 3, false);
        const auto e = energy(entry.spectrum);
        const auto ebar = energy(comp);
        const bool ok = e.exact == ExactValue(value) && ebar.exact == ExactValue(value) &&
                        !isospectral(entry.spectrum, comp);
        out.claims.push_back(make("pair-" + std::to_string(row),
                                  entry.name + ": E = Ebar = " + std::to_string(value) + ", non-isospectral", ok,
                                  "E=" + e.str() + ", Ebar=" + ebar.str()));
    }
    return out;
}

SuiteReport table2() {
    SuiteReport out{"table2", {}};
    std::map<std::string, bool> gap;
    for (const auto& entry : distance_regular_cubic_graphs()) {
        const auto rep = check_equienergetic(entry.spectrum, 3, false);
        gap[entry.name] = rep.irrational_in_gap;
        out.claims.push_back(make("row-" + std::to_string(entry.row), entry.name + " is not complementary equienergetic",
                                  !rep.equal,
                                  "Delta=" + rep.delta.delta_total.str() + ", 7-n=" + std::to_string(7 - entry.n)));
    }
    const bool remark = gap["Coxeter"] && gap["Biggs-Smith"];
    out.claims.push_back(make("gap-eigenvalue",
                              "Coxeter and Biggs-Smith have an irrational eigenvalue in (-1,0)", remark,
                              std::string("Coxeter: ") + (gap["Coxeter"] ? "yes" : "no") +
                                  ", Biggs-Smith: " + (gap["Biggs-Smith"] ? "yes" : "no") +
                                  " (certified by exact sign analysis / isolating intervals of radius <= 1e-10)"));
    return out;
}

SuiteReport table3() {
    SuiteReport out{"table3", {}};
    for (const auto& entry : ds_conference_sporadics()) {
        const auto cls = classify(entry.params);
        const auto rep = check_equienergetic(entry.spectrum, entry.params.k, false);
        const bool ok = is_conference(entry.params) && std::holds_alternative<Conference>(cls) && rep.equal &&
                        srg_spectrum(entry.params) == entry.spectrum &&
                        energy(entry.spectrum).exact == energy_closed(entry.params);
        out.claims.push_back(make(entry.params.str(), entry.name + " is a conference graph equienergetic with its complement",
                                  ok, describe(cls) + ", " + energy_pair(rep)));
    }
    return out;
}

SuiteReport table4() {
    SuiteReport out{"table4", {}};
    for (const auto& entry : ds_nonconference_sporadics()) {
        const auto& p = entry.params;
        const auto ed = eigen_data(p);
        const auto rep = check_equienergetic(entry.spectrum, p.k, false);
        const bool signs = ed.m_r - ed.m_s > 0 && 2 * p.k + 1 - p.n < 0;
        const bool delta = rep.delta.delta_total.exact == ExactValue(ed.m_r - ed.m_s);
        const bool ok = srg_spectrum(p) == entry.spectrum && !equien_condition(p) && !rep.equal && signs && delta;
        out.claims.push_back(make(p.str(), entry.name + ": m_r - m_s > 0, 2k+1-n < 0, not equienergetic", ok,
                                  "m_r-m_s=" + to_string(ed.m_r - ed.m_s) + ", 2k+1-n=" + std::to_string(2 * p.k + 1 - p.n)));
    }
    return out;
}

SuiteReport srg_families() {
    SuiteReport out{"srg-families", {}};
    Sweep lattice;
    for (std::int64_t n = 3; n <= 50; ++n) lattice.check(equien_condition(lattice_params(n)), lattice_params(n).str());
    out.claims.push_back(lattice.claim("lattice", "L2(n) passes for 3 <= n <= 50"));

    Sweep triangular;
    for (std::int64_t n = 5; n <= 50; ++n) {
        triangular.check(!equien_condition(triangular_params(n)), triangular_params(n).str());
    }
    out.claims.push_back(triangular.claim("triangular", "T(n) fails for 5 <= n <= 50"));

    Sweep steiner;
    for (std::int64_t m = 2; m <= 8; ++m) {
        for (std::int64_t n = 1; n <= 30; ++n) {
            const auto p = steiner_params(m, n);
            if (!p || !is_primitive(*p)) continue;
            steiner.check(!equien_condition(*p), p->str());
        }
    }
    out.claims.push_back(steiner.claim("steiner", "Steiner block-graph tuples fail (2 <= m <= 8, feasible n <= 30)"));

    Sweep latin;
    for (std::int64_t m = 2; m <= 10; ++m) {
        for (std::int64_t n = m + 2; n <= 40; ++n) {
            const auto p = latin_square_params(m, n);
            if (!is_primitive(p)) continue;
            latin.check(equien_condition(p), p.str());
        }
    }
    out.claims.push_back(latin.claim("latin-square", "LS_m(n) passes whenever primitive (2 <= m <= 10, m+2 <= n <= 40)"));

    Sweep moore;
    for (const auto& p : {SrgParams{10, 3, 0, 1}, SrgParams{50, 7, 0, 1}, SrgParams{3250, 57, 0, 1}}) {
        moore.check(!equien_condition(p), p.str());
    }
    out.claims.push_back(moore.claim("moore", "Moore tuples (10,3,0,1), (50,7,0,1), (3250,57,0,1) fail"));
    out.claims.push_back(make("pentagon", "the pentagon srg(5,2,0,1) passes", equien_condition({5, 2, 0, 1})));

    Sweep triangle_free;
    for (const auto& p : {SrgParams{16, 5, 0, 2}, SrgParams{56, 10, 0, 2}, SrgParams{77, 16, 0, 4},
                          SrgParams{100, 22, 0, 6}}) {
        triangle_free.check(!equien_condition(p), p.str());
    }
    out.claims.push_back(triangle_free.claim("triangle-free", "triangle-free sporadic tuples fail"));

    for (auto& c : table4().claims) {
        c.id = "ds-" + c.id;
        out.claims.push_back(std::move(c));
    }
    return out;
}

SuiteReport gp() {
    SuiteReport out{"gp", {}};
    const auto s64 = gp_spectrum(3, 64);
    const auto s16 = gp_spectrum(3, 16);
    out.claims.push_back(make("gp-3-64", "Gamma(3,64) is complementary equienergetic", s64.equienergetic,
                              "s=" + std::to_string(s64.s)));
    out.claims.push_back(make("gp-3-16", "Gamma(3,16) is not complementary equienergetic", !s16.equienergetic,
                              "s=" + std::to_string(s16.s)));
    const auto expected = Spectrum::exact({{21, 1}, {5, 21}, {-3, 42}});
    out.claims.push_back(make("gp-3-64-closed", "closed form for Gamma(3,64) is {21, 5^21, (-3)^42}",
                              s64.spectrum == expected));
    for (const auto& [k, q] : std::vector<std::pair<int, int>>{{3, 64}, {3, 16}}) {
        const auto closed = gp_spectrum(k, q).spectrum;
        const auto numeric = numeric_spectrum(gp_graph(k, q));
        out.claims.push_back(make("gp-numeric-" + std::to_string(k) + "-" + std::to_string(q),
                                  "numeric spectrum of Gamma(" + std::to_string(k) + "," + std::to_string(q) +
                                      ") matches the closed form within 1e-7",
                                  spectra_match(closed, numeric, 1e-7)));
    }
    Sweep parity;
    for (std::int64_t q : {4, 9, 16, 25, 49, 64, 81, 121, 169, 256, 289, 361, 529, 625, 729, 841, 961, 1024}) {
        for (std::int64_t k = 3; k < q; ++k) {
            GpSpectrum g;
            try {
                g = gp_spectrum(k, q);
            } catch (const std::invalid_argument&) {
                continue;
            }
            parity.check(g.equienergetic == (g.s % 2 == 1), "(" + std::to_string(k) + "," + std::to_string(q) + ")");
        }
    }
    out.claims.push_back(parity.claim("gp-parity", "semiprimitive GP-graphs with k > 2 are equienergetic iff s is odd (q <= 1024)"));
    return out;
}

SuiteReport energies() {
    SuiteReport out{"energies", {}};
    Sweep b;
    Sweep c;
    std::size_t skipped = 0;
    for (std::int64_t h = -5; h <= 5; ++h) {
        for (std::int64_t l = 1; l <= 20; ++l) {
            for (int which = 0; which < 2; ++which) {
                const EquienClass cls = which == 0 ? EquienClass(CaseB{h, l}) : EquienClass(CaseC{h, l});
                SrgParams p;
                try {
                    p = family_params(cls);
                } catch (const std::invalid_argument&) {
                    ++skipped;
                    continue;
                }
                const auto e = energy_closed(p);
                const Integer value = which == 0 ? 2 * Integer(l - h) * (2 * l - 1) * (l + h + 1)
                                                 : 4 * Integer(l) * (l - h + 1) * (l + h + 1);
                const bool ok = e == ExactValue(Rational(value)) && value % 4 == 0 && classify(p) == cls &&
                                equien_condition(p);
                (which == 0 ? b : c).check(ok, describe(cls) + " " + p.str() + " E=" + e.str());
            }
        }
    }
    out.claims.push_back(b.claim("case-b", "case (b) energy 2(l-h)(2l-1)(l+h+1), divisible by 4, h in [-5,5], l in [1,20]"));
    out.claims.push_back(c.claim("case-c", "case (c) energy 4l(l-h+1)(l+h+1), divisible by 4, h in [-5,5], l in [1,20]"));
    out.claims.back().detail += ", " + std::to_string(skipped) + " (h,l) pairs excluded or not primitive-feasible";
    Sweep conf;
    for (std::int64_t d = 1; d <= 100; ++d) {
        const auto p = family_params(Conference{d});
        const auto e = energy_closed(p);
        conf.check(e == ExactValue(Surd::normalize(2 * d, 2 * d, 4 * d + 1)) && e == class_energy(Conference{d}),
                   p.str() + " E=" + e.str());
    }
    out.claims.push_back(conf.claim("conference", "Conference(d) energy 2d(1+sqrt(4d+1)) for 1 <= d <= 100"));
    return out;
}

SuiteReport trichotomy(unsigned jobs) {
    SuiteReport out{"trichotomy", {}};
    std::vector<EnumeratedSrg> rows;
    try {
        rows = enumerate_equien(2500, jobs);
    } catch (const std::logic_error& e) {
        out.claims.push_back(make("enumerate", "enumerate_equien(2500) runs its postconditions", false, e.what()));
        return out;
    }
    std::set<SrgParams> found;
    for (const auto& r : rows) found.insert(r.params);
    Sweep classes;
    Sweep oa;
    Sweep closure;
    Sweep div4;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : rows) {
        const bool conf = std::holds_alternative<Conference>(r.cls);
        classes.check(!std::holds_alternative<NotEquien>(r.cls), r.params.str());
        counts[conf ? 0 : std::holds_alternative<CaseB>(r.cls) ? 1 : 2]++;
        if (!conf) {
            oa.check(oa_params(r.params).has_value(), r.params.str());
            const auto e = energy_closed(r.params);
            div4.check(e.is_rational() && denominator(e.rational_part()) == 1 &&
                           numerator(e.rational_part()) % 4 == 0 && e == class_energy(r.cls),
                       r.params.str() + " E=" + e.str());
        }
        closure.check(found.count(complement_params(r.params)) == 1, r.params.str());
    }
    auto c = classes.claim("classes", "enumerate_equien(2500) yields only Conference / CaseB / CaseC tuples");
    c.detail += " (conference " + std::to_string(counts[0]) + ", case b " + std::to_string(counts[1]) + ", case c " +
                std::to_string(counts[2]) + ")";
    out.claims.push_back(c);
    out.claims.push_back(oa.claim("oa", "every non-conference tuple has OA parameters"));
    out.claims.push_back(closure.claim("closure", "the list is closed under complementation"));
    out.claims.push_back(div4.claim("energy", "non-conference energies match the case formula and are divisible by 4"));
    return out;
}

SuiteReport cameron() {
    SuiteReport out{"cameron", {}};
    Sweep nl;
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t m = 1; m <= 30; ++m) {
            SrgParams p;
            try {
                p = negative_latin_square_params(n, m);
            } catch (const InfeasibleParams&) {
                continue;
            }
            const auto oa = oa_params(p);
            nl.check(!oa, "NL_" + std::to_string(n) + "(" + std::to_string(m) + ")=" + p.str() +
                              (oa ? " has OA(" + std::to_string(oa->n) + "," + std::to_string(oa->m) + ")" : ""));
        }
    }
    out.claims.push_back(nl.claim("negative-latin", "negative Latin square tuples never have OA parameters (n, m in [1,30])"));

    Sweep smith;
    std::size_t infeasible = 0;
    for (std::int64_t r = 1; r <= 20; ++r) {
        for (std::int64_t s = -20; s <= -2; ++s) {
            const auto p = smith_params(r, s);
            if (!p) continue;
            if (!is_feasible(*p)) {
                ++infeasible;
                continue;
            }
            smith.check(!equien_condition(*p) && !oa_params(*p), p->str());
        }
    }
    auto sc = smith.claim("smith", "integral Smith tuples (r in [1,20], s in [-20,-2]) fail the equienergy condition");
    if (infeasible) sc.detail += ", " + std::to_string(infeasible) + " integral but infeasible";
    out.claims.push_back(sc);

    // DS strongly regular graphs.
    std::set<std::string> accepted;
    std::set<std::string> expected;
    auto consider = [&](const std::string& name, const SrgParams& p, bool expect) {
        if (equien_condition(p)) accepted.insert(name);
        if (expect) expected.insert(name);
    };
    for (std::int64_t a = 2; a <= 12; ++a) {
        for (std::int64_t m = 2; m <= 12; ++m) {
            const SrgParams p{a * m, (a - 1) * m, (a - 2) * m, (a - 1) * m};
            consider("K" + std::to_string(a) + "x" + std::to_string(m), p, a == m);
        }
    }
    for (std::int64_t n = 5; n <= 30; ++n) {
        if (n != 8) consider("T(" + std::to_string(n) + ")", triangular_params(n), false);
    }
    for (std::int64_t m = 2; m <= 30; ++m) {
        // L2(2) = K2x2; L2(3) is included per the correction on L(K33).
        if (m != 4) consider("L2(" + std::to_string(m) + ")", lattice_params(m), m != 4);
    }
    for (const auto& e : ds_conference_sporadics()) consider(e.name, e.params, true);
    for (const auto& e : ds_nonconference_sporadics()) consider(e.name, e.params, false);
    std::vector<std::string> extra;
    std::vector<std::string> missing;
    std::set_difference(accepted.begin(), accepted.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), accepted.begin(), accepted.end(), std::back_inserter(missing));
    out.claims.push_back(make("ds-catalog",
                              "DS catalogue: accepted = {K_mxm, P(5), P(13), P(17), L2(3), L2(n) n >= 5}",
                              extra.empty() && missing.empty(),
                              std::to_string(accepted.size()) + " accepted" +
                                  (extra.empty() ? "" : ", unexpected: " + join(extra)) +
                                  (missing.empty() ? "" : ", missing: " + join(missing))));

    Sweep kmm;
    for (std::int64_t m = 2; m <= 30; ++m) {
        const auto rep = imprimitive_equien(m, m);
        const SrgParams p{m * m, (m - 1) * m, (m - 2) * m, (m - 1) * m};
        kmm.check(rep.equal && rep.energy == 2 * Integer(m) * (m - 1) && equien_condition(p), p.str());
    }
    for (std::int64_t a = 2; a <= 12; ++a) {
        for (std::int64_t m = 2; m <= 12; ++m) {
            if (a != m) kmm.check(!imprimitive_equien(a, m).equal, "K" + std::to_string(a) + "x" + std::to_string(m));
        }
    }
    out.claims.push_back(kmm.claim("imprimitive", "K_{a x m} is equienergetic with aK_m iff a = m, E = 2m(m-1)"));
    out.claims.push_back(make("c5", "C(5) graphs: the pentagon and L(K33) = srg(9,4,1,2) pass",
                              equien_condition({5, 2, 0, 1}) && equien_condition({9, 4, 1, 2}) &&
                                  oa_params({9, 4, 1, 2}) == OaParams{3, 2}));
    return out;
}

bool two_field_profile(const RingProfile& p) {
    return p.factors.size() == 2 && p.factors[0].m == 1 && p.factors[1].m == 1;
}

SuiteReport rings_even() {
    SuiteReport out{"rings-even", {}};
    for (int s : {2, 4}) {
        Sweep sweep;
        std::size_t equal = 0;
        for (const auto& profile : enumerate_profiles(s, 4096)) {
            try {
                const auto rep = equien_check(profile);
                if (rep.equal) ++equal;
                sweep.check(rep.equal == two_field_profile(profile), profile.str());
            } catch (const std::logic_error& e) {
                sweep.check(false, e.what());
            }
        }
        auto c = sweep.claim("even-s" + std::to_string(s),
                             "s = " + std::to_string(s) + ", |R| <= 4096: equal exactly on two-field profiles, routes agree");
        c.detail += ", " + std::to_string(equal) + " equal";
        out.claims.push_back(c);
    }
    return out;
}

SuiteReport rings_odd(unsigned jobs) {
    SuiteReport out{"rings-odd", {}};
    const auto three = search_field_products(3, 16, jobs);
    std::vector<std::string> found;
    for (const auto& t : three) found.push_back(tuple_str(t));
    const std::vector<std::vector<std::int64_t>> expected = {{3, 5, 5}, {4, 4, 4}};
    out.claims.push_back(make("search-3-16", "search_field_products(3,16) = {(3,5,5), (4,4,4)}", three == expected,
                              "found " + join(found)));
    const auto five = search_field_products(5, 512, jobs);
    std::vector<std::string> equal_fields;
    std::vector<std::string> all5;
    for (const auto& t : five) {
        all5.push_back(tuple_str(t));
        if (std::all_of(t.begin(), t.end(), [&](auto q) { return q == t[0]; })) equal_fields.push_back(tuple_str(t));
    }
    out.claims.push_back(make("search-5-512", "search_field_products(5,512) has no equal-field tuple", equal_fields.empty(),
                              "all results: " + (all5.empty() ? std::string("none") : join(all5))));
    Sweep local;
    for (const auto& f : local_profiles(4096)) {
        const RingProfile p{{f}};
        local.check(equien_check(p).equal == (f.m == f.q), p.str());
    }
    out.claims.push_back(local.claim("local", "local profiles (q,m) pass iff m = q"));
    Sweep examples;
    for (const auto& text : {"3:1,5:1,5:1", "4:1,4:1,4:1"}) examples.check(equien_check(RingProfile::parse(text)).equal, text);
    out.claims.push_back(examples.claim("fields", "F3 x F5 x F5 and F4 x F4 x F4 are equienergetic"));
    return out;
}

SuiteReport rings(unsigned jobs) {
    SuiteReport out{"rings", {}};
    for (auto* part : {+[](unsigned) { return rings_even(); }, +[](unsigned j) { return rings_odd(j); }}) {
        auto r = part(jobs);
        out.claims.insert(out.claims.end(), r.claims.begin(), r.claims.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numeric oracle coherence

struct Concrete {
    std::string name;
    std::function<Graph()> build;
    std::function<Spectrum()> exact;
};

std::vector<Concrete> concrete_graphs() {
    std::vector<Concrete> out;
    auto named = [&](const NamedGraph& g, const std::string& name) {
        out.push_back({name, [g] { return gen_named(g); }, [g] { return named_spectrum(g); }});
    };
    for (std::int64_t t = 2; t <= 50; ++t) {
        const NamedGraph g{Family::Crown, t};
        named(g, "Cr(" + std::to_string(t) + ")");
        out.push_back({"complement of Cr(" + std::to_string(t) + ")", [g] { return complement(gen_named(g)); },
                       [g, t] { return complement_spectrum(named_spectrum(g), t - 1, false); }});
    }
    for (const auto& e : integral_cubic_graphs()) {
        if (e.build) out.push_back({"cubic " + e.name, e.build, [s = e.spectrum] { return s; }});
    }
    for (const auto& e : distance_regular_cubic_graphs()) {
        if (e.build) out.push_back({"drg " + e.name, e.build, [s = e.spectrum] { return s; }});
    }
    named({Family::Shrikhande}, "Shrikhande");
    out.push_back({"L(K44)", [] { return line_graph(gen_named({Family::CompleteBipartite, 4, 4})); },
                   [] { return srg_spectrum({16, 6, 2, 2}); }});
    for (std::int64_t n = 3; n <= 16; ++n) named({Family::Lattice, n}, "L2(" + std::to_string(n) + ")");
    for (std::int64_t n = 5; n <= 22; ++n) named({Family::Triangular, n}, "T(" + std::to_string(n) + ")");
    for (std::int64_t q = 5; q <= 256; q += 4) {
        if (as_prime_power(static_cast<std::uint64_t>(q))) named({Family::Paley, q}, "P(" + std::to_string(q) + ")");
    }
    for (std::int64_t m = 2; m <= 8; ++m) named({Family::CompleteMultipartite, m, m}, "K" + std::to_string(m) + "x" + std::to_string(m));
    for (const auto& [k, q] : std::vector<std::pair<int, int>>{{3, 16}, {3, 64}, {3, 256}, {5, 256}, {2, 9}}) {
        out.push_back({"Gamma(" + std::to_string(k) + "," + std::to_string(q) + ")", [k, q] { return gp_graph(k, q); },
                       [k, q] { return gp_spectrum(k, q).spectrum; }});
    }
    // Unitary Cayley graphs of products of fields and Z_{p^a}.
    std::vector<std::pair<LocalFactor, LocalProfile>> locals;
    for (auto q : prime_powers_up_to(256)) {
        const auto pp = *as_prime_power(static_cast<std::uint64_t>(q));
        locals.push_back({{LocalFactor::Kind::Field, static_cast<std::uint64_t>(q)}, {q, 1}});
        if (pp.m >= 2) locals.push_back({{LocalFactor::Kind::IntegersMod, static_cast<std::uint64_t>(q)}, {pp.p, q / pp.p}});
    }
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start, std::int64_t order, std::size_t s, std::int64_t limit) -> void {
        if (pick.size() == s) {
            std::vector<LocalFactor> factors;
            RingProfile profile;
            std::string name;
            for (auto i : pick) {
                factors.push_back(locals[i].first);
                profile.factors.push_back(locals[i].second);
                name += (name.empty() ? "" : "x") + locals[i].first.str();
            }
            out.push_back({"G(" + name + ")", [factors] { return unitary_cayley_concrete(factors); },
                           [profile] { return unitary_spectrum(profile); }});
            return;
        }
        for (std::size_t i = start; i < locals.size(); ++i) {
            const auto size = static_cast<std::int64_t>(locals[i].first.order);
            if (order * size > limit) continue;
            pick.push_back(i);
            self(self, i, order * size, s, limit);
            pick.pop_back();
        }
    };
    rec(rec, 0, 1, 1, 256);
    rec(rec, 0, 1, 2, 256);
    rec(rec, 0, 1, 3, 128);
    rec(rec, 0, 1, 4, 64);
    for (const auto& text : std::vector<std::string>{"F3,F5,F5", "F3,F4,F7"}) {
        std::vector<LocalFactor> factors;
        RingProfile profile;
        std::size_t start = 0;
        while (start < text.size()) {
            const auto comma = text.find(',', start);
            const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            factors.push_back(LocalFactor::parse(item));
            profile.factors.push_back({static_cast<std::int64_t>(factors.back().order), 1});
            start = comma == std::string::npos ? text.size() : comma + 1;
        }
        out.push_back({"G(" + text + ")", [factors] { return unitary_cayley_concrete(factors); },
                       [profile] { return unitary_spectrum(profile); }});
    }
    return out;
}

SuiteReport oracle() {
    SuiteReport out{"oracle", {}};
    Sweep sweep;
    for (const auto& c : concrete_graphs()) {
        try {
            const auto g = c.build();
            if (g.n() > 1024) continue;
            sweep.check(spectra_match(c.exact(), numeric_spectrum(g), 1e-7), c.name);
        } catch (const std::exception& e) {
            sweep.check(false, c.name + ": " + e.what());
        }
    }
    out.claims.push_back(sweep.claim("numeric", "numeric Jacobi spectra match exact spectra within 1e-7 with equal grouping"));
    return out;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed; });
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const auto& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"table1",   "table2",     "table3",     "table4",   "crowns",
                                                   "srg-families", "cameron", "rings",      "rings-even", "rings-odd",
                                                   "gp",       "energies",   "trichotomy", "oracle"};
    return names;
}

SuiteReport run_suite(const std::string& name, unsigned jobs) {
    if (name == "table1") return table1();
    if (name == "table2") return table2();
    if (name == "table3") return table3();
    if (name == "table4") return table4();
    if (name == "crowns") return crowns();
    if (name == "srg-families") return srg_families();
    if (name == "cameron") return cameron();
    if (name == "rings") return rings(jobs);
    if (name == "rings-even") return rings_even();
    if (name == "rings-odd") return rings_odd(jobs);
    if (name == "gp") return gp();
    if (name == "energies") return energies();
    if (name == "trichotomy") return trichotomy(jobs);
    if (name == "oracle") return oracle();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace equigraph
