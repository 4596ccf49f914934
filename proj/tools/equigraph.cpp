#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equigraph/graph.hpp"
#include "equigraph/io.hpp"
#include "equigraph/rings.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg.hpp"
#include "equigraph/verify.hpp"

using namespace equigraph;

namespace {

enum class Format { Pretty, Json, Csv };

struct Globals {
    Format format = Format::Pretty;
    unsigned jobs = 1;
    bool assume_exact = false;
};

struct Source {
    std::string family;
    std::optional<std::int64_t> t, n, q, a, b, m, d;
    std::string file;
    std::string srg;
    std::string ring;
    bool numeric = false;

    void add_options(CLI::App* app) {
        auto* fam = app->add_option("--family", family, "named family (crown, cycle, complete, lattice, ...)");
        app->add_option("--t", t, "crown parameter t")->needs(fam);
        app->add_option("--n", n, "order parameter n")->needs(fam);
        app->add_option("--q", q, "field order q (paley)")->needs(fam);
        app->add_option("--a", a, "first part count / size")->needs(fam);
        app->add_option("--b", b, "second part size")->needs(fam);
        app->add_option("--m", m, "part size (complete-multipartite)")->needs(fam);
        app->add_option("--d", d, "dimension (hypercube)")->needs(fam);
        auto* f = app->add_option("--file", file, "graph file ('n loops' header, then 'u v' edges)");
        auto* s = app->add_option("--srg", srg, "srg parameters n,k,e,d");
        auto* r = app->add_option("--ring", ring, "ring profile q1:m1,q2:m2,...");
        app->add_flag("--numeric", numeric, "use the numeric eigensolver for a named family");
        fam->excludes(f)->excludes(s)->excludes(r);
        f->excludes(s)->excludes(r);
        s->excludes(r);
    }

    NamedGraph named() const {
        const auto fam = parse_family(family);
        if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
        NamedGraph g{*fam};
        for (const auto& v : {t, n, q, d, a}) {
            if (v) {
                g.a = *v;
                break;
            }
        }
        if (b) g.b = *b;
        if (m) g.b = *m;
        return g;
    }
};

SrgParams parse_srg(const std::string& text) {
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            v.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad srg field '" + item + "'");
    }
    if (v.size() != 4) throw std::invalid_argument("--srg expects n,k,e,d");
    return {v[0], v[1], v[2], v[3]};
}

struct Loaded {
    Json inputs;
    Spectrum spectrum;
    long long degree = 0;
    bool loops = false;
    std::string route;
    std::optional<RingProfile> ring;
};

Loaded load(const Source& src) {
    Loaded out;
    if (!src.family.empty()) {
        const auto g = src.named();
        out.inputs["family"] = family_name(g.family);
        out.inputs["a"] = g.a;
        if (g.b) out.inputs["b"] = g.b;
        if (src.numeric) {
            const auto graph = gen_named(g);
            const auto k = regularity(graph);
            if (!k) throw std::invalid_argument("graph is not regular");
            out.spectrum = numeric_spectrum(graph);
            out.degree = static_cast<long long>(*k);
            out.route = "numeric (Jacobi)";
        } else {
            out.spectrum = named_spectrum(g);
            out.degree = static_cast<long long>(std::llround(to_double(out.spectrum.principal_value())));
            out.route = "closed form";
        }
    } else if (!src.file.empty()) {
        out.inputs["file"] = src.file;
        const auto graph = read_graph_file(src.file);
        const auto k = regularity(graph);
        out.spectrum = numeric_spectrum(graph);
        out.degree = k ? static_cast<long long>(*k) : -1;
        out.loops = graph.loops_allowed();
        out.route = "numeric (Jacobi)";
    } else if (!src.srg.empty()) {
        const auto p = parse_srg(src.srg);
        out.inputs["srg"] = p.str();
        out.spectrum = srg_spectrum(p);
        out.degree = p.k;
        out.route = "closed form";
    } else if (!src.ring.empty()) {
        auto profile = RingProfile::parse(src.ring);
        out.inputs["ring"] = profile.str();
        out.spectrum = unitary_spectrum(profile);
        out.degree = static_cast<long long>(profile.units());
        out.route = "closed form";
        out.ring = std::move(profile);
    } else {
        throw std::invalid_argument("no graph source: use --family, --file, --srg or --ring");
    }
    return out;
}

Json breakdown_json(const DiscrepancyBreakdown& d) {
    Json j;
    j["sigma"] = d.sigma;
    j["T"] = d.T;
    j["m0"] = d.m0;
    j["S"] = certified_to_json(d.S);
    j["Delta"] = certified_to_json(d.delta_total);
    return j;
}

std::string render(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.contains("approx")) {
        std::ostringstream os;
        os.precision(12);
        os << "~" << j["approx"].get<double>() << " (+-" << j["radius"].get<double>() << ")";
        return os.str();
    }
    return j.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_pretty(const Json& report, std::ostream& out) {
    out << report["command"].get<std::string>() << "\n";
    for (const auto& [key, value] : report["inputs"].items()) out << "  " << key << ": " << render(value) << "\n";
    for (const auto& [key, value] : report["results"].items()) {
        if (key == "spectrum") {
            out << "  spectrum (n=" << value["n"] << "):\n";
            for (const auto& e : value["entries"]) out << "    " << render(e["value"]) << "  x" << e["mult"] << "\n";
        } else if (value.is_object()) {
            out << "  " << key << ":";
            for (const auto& [k2, v2] : value.items()) out << " " << k2 << "=" << render(v2);
            out << "\n";
        } else {
            out << "  " << key << ": " << render(value) << "\n";
        }
    }
    if (report.contains("provenance")) out << "  route: " << render(report["provenance"]) << "\n";
}

void emit(const Globals& g, const Json& report) {
    if (g.format == Format::Json) {
        std::cout << report.dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        const auto& r = report["results"];
        if (r.contains("spectrum")) {
            std::cout << "value,mult\n";
            for (const auto& e : r["spectrum"]["entries"]) std::cout << csv_field(render(e["value"])) << "," << e["mult"] << "\n";
        } else {
            std::cout << "key,value\n";
            for (const auto& [k, v] : r.items()) {
                if (v.is_object() && !v.contains("approx")) {
                    for (const auto& [k2, v2] : v.items()) std::cout << k << "." << k2 << "," << csv_field(render(v2)) << "\n";
                } else {
                    std::cout << k << "," << csv_field(render(v)) << "\n";
                }
            }
        }
    } else {
        print_pretty(report, std::cout);
    }
}

Json base_report(const std::string& command, const Json& inputs) {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs.is_null() ? Json::object() : inputs;
    return j;
}

int cmd_spectrum(const Globals& g, const Source& src) {
    const auto l = load(src);
    auto report = base_report("spectrum", l.inputs);
    report["results"]["spectrum"] = spectrum_to_json(l.spectrum);
    report["results"]["energy"] = certified_to_json(energy(l.spectrum));
    report["results"]["discrepancy"] = breakdown_json(discrepancy(l.spectrum, {g.assume_exact}));
    report["provenance"] = l.route;
    emit(g, report);
    return 0;
}

int cmd_check(const Globals& g, const Source& src) {
    const auto l = load(src);
    if (l.degree < 0) throw std::invalid_argument("graph is not regular");
    auto report = base_report("check", l.inputs);
    const auto rep = check_equienergetic(l.spectrum, l.degree, l.loops, {g.assume_exact});
    bool equal = rep.equal;
    if (l.ring) {
        const auto ring = equien_check(*l.ring);
        report["results"]["route_delta"] = ring.route_delta;
        report["results"]["route_closed"] = ring.route_closed;
        equal = ring.equal;
    }
    report["results"]["equal"] = equal;
    report["results"]["energy"] = certified_to_json(rep.energy);
    report["results"]["complement_energy"] = certified_to_json(rep.complement_energy);
    report["results"]["discrepancy"] = breakdown_json(rep.delta);
    report["results"]["criterion"] = l.loops ? "n = 2k" : "n = 2k+1-Delta";
    report["provenance"] = l.route;
    emit(g, report);
    return equal ? 0 : 1;
}

int cmd_classify(const Globals& g, const std::string& text) {
    const auto p = parse_srg(text);
    Json inputs;
    inputs["srg"] = p.str();
    auto report = base_report("classify", inputs);
    const auto cls = classify(p);
    const auto ed = eigen_data(p);
    report["results"]["class"] = describe(cls);
    report["results"]["alpha"] = to_string(ed.alpha);
    report["results"]["r"] = ed.r.str();
    report["results"]["s"] = ed.s.str();
    report["results"]["m_r"] = to_string(ed.m_r);
    report["results"]["m_s"] = to_string(ed.m_s);
    report["results"]["equien"] = equien_condition(p);
    report["results"]["energy"] = energy_closed(p).str();
    report["results"]["complement_energy"] = energy_closed(complement_params(p)).str();
    if (const auto oa = oa_params(p)) report["results"]["oa"] = "OA(" + std::to_string(oa->n) + ";" + std::to_string(oa->m) + ")";
    emit(g, report);
    return 0;
}

int cmd_enumerate(const Globals& g, std::int64_t n_max) {
    const auto rows = enumerate_equien(n_max, g.jobs);
    Json table = Json::array();
    for (const auto& row : rows) {
        const auto& p = row.params;
        const auto ed = eigen_data(p);
        const auto oa = oa_params(p);
        Json j;
        j["n"] = p.n;
        j["k"] = p.k;
        j["e"] = p.e;
        j["d"] = p.d;
        j["class"] = describe(row.cls);
        j["alpha"] = to_string(ed.alpha);
        j["r"] = ed.r.str();
        j["s"] = ed.s.str();
        j["m_r"] = to_string(ed.m_r);
        j["m_s"] = to_string(ed.m_s);
        j["energy"] = energy_closed(p).str();
        j["oa"] = oa ? "OA(" + std::to_string(oa->n) + ";" + std::to_string(oa->m) + ")" : "";
        table.push_back(j);
    }
    if (g.format == Format::Json) {
        Json inputs;
        inputs["n_max"] = n_max;
        auto report = base_report("enumerate", inputs);
        report["results"]["count"] = rows.size();
        report["results"]["rows"] = table;
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::cout << "n,k,e,d,class,alpha,r,s,m_r,m_s,energy,oa\n";
    for (const auto& j : table) {
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            std::cout << (first ? "" : ",") << csv_field(render(v.is_number() ? Json(std::to_string(v.get<long long>())) : v));
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_rings_search(const Globals& g, int s, std::int64_t q_max) {
    const auto found = search_field_products(s, q_max, g.jobs);
    Json inputs;
    inputs["s"] = s;
    inputs["q_max"] = q_max;
    auto report = base_report("rings-search", inputs);
    Json tuples = Json::array();
    for (const auto& t : found) tuples.push_back(t);
    report["results"]["count"] = found.size();
    report["results"]["tuples"] = tuples;
    if (g.format == Format::Json) {
        std::cout << report.dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        std::cout << "tuple\n";
        for (const auto& t : found) {
            std::string row;
            for (auto q : t) row += (row.empty() ? "" : ":") + std::to_string(q);
            std::cout << row << "\n";
        }
    } else {
        std::cout << "rings-search s=" << s << " qmax=" << q_max << ": " << found.size() << " tuple(s)\n";
        for (const auto& t : found) {
            std::cout << "  (";
            for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_verify(const Globals& g, const std::string& name) {
    std::vector<std::string> names;
    if (name == "all") {
        names = suite_names();
    } else {
        names.push_back(name);
    }
    bool ok = true;
    Json suites = Json::array();
    for (const auto& n : names) {
        const auto rep = run_suite(n, g.jobs);
        ok = ok && rep.passed();
        Json s;
        s["suite"] = rep.suite;
        s["passed"] = rep.passed();
        Json claims = Json::array();
        for (const auto& c : rep.claims) {
            Json cj;
            cj["id"] = c.id;
            cj["description"] = c.description;
            cj["passed"] = c.passed;
            cj["detail"] = c.detail;
            claims.push_back(cj);
        }
        s["claims"] = claims;
        suites.push_back(s);
    }
    if (g.format == Format::Json) {
        Json inputs;
        inputs["suite"] = name;
        auto report = base_report("verify", inputs);
        report["results"]["passed"] = ok;
        report["results"]["suites"] = suites;
        std::cout << report.dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        std::cout << "suite,id,passed,description,detail\n";
        for (const auto& s : suites) {
            for (const auto& c : s["claims"]) {
                std::cout << csv_field(s["suite"].get<std::string>()) << "," << csv_field(c["id"].get<std::string>()) << ","
                          << (c["passed"].get<bool>() ? "pass" : "FAIL") << ","
                          << csv_field(c["description"].get<std::string>()) << ","
                          << csv_field(c["detail"].get<std::string>()) << "\n";
            }
        }
    } else {
        for (const auto& s : suites) {
            std::size_t pass = 0;
            for (const auto& c : s["claims"]) {
                pass += c["passed"].get<bool>();
                std::cout << (c["passed"].get<bool>() ? "[pass] " : "[FAIL] ") << s["suite"].get<std::string>() << "/"
                          << c["id"].get<std::string>() << ": " << c["description"].get<std::string>();
                if (!c["detail"].get<std::string>().empty()) std::cout << " -- " << c["detail"].get<std::string>();
                std::cout << "\n";
            }
            std::cout << s["suite"].get<std::string>() << ": " << pass << "/" << s["claims"].size() << " claims pass\n";
        }
    }
    return ok ? 0 : 1;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("EQUIGRAPH_JOBS")) {
        try {
            const auto v = std::stoul(env);
            if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid EQUIGRAPH_JOBS='" << env << "'\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complementary equienergy of regular graphs"};
    app.require_subcommand(1);
    Globals g;
    g.jobs = default_jobs();
    bool json = false;
    bool csv = false;
    bool pretty = false;
    auto* fj = app.add_flag("--json", json, "JSON output");
    auto* fc = app.add_flag("--csv", csv, "CSV output");
    auto* fp = app.add_flag("--pretty", pretty, "human-readable output (default)");
    fj->excludes(fc)->excludes(fp);
    fc->excludes(fp);
    app.add_option("--jobs,-j", g.jobs, "worker threads (default: EQUIGRAPH_JOBS or 1)")->check(CLI::Range(1, 256));
    app.add_flag("--assume-exact", g.assume_exact, "treat numeric eigenvalues near branch points as exact");
    app.fallthrough();

    Source spectrum_src;
    auto* spectrum = app.add_subcommand("spectrum", "spectrum, energy and discrepancy of a graph");
    spectrum_src.add_options(spectrum);

    Source check_src;
    auto* check = app.add_subcommand("check", "decide complementary equienergy (exit 0 equal, 1 not equal, 2 error)");
    check_src.add_options(check);

    std::string classify_srg;
    auto* classify_cmd = app.add_subcommand("classify", "classify an srg parameter tuple");
    classify_cmd->add_option("--srg", classify_srg, "n,k,e,d")->required();

    std::int64_t n_max = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list equienergetic feasible srg tuples (CSV by default)");
    enumerate->add_option("--n-max", n_max, "largest vertex count")->required()->check(CLI::Range(5, 1000000));

    int search_s = 3;
    std::int64_t search_q = 16;
    auto* rings_search = app.add_subcommand("rings-search", "search equienergetic products of s fields");
    rings_search->add_option("--s", search_s, "odd number of fields")->required();
    rings_search->add_option("--qmax", search_q, "largest field order")->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required()->check(
        [](const std::string& s) -> std::string {
            if (s == "all") return "";
            for (const auto& n : suite_names()) {
                if (n == s) return "";
            }
            return "unknown suite '" + s + "'";
        });

    auto* rings = app.add_subcommand("rings", "unitary Cayley graphs from ring profiles");
    rings->require_subcommand(1);
    std::string ring_profile;
    auto* rings_spectrum = rings->add_subcommand("spectrum", "spectrum of G_R");
    rings_spectrum->add_option("profile", ring_profile, "q1:m1,q2:m2,...")->required();
    auto* rings_check = rings->add_subcommand("check", "decide complementary equienergy of G_R");
    rings_check->add_option("profile", ring_profile, "q1:m1,q2:m2,...")->required();
    int rs = 3;
    std::int64_t rq = 16;
    auto* rings_search2 = rings->add_subcommand("search", "search equienergetic products of s fields");
    rings_search2->add_option("--s", rs, "odd number of fields")->required();
    rings_search2->add_option("--qmax", rq, "largest field order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    g.format = json ? Format::Json : csv ? Format::Csv : Format::Pretty;

    try {
        if (spectrum->parsed()) return cmd_spectrum(g, spectrum_src);
        if (check->parsed()) return cmd_check(g, check_src);
        if (classify_cmd->parsed()) return cmd_classify(g, classify_srg);
        if (enumerate->parsed()) return cmd_enumerate(g, n_max);
        if (rings_search->parsed()) return cmd_rings_search(g, search_s, search_q);
        if (verify->parsed()) return cmd_verify(g, suite);
        if (rings->parsed()) {
            Source src;
            src.ring = ring_profile;
            if (rings_spectrum->parsed()) return cmd_spectrum(g, src);
            if (rings_check->parsed()) return cmd_check(g, src);
            return cmd_rings_search(g, rs, rq);
        }
    } catch (const UncertifiableBranch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
