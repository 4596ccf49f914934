#include "equigraph/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace equigraph {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t to_index(const Token& t, std::size_t line) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a nonnegative integer, got '" + t.text + "'", line, t.column);
    }
    try {
        return std::stoull(t.text);
    } catch (const std::exception&) {
        throw ParseError("integer out of range '" + t.text + "'", line, t.column);
    }
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#') continue;
        if (tokens.size() != 2) {
            const std::size_t col = tokens.size() > 2 ? tokens[2].column : line.size() + 1;
            throw ParseError("expected two fields", lineno, col);
        }
        const auto a = to_index(tokens[0], lineno);
        const auto b = to_index(tokens[1], lineno);
        if (!g) {
            if (b > 1) throw ParseError("loops flag must be 0 or 1", lineno, tokens[1].column);
            if (a > Graph::kMaxVertices) throw ParseError("too many vertices", lineno, tokens[0].column);
            g.emplace(a, b == 1);
            continue;
        }
        if (a >= g->n()) throw ParseError("vertex out of range", lineno, tokens[0].column);
        if (b >= g->n()) throw ParseError("vertex out of range", lineno, tokens[1].column);
        if (a == b && !g->loops_allowed()) throw ParseError("loop in a loopless graph", lineno, tokens[1].column);
        g->add_edge(a, b);
    }
    if (!g) throw ParseError("missing header 'n loops'", lineno + 1, 1);
    return *g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line, e.column);
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << (g.loops_allowed() ? 1 : 0) << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Json eig_to_json(const Eig& x) {
    if (const auto* s = std::get_if<Surd>(&x)) return s->str();
    const auto& a = std::get<Approx>(x);
    Json j;
    j["approx"] = a.value;
    j["radius"] = a.radius;
    if (a.known_irrational) j["irrational"] = true;
    return j;
}

Eig eig_from_json(const Json& j) {
    if (j.is_string()) return Surd::parse(j.get<std::string>());
    if (j.is_number_integer()) return Surd(j.get<long long>());
    if (j.is_object() && j.contains("approx")) {
        return Approx{j.at("approx").get<double>(), j.value("radius", 0.0), j.value("irrational", false)};
    }
    throw std::invalid_argument("eigenvalue must be a surd string or {\"approx\", \"radius\"}");
}

Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["n"] = s.n();
    Json entries = Json::array();
    for (const auto& e : s.entries()) {
        Json row;
        row["value"] = eig_to_json(e.eig);
        row["mult"] = e.mult;
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["principal"] = s.principal();
    return j;
}

Spectrum spectrum_from_json(const Json& j) {
    std::vector<SpectrumEntry> entries;
    for (const auto& row : j.at("entries")) entries.push_back({eig_from_json(row.at("value")), row.at("mult").get<long long>()});
    std::optional<Eig> principal;
    if (j.contains("principal")) {
        const auto idx = j.at("principal").get<std::size_t>();
        if (idx >= entries.size()) throw std::invalid_argument("principal index out of range");
        principal = entries[idx].eig;
    }
    Spectrum s = principal ? Spectrum(entries, *principal) : Spectrum(entries);
    if (j.contains("n") && j.at("n").get<long long>() != s.n()) {
        throw std::invalid_argument("multiplicities do not sum to n");
    }
    return s;
}

Json certified_to_json(const Certified& c) {
    if (!c.approximate) return c.exact.str();
    Json j;
    j["approx"] = c.value();
    j["radius"] = c.radius;
    return j;
}

}  // namespace equigraph
