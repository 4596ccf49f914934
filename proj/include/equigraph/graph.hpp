#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "equigraph/finite_field.hpp"
#include "equigraph/spectra.hpp"
#include "equigraph/srg_params.hpp"

namespace equigraph {

/// Simple undirected graph on vertices 0..n-1 stored as a dense bit matrix.
/// Loops are only representable when `loops_allowed` is set.
class Graph {
public:
    static constexpr std::size_t kMaxVertices = 20000;

    Graph() = default;
    explicit Graph(std::size_t n, bool loops_allowed = false);

    std::size_t n() const { return n_; }
    bool loops_allowed() const { return loops_; }

    bool has_edge(std::size_t u, std::size_t v) const {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }
    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t u) const;
    std::vector<std::size_t> neighbors(std::size_t u) const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// |N(u) ∩ N(v)|.
    std::size_t common_neighbors(std::size_t u, std::size_t v) const;

    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n_, n_);
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (has_edge(u, v)) a(u, v) = Scalar(1);
            }
        }
        return a;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    bool loops_ = false;
    std::vector<std::uint64_t> bits_;
};

enum class Family {
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Crown,
    Lattice,
    Triangular,
    Hypercube,
    Paley,
    Petersen,
    Shrikhande,
    Q3,
    K3PrismK2,
};

/// A named family member; `a` and `b` carry its parameters
/// (Cycle n, Complete n, CompleteBipartite a b, CompleteMultipartite a parts
/// of size m=b, Crown t, Lattice n, Triangular n, Hypercube d, Paley q).
struct NamedGraph {
    Family family = Family::Complete;
    std::int64_t a = 0;
    std::int64_t b = 0;
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

Graph gen_named(const NamedGraph& spec);
/// Closed-form spectrum of a named family member.
Spectrum named_spectrum(const NamedGraph& spec);

/// LCF notation: Hamiltonian cycle 0..n-1 plus chords i ~ i + shifts[i mod len].
Graph lcf(std::size_t n, const std::vector<int>& shifts);

Graph kronecker(const Graph& g, const Graph& h);
Graph cartesian(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);
/// J - A (loops = true) or J - A - I (loops = false).
Graph complement(const Graph& g, bool loops = false);

/// Finite abelian group Z_{m_1} x ... x Z_{m_r}; elements are coordinate
/// vectors, indexed with the first coordinate most significant.
struct AbelianGroup {
    std::vector<std::uint32_t> moduli;

    std::size_t order() const;
    std::size_t index(const std::vector<std::uint32_t>& x) const;
    std::vector<std::uint32_t> element(std::size_t index) const;
};

/// Cayley graph X(G, S): x ~ y iff x - y in S.
Graph cayley(const AbelianGroup& group, const std::vector<std::vector<std::uint32_t>>& connection,
             bool loops = false);
/// Cayley graph on the additive group of a finite field.
Graph cayley(const FiniteField& field, const std::vector<FiniteField::Elem>& connection, bool loops = false);

/// GP-graph X(F_q, {x^k}).
Graph gp_graph(std::uint32_t k, std::uint64_t q);

/// A local factor realizable element-wise: the field F_q or Z_{p^a}.
struct LocalFactor {
    enum class Kind { Field, IntegersMod };
    Kind kind = Kind::Field;
    std::uint64_t order = 0;

    std::string str() const;
    static LocalFactor parse(const std::string& text);
};

/// Unitary Cayley graph of a product of fields and Z_{p^a}.
Graph unitary_cayley_concrete(const std::vector<LocalFactor>& factors);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric spectrum by Jacobi rotations; entries carry radius 1e-8.
Spectrum numeric_spectrum(const Graph& g);

std::optional<std::size_t> regularity(const Graph& g);
bool is_bipartite(const Graph& g);
std::optional<SrgParams> srg_detect(const Graph& g);
bool is_isospectral(const Graph& g, const Graph& h, double tol = 1e-7);

}  // namespace equigraph
