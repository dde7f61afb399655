#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace densepart {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with a bitset adjacency view.
///
/// Edges are stored canonically (first < second) and sorted. Instances are
/// immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on loops, duplicates or endpoints outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex i, Vertex j) const noexcept {
        return (adjacency_[row_offset(i) + (j >> 6)] >> (j & 63)) & 1ULL;
    }

    /// Adjacency row of vertex i as 64-bit words.
    std::span<const std::uint64_t> row(Vertex i) const noexcept {
        return {adjacency_.data() + row_offset(i), words_};
    }
    std::size_t words_per_row() const noexcept { return words_; }

    Graph complement() const;

    /// Relabels vertex v as perm[v].
    Graph permuted(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t row_offset(Vertex i) const noexcept { return static_cast<std::size_t>(i) * words_; }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adjacency_;
};

/// Reads the edge-list format: first non-comment line "n m_edges", then one
/// "u v" line per edge with 1-based ids. Lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Writes the same format, edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);

/// G(n, p) where pair {i, j} is drawn from a generator keyed by (seed, i, j).
Graph random_gnp(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);

/// Density of a vertex subset, kept as an exact edge count over C(m, 2).
struct SubsetDensity {
    std::vector<Vertex> subset;  // sorted
    long long spanned_edges = 0;
    long long pairs = 0;

    double sigma() const noexcept {
        return pairs == 0 ? 0.0 : static_cast<double>(spanned_edges) / static_cast<double>(pairs);
    }
};

SubsetDensity density(const Graph& g, std::span<const Vertex> subset);

}  // namespace densepart
