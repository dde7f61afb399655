#include "densepart/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "densepart/errors.hpp"
#include "densepart/random.hpp"

namespace densepart {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("graph: vertex count must be nonnegative");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    adjacency_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("graph: edge endpoint out of range");
        if (u == v) throw DomainError("graph: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("graph: duplicate edge");
    for (const auto& [u, v] : edges_) {
        adjacency_[row_offset(u) + (v >> 6)] |= 1ULL << (v & 63);
        adjacency_[row_offset(v) + (u >> 6)] |= 1ULL << (u & 63);
    }
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
    for (Vertex i = 0; i < n_; ++i)
        for (Vertex j = i + 1; j < n_; ++j)
            if (!has_edge(i, j)) out.emplace_back(i, j);
    return Graph(n_, std::move(out));
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("graph: permutation has wrong size");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(out));
}

namespace {

bool blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly two integers from a line; anything else is malformed.
bool read_pair(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    return !(ss >> rest);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    using K = ParseError::Kind;
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, declared = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        long long a = 0, b = 0;
        if (!read_pair(line, a, b)) throw ParseError(K::Malformed, lineno, "expected two integers");
        if (n < 0) {
            if (a < 1 || b < 0) throw ParseError(K::Malformed, lineno, "header must be 'n m_edges' with n >= 1");
            if (a > (1LL << 24)) throw ParseError(K::Malformed, lineno, "vertex count too large");
            n = a;
            declared = b;
            continue;
        }
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(K::VertexOutOfRange, lineno,
                             "vertex id out of range [1, " + std::to_string(n) + "]");
        if (a == b) throw ParseError(K::LoopEdge, lineno, "loop edge " + std::to_string(a));
        Vertex u = static_cast<Vertex>(std::min(a, b) - 1), v = static_cast<Vertex>(std::max(a, b) - 1);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
        if (!seen.insert(key).second)
            throw ParseError(K::DuplicateEdge, lineno,
                             "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(K::Malformed, lineno + 1, "missing header line 'n m_edges'");
    if (static_cast<long long>(edges.size()) != declared)
        throw ParseError(K::EdgeCountMismatch, lineno,
                         "header declares " + std::to_string(declared) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream ss{std::string(text)};
    return parse_edge_list(ss);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw DomainError("random_gnp: n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_gnp: p must lie in [0, 1]");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (counter_uniform(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)) < p)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

SubsetDensity density(const Graph& g, std::span<const Vertex> subset) {
    if (subset.size() < 2) throw DomainError("density: subset needs at least 2 vertices");
    SubsetDensity d;
    d.subset.assign(subset.begin(), subset.end());
    std::sort(d.subset.begin(), d.subset.end());
    if (std::adjacent_find(d.subset.begin(), d.subset.end()) != d.subset.end())
        throw DomainError("density: duplicate vertex in subset");
    if (d.subset.front() < 0 || d.subset.back() >= g.n()) throw DomainError("density: vertex out of range");
    const auto m = static_cast<long long>(d.subset.size());
    d.pairs = m * (m - 1) / 2;
    for (std::size_t a = 0; a < d.subset.size(); ++a)
        for (std::size_t b = a + 1; b < d.subset.size(); ++b)
            d.spanned_edges += g.has_edge(d.subset[a], d.subset[b]) ? 1 : 0;
    return d;
}

}  // namespace densepart
