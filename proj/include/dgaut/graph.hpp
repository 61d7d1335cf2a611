#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgaut/errors.hpp"

namespace dgaut {

namespace detail {

inline bool valid_vertex_token(std::string_view tok) {
    if (tok.empty()) return false;
    for (char c : tok) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '#' || c == '^' || c == '*' || c == '=' || c == '/') return false;
    }
    return true;
}

}  // namespace detail

/// A finite simple undirected graph. Vertices are named by tokens and
/// indexed in order of first appearance.
class Graph {
  public:
    int add_vertex(std::string token) {
        if (!detail::valid_vertex_token(token))
            throw ValidationError("invalid vertex token '" + token + "'");
        auto it = index_.find(token);
        if (it != index_.end()) return it->second;
        int idx = static_cast<int>(tokens_.size());
        index_.emplace(token, idx);
        tokens_.push_back(std::move(token));
        adj_.emplace_back();
        return idx;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_vertices() || v >= n_vertices())
            throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("loop edge at vertex '" + tokens_[u] + "'");
        auto e = std::minmax(u, v);
        if (!edges_.emplace(e.first, e.second).second) return;  // duplicates collapse
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    void add_edge(const std::string& u, const std::string& v) {
        int ui = add_vertex(u);
        int vi = add_vertex(v);
        add_edge(ui, vi);
    }

    int n_vertices() const { return static_cast<int>(tokens_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    const std::string& token(int v) const { return tokens_.at(v); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    int index_of(std::string_view token) const {
        auto it = index_.find(token);
        if (it == index_.end())
            throw ValidationError("unknown vertex '" + std::string(token) + "'");
        return it->second;
    }

    bool has_vertex(std::string_view token) const { return index_.contains(token); }

    bool has_edge(int u, int v) const {
        auto e = std::minmax(u, v);
        return edges_.contains({e.first, e.second});
    }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool operator==(const Graph& other) const {
        return tokens_ == other.tokens_ && edges_ == other.edges_;
    }

  private:
    std::vector<std::string> tokens_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<std::vector<int>> adj_;
    std::set<std::pair<int, int>> edges_;
};

inline int degree_of(const Graph& g, std::string_view token) {
    return g.degree(g.index_of(token));
}

/// BFS reachability from vertex 0. The empty graph counts as disconnected.
inline bool is_connected(const Graph& g) {
    const int n = g.n_vertices();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

/// A permutation of the vertex indices of some fixed graph.
struct VertexPermutation {
    std::vector<int> image;

    static VertexPermutation identity(int n) {
        VertexPermutation p;
        p.image.resize(n);
        for (int i = 0; i < n; ++i) p.image[i] = i;
        return p;
    }

    int operator()(int v) const { return image.at(v); }
    int size() const { return static_cast<int>(image.size()); }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image[i] != i) return false;
        return true;
    }

    auto operator<=>(const VertexPermutation&) const = default;
};

inline bool is_valid_permutation(const VertexPermutation& p) {
    std::vector<char> hit(p.size(), 0);
    for (int v : p.image) {
        if (v < 0 || v >= p.size() || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

/// compose(a, b) applies b first: v maps to a(b(v)).
inline VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
    if (a.size() != b.size()) throw ValidationError("compose: size mismatch");
    VertexPermutation out;
    out.image.resize(a.size());
    for (int v = 0; v < a.size(); ++v) out.image[v] = a(b(v));
    return out;
}

inline VertexPermutation inverse(const VertexPermutation& p) {
    VertexPermutation out;
    out.image.resize(p.size());
    for (int v = 0; v < p.size(); ++v) out.image[p(v)] = v;
    return out;
}

/// True when p is a bijection carrying edges to edges (and, by counting,
/// non-edges to non-edges).
inline bool is_automorphism(const Graph& g, const VertexPermutation& p) {
    if (p.size() != g.n_vertices() || !is_valid_permutation(p)) return false;
    for (const auto& [u, v] : g.edges())
        if (!g.has_edge(p(u), p(v))) return false;
    return true;
}

}  // namespace dgaut
