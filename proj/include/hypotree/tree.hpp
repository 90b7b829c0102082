#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypotree/error.hpp"

namespace hypotree {

using Edge = std::pair<int, int>;

/// Immutable labeled tree on vertices 0..n-1.
///
/// Construction validates the tree property (n-1 edges, connected, simple);
/// everything downstream may assume acyclicity.
class Tree {
public:
    Tree(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    /// Edges as (min,max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Tree& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

Tree new_tree(int n, const std::vector<Edge>& edges);

int max_degree(const Tree& t);

/// Coalescence g∘h: identify vertex u of g with vertex v of h.
/// Labels of g are kept; vertices of h other than v are appended in
/// label order starting at |V(g)|, with v mapped onto u.
Tree coalesce(const Tree& g, int u, const Tree& h, int v);

/// Isomorphism-class certificate: byte string that is equal for two trees
/// iff they are isomorphic.
struct CanonicalCode {
    std::string code;

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Centroid-rooted AHU encoding; bicentroidal trees take the smaller of the
/// two centroid rootings.
CanonicalCode canonical_code(const Tree& t);

/// Centroid vertices (one or two, the latter joined by an edge).
std::vector<int> centroids(const Tree& t);

} // namespace hypotree
