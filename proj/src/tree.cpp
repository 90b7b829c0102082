#include "hypotree/tree.hpp"

#include <algorithm>
#include <set>

namespace hypotree {

Tree::Tree(int n, const std::vector<Edge>& edges) {
    if (n <= 0)
        throw Error(errc::index_out_of_range, "vertex count must be positive");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error(errc::edge_count_mismatch,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
    adj_.resize(n);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::index_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw Error(errc::self_loop, "vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw Error(errc::duplicate_edge,
                        "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    // n-1 simple edges + connected => tree
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n)
        throw Error(errc::disconnected,
                    "reached " + std::to_string(count) + " of " + std::to_string(n) + " vertices");
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(order() - 1);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Tree new_tree(int n, const std::vector<Edge>& edges) { return Tree(n, edges); }

int max_degree(const Tree& t) {
    int best = 0;
    for (int v = 0; v < t.order(); ++v)
        best = std::max(best, t.degree(v));
    return best;
}

Tree coalesce(const Tree& g, int u, const Tree& h, int v) {
    const int gn = g.order(), hn = h.order();
    if (u < 0 || u >= gn)
        throw Error(errc::index_out_of_range, "u=" + std::to_string(u));
    if (v < 0 || v >= hn)
        throw Error(errc::index_out_of_range, "v=" + std::to_string(v));
    // h's vertex w maps to u if w == v, else gn + (w adjusted past v)
    auto relabel = [&](int w) { return w == v ? u : gn + w - (w > v ? 1 : 0); };
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges())
        edges.emplace_back(relabel(a), relabel(b));
    return Tree(gn + hn - 1, edges);
}

std::vector<int> centroids(const Tree& t) {
    const int n = t.order();
    if (n == 1)
        return {0};
    // iterative post-order from 0 for subtree sizes
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    {
        std::vector<int> stack{0};
        parent[0] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int w : t.neighbors(x))
                if (parent[w] == -1) {
                    parent[w] = x;
                    stack.push_back(w);
                }
        }
        parent[0] = -1;
    }
    std::vector<int> size(n, 1);
    for (int i = n - 1; i > 0; --i)
        size[parent[order[i]]] += size[order[i]];
    std::vector<int> best;
    int best_weight = n + 1;
    for (int x = 0; x < n; ++x) {
        int weight = n - size[x];
        for (int w : t.neighbors(x))
            if (w != parent[x])
                weight = std::max(weight, size[w]);
        if (weight < best_weight) {
            best_weight = weight;
            best = {x};
        } else if (weight == best_weight) {
            best.push_back(x);
        }
    }
    return best;
}

namespace {

// AHU subtree code: '(' + sorted child codes + ')'
std::string ahu_code(const Tree& t, int root) {
    const int n = t.order();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int w : t.neighbors(x))
            if (parent[w] == -2) {
                parent[w] = x;
                stack.push_back(w);
            }
    }
    std::vector<std::vector<std::string>> kids(n);
    std::vector<std::string> code(n);
    for (int i = n - 1; i >= 0; --i) {
        int x = order[i];
        auto& k = kids[x];
        std::sort(k.begin(), k.end());
        std::string s = "(";
        for (auto& c : k)
            s += c;
        s += ')';
        if (x != root)
            kids[parent[x]].push_back(s);
        else
            code[root] = std::move(s);
        k.clear();
    }
    return code[root];
}

} // namespace

CanonicalCode canonical_code(const Tree& t) {
    auto cs = centroids(t);
    std::string code = ahu_code(t, cs[0]);
    if (cs.size() == 2)
        code = std::min(code, ahu_code(t, cs[1]));
    return CanonicalCode{std::move(code)};
}

} // namespace hypotree
