#include "hypotree/constructions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hypotree/error.hpp"

namespace hypotree {

Tree star(int n) {
    if (n < 1)
        throw std::invalid_argument("star order must be >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return new_tree(n, e);
}

Tree path(int n) {
    if (n < 1)
        throw std::invalid_argument("path order must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return new_tree(n, e);
}

namespace {

// Appends C_h rooted at a fresh vertex attached to `parent` (skip for h = 0).
void attach_dary(std::vector<Edge>& edges, int parent, int& next_id, int d, int h) {
    if (h <= 0)
        return;
    const int root = next_id++;
    if (parent >= 0)
        edges.emplace_back(parent, root);
    for (int i = 0; i < d; ++i)
        attach_dary(edges, root, next_id, d, h - 1);
}

} // namespace

std::optional<Tree> complete_dary(int d, int h) {
    if (d < 2 || h < 0)
        throw std::invalid_argument("complete_dary requires d >= 2, h >= 0");
    if (h == 0)
        return std::nullopt;
    std::vector<Edge> edges;
    int next_id = 0;
    attach_dary(edges, -1, next_id, d, h);
    return new_tree(next_id, edges);
}

int dary_order(int d, int h) {
    if (d < 2 || h < 0)
        throw std::invalid_argument("dary_order requires d >= 2, h >= 0");
    long long total = 0, level = 1;
    for (int i = 0; i < h; ++i) {
        total += level;
        level *= d;
        if (total > std::numeric_limits<int>::max())
            throw std::overflow_error("dary_order overflow");
    }
    return static_cast<int>(total);
}

namespace {

// Decode a candidate terminal digit at level k. The three shapes are
// mutually exclusive in the digit value:
//   1                      -> d branches C_{k-1}   (needs k >= 1)
//   d                      -> d branches C_k
//   d+(d-1)q+(d^2-1)r      -> r x C_{k+2}, q x C_{k+1}, (d-q-r) x C_k,
//                             with q in [2, d], r >= 0, q + r <= d
bool decode_terminal(long long value, int d, int k, TStarDigits::Terminal* tag, int* q, int* r) {
    if (value == 1) {
        if (k < 1)
            return false;
        *tag = TStarDigits::Terminal::all_prev;
        *q = *r = 0;
        return true;
    }
    if (value == d) {
        *tag = TStarDigits::Terminal::all_cur;
        *q = *r = 0;
        return true;
    }
    if (value < d || (value - d) % (d - 1) != 0)
        return false;
    const long long s = (value - d) / (d - 1); // s = q + (d+1) r
    if (s < 2)
        return false;
    const long long rr = (s - 2) / (d + 1);
    const long long qq = s - (d + 1) * rr;
    if (qq < 2 || qq > d || qq + rr > d)
        return false;
    *tag = TStarDigits::Terminal::mixed;
    *q = static_cast<int>(qq);
    *r = static_cast<int>(rr);
    return true;
}

} // namespace

TStarDigits tstar_digits(long long n, int d) {
    if (n < 1 || d < 2)
        throw std::invalid_argument("tstar_digits requires n >= 1, d >= 2");
    // Walk the forced digit path: below the terminal level the digit
    // a_k = (d-1)(1+(d+1)r_k) is determined by N_k mod d (the allowed
    // values hit each residue class exactly once). At every level also
    // test whether the whole remainder is a valid terminal digit.
    std::vector<TStarDigits> found;
    TStarDigits cur;
    cur.d = d;
    long long remaining = (d - 1) * n + 1;
    for (int k = 0; remaining > 0; ++k) {
        TStarDigits::Terminal tag;
        int q, r;
        if (decode_terminal(remaining, d, k, &tag, &q, &r)) {
            TStarDigits hit = cur;
            hit.level = k;
            hit.a.push_back(remaining);
            hit.terminal = tag;
            hit.q_l = q;
            hit.r_l = r;
            found.push_back(std::move(hit));
        }
        const int rk = static_cast<int>(((-remaining - 1) % d + d) % d);
        const long long ak = static_cast<long long>(d - 1) * (1 + static_cast<long long>(d + 1) * rk);
        if (ak > remaining)
            break; // forced digit exceeds the remainder: no deeper expansion
        cur.a.push_back(ak);
        cur.r.push_back(rk);
        remaining = (remaining - ak) / d;
    }
    if (found.empty())
        throw Error(errc::no_expansion,
                    "no digit expansion for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    if (found.size() > 1)
        throw Error(errc::internal_inconsistency,
                    "digit expansion not unique for n=" + std::to_string(n) + ", d=" +
                        std::to_string(d));
    return found.front();
}

Tree tstar(long long n, int d) {
    const TStarDigits dig = tstar_digits(n, d);
    const int l = dig.level;
    std::vector<Edge> edges;
    int next_id = l + 1; // spine occupies 0..l
    for (int k = 0; k + 1 <= l; ++k)
        edges.emplace_back(k, k + 1);
    for (int k = 0; k < l; ++k) {
        for (int i = 0; i < dig.r[k]; ++i)
            attach_dary(edges, k, next_id, d, k + 2);
        for (int i = 0; i < d - 1 - dig.r[k]; ++i)
            attach_dary(edges, k, next_id, d, k);
    }
    switch (dig.terminal) {
    case TStarDigits::Terminal::all_prev:
        for (int i = 0; i < d; ++i)
            attach_dary(edges, l, next_id, d, l - 1);
        break;
    case TStarDigits::Terminal::all_cur:
        for (int i = 0; i < d; ++i)
            attach_dary(edges, l, next_id, d, l);
        break;
    case TStarDigits::Terminal::mixed:
        for (int i = 0; i < dig.r_l; ++i)
            attach_dary(edges, l, next_id, d, l + 2);
        for (int i = 0; i < dig.q_l; ++i)
            attach_dary(edges, l, next_id, d, l + 1);
        for (int i = 0; i < d - dig.q_l - dig.r_l; ++i)
            attach_dary(edges, l, next_id, d, l);
        break;
    }
    if (next_id != n)
        throw Error(errc::assembly_mismatch,
                    "assembled " + std::to_string(next_id) + " vertices, expected " +
                        std::to_string(n));
    Tree t = new_tree(static_cast<int>(n), edges);
    const int delta = max_degree(t);
    if (delta > d + 1 || (d == 3 && n >= 5 && delta != 4))
        throw Error(errc::assembly_mismatch,
                    "assembled max degree " + std::to_string(delta) + " out of contract");
    return t;
}

long long nullity_cover_size(long long n, long long delta) {
    if (n <= 1)
        return 0;
    if (delta < 1)
        throw std::invalid_argument("nullity_cover_size requires delta >= 1 for n > 1");
    return (n - 2) / delta + 1;
}

Tree max_nullity_tree(int n, int delta) {
    const bool ok = (delta == 0 && n == 1) || (delta == 1 && n == 2) || (delta >= 2 && n >= delta + 1);
    if (!ok)
        throw Error(errc::infeasible_degree,
                    "no tree of order " + std::to_string(n) + " has max degree " +
                        std::to_string(delta));
    if (n == 1)
        return star(1);
    if (n == 2)
        return path(2);
    // Chain of t linked stars. Centers form a vertex cover of size t, so the
    // matching number is exactly t and the nullity is n - 2t. Star i's first
    // leaf doubles as the link to center i+1; the front star is filled first
    // so some center reaches degree delta.
    const int t = static_cast<int>(nullity_cover_size(n, delta));
    std::vector<int> leaves(t, 0);
    for (int i = 0; i + 1 < t; ++i)
        leaves[i] = 1; // reserved link leaf
    int pool = n - t - (t - 1);
    for (int i = 0; i < t && pool > 0; ++i) {
        const int cap = (i == 0) ? delta : delta - 1;
        const int add = std::min(cap - leaves[i], pool);
        leaves[i] += add;
        pool -= add;
    }
    if (pool != 0)
        throw Error(errc::internal_inconsistency, "leaf budget does not fit the star chain");
    std::vector<Edge> edges;
    int next_id = 0, prev_link = -1;
    for (int i = 0; i < t; ++i) {
        const int center = next_id++;
        if (prev_link >= 0)
            edges.emplace_back(prev_link, center);
        prev_link = -1;
        for (int j = 0; j < leaves[i]; ++j) {
            const int leaf = next_id++;
            edges.emplace_back(center, leaf);
            if (j == 0 && i + 1 < t)
                prev_link = leaf;
        }
    }
    Tree tree = new_tree(n, edges);
    if (max_degree(tree) != std::min(delta, n - 1))
        throw Error(errc::internal_inconsistency, "star chain missed the target degree");
    return tree;
}

Tree figure1(Figure1Name name) {
    switch (name) {
    case Figure1Name::S1:
        return star(1);
    case Figure1Name::S3:
        return star(3);
    case Figure1Name::S4:
        return star(4);
    case Figure1Name::W:
        // u - c - v with two pendant leaves at each of u, v.
        return new_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
    }
    throw Error(errc::unknown_name, "bad Figure1Name value");
}

Tree figure1(const std::string& name) {
    if (name == "S1")
        return figure1(Figure1Name::S1);
    if (name == "S3")
        return figure1(Figure1Name::S3);
    if (name == "S4")
        return figure1(Figure1Name::S4);
    if (name == "W")
        return figure1(Figure1Name::W);
    throw Error(errc::unknown_name, "unknown tree name '" + name + "' (expected S1, S3, S4 or W)");
}

} // namespace hypotree
