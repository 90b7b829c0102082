#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypotree/tree.hpp"

namespace hypotree {

Tree star(int n);
Tree path(int n);

/// Complete d-ary tree C_h: C_1 a single vertex, C_h a root with d branches
/// C_{h-1}. C_0 is the empty tree, returned as nullopt.
std::optional<Tree> complete_dary(int d, int h);

int dary_order(int d, int h); // (d^h - 1)/(d - 1)

/// Digit expansion (d-1)n+1 = sum a_k d^k behind the minimum-energy tree
/// T*_{n,d} of the bounded-degree family (max degree <= d+1):
///   a_k = (d-1)(1+(d+1) r_k) for k < l, r_k in [0, d-1];
///   top digit a_l is 1, d, or d+(d-1)q_l+(d^2-1)r_l with q_l >= 2.
struct TStarDigits {
    enum class Terminal { all_prev, all_cur, mixed };

    int d = 0;
    int level = 0;                // l, the top level index
    std::vector<long long> a;     // a_0..a_l
    std::vector<int> r;           // r_0..r_{l-1}
    Terminal terminal = Terminal::all_cur;
    int q_l = 0;                  // mixed case only
    int r_l = 0;                  // mixed case only
};

TStarDigits tstar_digits(long long n, int d);

/// Decode the digit expansion into the tree itself: spine v_0..v_l, level k
/// carrying r_k branches C_{k+2} and d-1-r_k branches C_k, the top level
/// carrying d branches per the terminal case.
Tree tstar(long long n, int d);

/// Tree of order n, max degree exactly min(delta, n-1), with the maximum
/// possible nullity n - 2*ceil((n-1)/delta): a chain of linked stars whose
/// centers form a vertex cover of that size.
Tree max_nullity_tree(int n, int delta);

/// ceil((n-1)/delta) as exact integer arithmetic; 0 when n == 1.
long long nullity_cover_size(long long n, long long delta);

enum class Figure1Name { S1, S3, S4, W };

/// The four max-degree-<=3 hypoenergetic trees: K_1, K_{1,2}, K_{1,3} and
/// the 7-vertex double broom W (two leaves at each end of a path of 3).
Tree figure1(Figure1Name name);
Tree figure1(const std::string& name);

} // namespace hypotree
