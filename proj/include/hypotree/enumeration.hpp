#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hypotree/spectral.hpp"
#include "hypotree/tree.hpp"

namespace hypotree {

/// Isomorph-free stream of all free trees of order n (max degree <=
/// delta_cap when given), one representative per isomorphism class, in a
/// deterministic order.
///
/// Generation walks canonical level sequences with the Beyer-Hedetniemi
/// successor, pruning on the degree cap as soon as a prefix violates it, and
/// keeps exactly the centroid-rooted representative of each free tree.
class TreeStream {
public:
    explicit TreeStream(int n, std::optional<int> delta_cap = std::nullopt);

    std::optional<Tree> next();

    int order() const { return n_; }
    std::optional<int> delta_cap() const { return cap_; }

private:
    bool advance_raw();          // next canonical rooted level sequence
    void jump_prefix(int keep);  // skip every sequence sharing levels_[0..keep]
    int first_cap_violation() const;
    bool is_free_representative() const;
    Tree current_tree() const;

    int n_;
    std::optional<int> cap_;
    std::vector<int> levels_; // levels_[0] == 1
    bool exhausted_ = false;
    bool fresh_ = true;
};

TreeStream free_trees(int n, std::optional<int> delta_cap = std::nullopt);

std::vector<Tree> all_free_trees(int n, std::optional<int> delta_cap = std::nullopt);

struct MinEnergyResult {
    Tree tree;
    EnergyResult energy;
    bool unique; // no other isomorphism class within twice the error bound
};

/// Energy-minimal tree over all free trees of order n with max degree <=
/// delta_cap (exact_roots backend).
MinEnergyResult min_energy_tree(int n, int delta_cap, double tol = 1e-9);

/// Hard guard for the exhaustive-search operations; larger orders must be
/// requested explicitly.
inline constexpr int kEnumerationGuard = 20;

/// Brute-force ground truth: does any tree of order n with max degree
/// exactly delta have certified energy < n (strong: < n-1)?
/// Throws budget_exceeded for n > kEnumerationGuard unless override_guard.
bool exhaustive_verdict(int n, int delta, bool strong, bool override_guard = false,
                        double tol = 1e-6);

/// One full scan of order n: for every exact max degree delta, whether a
/// certified hypoenergetic (.first) / strongly hypoenergetic (.second)
/// tree exists. Index = delta, 0..n-1.
std::vector<std::pair<bool, bool>> exhaustive_verdict_scan(int n, bool override_guard = false,
                                                           double tol = 1e-6);

} // namespace hypotree
