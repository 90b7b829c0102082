#pragma once

#include <optional>
#include <string>

#include "hypotree/spectral.hpp"
#include "hypotree/tree.hpp"

namespace hypotree {

/// Existence answer for trees of order n with maximum degree exactly delta.
struct Verdict {
    int n = 0;
    int delta = 0;
    bool feasible = false;     // does any such tree exist at all
    bool hypo_exists = false;  // some tree with E < n
    bool strong_exists = false;// some tree with E < n-1
    std::string clause;        // which classification rule decided
    std::optional<Tree> witness;
    std::optional<EnergyResult> certificate;
};

/// A tree of order n with max degree exactly delta exists iff
/// (delta == 0 and n == 1) or (delta == 1 and n == 2) or
/// (delta >= 2 and n >= delta+1).
bool degree_feasible(int n, int delta);

Verdict hypo_exists(int n, int delta);
Verdict strong_exists(int n, int delta);

/// True iff the certified energy lies strictly below n (strong: n-1)
/// including its error bound; values inside the error band never certify.
bool certify(const Tree& t, bool strong, double tol = 1e-9);

/// Certified witness for a yes-verdict: a tree of order n and max degree
/// exactly delta with energy + error_bound < n (strong: n-1). Deterministic
/// strategy battery: star, max-nullity chain, minimum-energy family for
/// delta = 4, star-5 coalescence chains, exhaustive search for n <= 18.
/// Throws no_witness_found if every strategy fails.
Verdict witness(int n, int delta, bool strong, double tol = 1e-9);

/// Verdict JSON: {n, delta, feasible, hypo, strong, clause,
/// witness_edges?, energy?, error_bound?, margin?}.
std::string verdict_to_json(const Verdict& v);

} // namespace hypotree
