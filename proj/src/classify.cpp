#include "hypotree/classify.hpp"

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypotree/constructions.hpp"
#include "hypotree/enumeration.hpp"
#include "hypotree/error.hpp"

namespace hypotree {

bool degree_feasible(int n, int delta) {
    return (delta == 0 && n == 1) || (delta == 1 && n == 2) || (delta >= 2 && n >= delta + 1);
}

namespace {

bool hypo_flag(int n, int delta) {
    if (delta <= 1)
        return delta == 0; // K_1 yes, K_2 no
    if (delta == 2)
        return n == 3;
    if (delta == 3)
        return n == 4 || n == 7;
    return true;
}

bool strong_flag(int n, int delta) {
    if (delta <= 3)
        return false;
    if (delta == 4)
        return n == 9 || n == 13 || n == 17 || n == 20 || n == 21 || n >= 23;
    if (delta == 5)
        return n == 6 || n >= 9;
    return true;
}

std::string hypo_clause(int delta) {
    if (delta == 0)
        return "single vertex: E = 0 < 1";
    if (delta == 1)
        return "single edge: E = 2 = n, never below";
    if (delta == 2)
        return "paths: hypoenergetic only at n = 3";
    if (delta == 3)
        return "maximum degree 3: hypoenergetic only at n = 4 and n = 7";
    return "maximum degree >= 4: hypoenergetic trees exist for every feasible order";
}

std::string strong_clause(int delta) {
    if (delta <= 3)
        return "maximum degree <= 3 admits no strongly hypoenergetic tree";
    if (delta == 4)
        return "maximum degree 4: strongly hypoenergetic orders are 9, 13, 17, 20, 21 and all n >= 23";
    if (delta == 5)
        return "maximum degree 5: strongly hypoenergetic orders are 6 and all n >= 9";
    return "maximum degree >= 6: strongly hypoenergetic trees exist for every feasible order";
}

Verdict base_verdict(int n, int delta, bool strong_question) {
    Verdict v;
    v.n = n;
    v.delta = delta;
    v.feasible = degree_feasible(n, delta);
    if (!v.feasible) {
        v.clause = "no tree of order " + std::to_string(n) + " with maximum degree " +
                   std::to_string(delta) + " exists";
        return v;
    }
    v.hypo_exists = hypo_flag(n, delta);
    v.strong_exists = strong_flag(n, delta);
    v.clause = strong_question ? strong_clause(delta) : hypo_clause(delta);
    return v;
}

} // namespace

Verdict hypo_exists(int n, int delta) {
    return base_verdict(n, delta, false);
}

Verdict strong_exists(int n, int delta) {
    return base_verdict(n, delta, true);
}

bool certify(const Tree& t, bool strong, double tol) {
    const EnergyResult r = energy(t, tol);
    const double threshold = t.order() - (strong ? 1 : 0);
    return r.energy + r.error_bound < threshold;
}

namespace {

int lowest_leaf(const Tree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1)
            return v;
    throw Error(errc::internal_inconsistency, "tree without leaves");
}

// base with k copies of the 5-star glued on, each merged leaf-to-leaf so the
// maximum degree is max(delta(base), 4).
Tree star5_chain(Tree base, int k) {
    const Tree s5 = star(5);
    for (int i = 0; i < k; ++i)
        base = coalesce(base, lowest_leaf(base), s5, 1);
    return base;
}

bool try_candidate(Verdict& v, const Tree& t, bool strong, double tol, const char* strategy) {
    if (t.order() != v.n || max_degree(t) != v.delta)
        return false;
    const EnergyResult r = energy(t, tol);
    const double threshold = v.n - (strong ? 1 : 0);
    if (!(r.energy + r.error_bound < threshold))
        return false;
    v.witness = t;
    v.certificate = r;
    v.clause += std::string(" [witness: ") + strategy + "]";
    return true;
}

} // namespace

Verdict witness(int n, int delta, bool strong, double tol) {
    Verdict v = base_verdict(n, delta, strong);
    const bool yes = strong ? v.strong_exists : v.hypo_exists;
    if (!v.feasible || !yes)
        throw std::invalid_argument("witness requires a yes verdict for (n=" + std::to_string(n) +
                                    ", delta=" + std::to_string(delta) + ")");

    if (n == delta + 1 && try_candidate(v, star(n), strong, tol, "star"))
        return v;

    if (degree_feasible(n, delta) && delta >= 2 &&
        try_candidate(v, max_nullity_tree(n, delta), strong, tol, "max-nullity chain"))
        return v;

    if (delta == 4 && n >= 5 && try_candidate(v, tstar(n, 3), strong, tol, "minimum-energy family"))
        return v;

    // Coalescence chains: minimum-energy bases and the 6-vertex tree for
    // delta 4, max-nullity bases for delta >= 5, each extended by 4 vertices
    // per glued 5-star; plus the sporadic 12-vertex pendant construction.
    if (delta == 4) {
        for (int base_n : {20, 23, 26})
            if (n > base_n && (n - base_n) % 4 == 0 &&
                try_candidate(v, star5_chain(tstar(base_n, 3), (n - base_n) / 4), strong, tol,
                              "coalescence chain"))
                return v;
        if (n > 10 && n % 4 == 2 && strong_flag(n - 5, 4)) {
            const Tree t6 = tstar(6, 3);
            const Tree sub = *witness(n - 5, 4, true, tol).witness;
            if (try_candidate(v, coalesce(t6, lowest_leaf(t6), sub, lowest_leaf(sub)), strong, tol,
                              "coalescence chain"))
                return v;
        }
    }
    if (n == 12 && delta == 5 &&
        try_candidate(v, coalesce(max_nullity_tree(11, 5), lowest_leaf(max_nullity_tree(11, 5)),
                                  path(2), 0),
                      strong, tol, "coalescence chain"))
        return v;
    if (delta >= 5)
        for (int k = 1; n - 4 * k >= delta + 1; ++k)
            if (try_candidate(v, star5_chain(max_nullity_tree(n - 4 * k, delta), k), strong, tol,
                              "coalescence chain"))
                return v;

    if (n <= 18) {
        TreeStream s(n, delta);
        while (auto t = s.next())
            if (try_candidate(v, *t, strong, tol, "exhaustive search"))
                return v;
    }

    throw Error(errc::no_witness_found,
                "witness battery exhausted for (n=" + std::to_string(n) + ", delta=" +
                    std::to_string(delta) + (strong ? ", strong)" : ", hypo)"));
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["n"] = v.n;
    j["delta"] = v.delta;
    j["feasible"] = v.feasible;
    j["hypo"] = v.hypo_exists;
    j["strong"] = v.strong_exists;
    j["clause"] = v.clause;
    if (v.witness) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [a, b] : v.witness->edges())
            edges.push_back({a, b});
        j["witness_edges"] = edges;
    }
    if (v.certificate) {
        j["energy"] = v.certificate->energy;
        j["error_bound"] = v.certificate->error_bound;
        const double e = v.certificate->energy + v.certificate->error_bound;
        const double threshold = (v.strong_exists && e < v.n - 1) ? v.n - 1 : v.n;
        j["margin"] = threshold - e;
    }
    return j.dump();
}

} // namespace hypotree
