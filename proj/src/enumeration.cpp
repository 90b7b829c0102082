#include "hypotree/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypotree/error.hpp"

namespace hypotree {

namespace {

// Parent of each vertex in the rooted tree a level sequence describes:
// the nearest earlier vertex one level up.
std::vector<int> sequence_parents(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<int> parent(n, -1), stack;
    for (int i = 0; i < n; ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i])
            stack.pop_back();
        parent[i] = stack.empty() ? -1 : stack.back();
        stack.push_back(i);
    }
    return parent;
}

// Canonical (lexicographically maximal) level sequence of t rooted at root.
// Child blocks sort in plain descending lexicographic order; for subtree
// sequences that is exactly the order maximizing the concatenation.
std::vector<int> canonical_level_sequence(const Tree& t, int root) {
    struct Frame {
        int v, parent;
        size_t next_child = 0;
        std::vector<std::vector<int>> blocks;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    std::vector<int> result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbr = t.neighbors(f.v);
        if (f.next_child < nbr.size()) {
            const int w = nbr[f.next_child++];
            if (w != f.parent)
                stack.push_back({w, f.v});
            continue;
        }
        std::sort(f.blocks.begin(), f.blocks.end(),
                  [](const auto& a, const auto& b) { return a > b; });
        std::vector<int> seq{0}; // relative depth, shifted by parent later
        for (const auto& b : f.blocks)
            for (int x : b)
                seq.push_back(x + 1);
        if (stack.size() == 1) {
            result.resize(seq.size());
            for (size_t i = 0; i < seq.size(); ++i)
                result[i] = seq[i] + 1;
            stack.pop_back();
        } else {
            Frame& up = stack[stack.size() - 2];
            up.blocks.push_back(std::move(seq));
            stack.pop_back();
        }
    }
    return result;
}

} // namespace

TreeStream::TreeStream(int n, std::optional<int> delta_cap) : n_(n), cap_(delta_cap) {
    if (n < 1)
        throw std::invalid_argument("tree order must be >= 1");
    levels_.resize(n);
    for (int i = 0; i < n; ++i)
        levels_[i] = i + 1;
}

bool TreeStream::advance_raw() {
    int p = -1;
    for (int i = n_ - 1; i >= 1; --i)
        if (levels_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) {
        exhausted_ = true;
        return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (levels_[i] == levels_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i)
        levels_[i] = levels_[i - (p - q)];
    return true;
}

void TreeStream::jump_prefix(int keep) {
    // The block sharing levels_[0..keep] ends at the sequence whose suffix is
    // all 2s (leaves under the root, sorted last); step past that.
    for (int i = keep + 1; i < n_; ++i)
        levels_[i] = 2;
    advance_raw();
}

int TreeStream::first_cap_violation() const {
    if (!cap_)
        return -1;
    const int cap = *cap_;
    std::vector<int> deg(n_, 0), stack;
    for (int i = 0; i < n_; ++i) {
        while (!stack.empty() && levels_[stack.back()] >= levels_[i])
            stack.pop_back();
        if (!stack.empty()) {
            const int parent = stack.back();
            if (++deg[parent] > cap || ++deg[i] > cap)
                return i;
        }
        stack.push_back(i);
    }
    return -1;
}

Tree TreeStream::current_tree() const {
    const auto parent = sequence_parents(levels_);
    std::vector<Edge> edges;
    for (int i = 1; i < n_; ++i)
        edges.emplace_back(parent[i], i);
    return new_tree(n_, edges);
}

bool TreeStream::is_free_representative() const {
    if (n_ <= 2)
        return true;
    const Tree t = current_tree();
    const auto c = centroids(t);
    if (c.size() == 1)
        return c[0] == 0;
    if (c[0] != 0 && c[1] != 0)
        return false;
    const int other = c[0] == 0 ? c[1] : c[0];
    // Bicentroid: both rootings appear in the raw stream; keep the one whose
    // canonical sequence is not smaller (equal means the halves are swappable
    // and the sequence occurs once anyway).
    return levels_ >= canonical_level_sequence(t, other);
}

std::optional<Tree> TreeStream::next() {
    while (!exhausted_) {
        if (fresh_)
            fresh_ = false;
        else if (!advance_raw())
            break;
        const int bad = first_cap_violation();
        if (bad >= 0) {
            jump_prefix(bad);
            fresh_ = true; // jump already advanced; evaluate the new sequence
            continue;
        }
        if (is_free_representative())
            return current_tree();
    }
    return std::nullopt;
}

TreeStream free_trees(int n, std::optional<int> delta_cap) {
    return TreeStream(n, delta_cap);
}

std::vector<Tree> all_free_trees(int n, std::optional<int> delta_cap) {
    TreeStream s(n, delta_cap);
    std::vector<Tree> out;
    while (auto t = s.next())
        out.push_back(std::move(*t));
    return out;
}

MinEnergyResult min_energy_tree(int n, int delta_cap, double tol) {
    if (n < 1 || delta_cap < 2)
        throw std::invalid_argument("min_energy_tree requires n >= 1, delta_cap >= 2");
    TreeStream s(n, delta_cap);
    std::optional<MinEnergyResult> best;
    double runner_up = std::numeric_limits<double>::infinity();
    double runner_err = 0.0;
    while (auto t = s.next()) {
        EnergyResult r = energy(*t, tol);
        if (!best || r.energy < best->energy.energy) {
            if (best) {
                runner_up = best->energy.energy;
                runner_err = best->energy.error_bound;
            }
            best = MinEnergyResult{std::move(*t), r, true};
        } else if (r.energy < runner_up) {
            runner_up = r.energy;
            runner_err = r.error_bound;
        }
    }
    if (!best)
        throw Error(errc::internal_inconsistency, "empty tree stream");
    best->unique = runner_up - best->energy.energy > best->energy.error_bound + runner_err;
    return *best;
}

namespace {

void check_guard(int n, bool override_guard) {
    if (n > kEnumerationGuard && !override_guard)
        throw Error(errc::budget_exceeded,
                    "exhaustive search capped at n=" + std::to_string(kEnumerationGuard) +
                        " (order " + std::to_string(n) + " requested; pass the override to force)");
}

} // namespace

bool exhaustive_verdict(int n, int delta, bool strong, bool override_guard, double tol) {
    check_guard(n, override_guard);
    if (n < 1)
        throw std::invalid_argument("order must be >= 1");
    const double threshold = strong ? n - 1 : n;
    TreeStream s(n, delta);
    while (auto t = s.next()) {
        if (max_degree(*t) != delta)
            continue;
        if (energy_upper_bound(*t) < threshold)
            return true;
        const EnergyResult r = energy(*t, tol);
        if (r.energy + r.error_bound < threshold)
            return true;
    }
    return false;
}

std::vector<std::pair<bool, bool>> exhaustive_verdict_scan(int n, bool override_guard, double tol) {
    check_guard(n, override_guard);
    if (n < 1)
        throw std::invalid_argument("order must be >= 1");
    std::vector<std::pair<bool, bool>> res(n, {false, false});
    TreeStream s(n, std::nullopt);
    while (auto t = s.next()) {
        auto& slot = res[max_degree(*t)];
        if (slot.first && slot.second)
            continue;
        const EnergyResult r = energy(*t, tol);
        slot.first = slot.first || r.energy + r.error_bound < n;
        slot.second = slot.second || r.energy + r.error_bound < n - 1;
    }
    return res;
}

} // namespace hypotree
