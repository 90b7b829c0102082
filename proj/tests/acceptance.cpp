// Acceptance gate: one line per criterion, exit status = number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypotree/classify.hpp"
#include "hypotree/constructions.hpp"
#include "hypotree/enumeration.hpp"
#include "hypotree/io.hpp"
#include "hypotree/spectral.hpp"
#include "test_util.hpp"

using namespace hypotree;

namespace {

constexpr double kTable1Tol = 5e-5;
constexpr double kCitedTol = 1e-3;
constexpr double kBackendAgreeTol = 1e-8;
constexpr double kMomentTol = 1e-6;

int failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---- criterion 1: the twelve tabulated minimum energies at max degree 4

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<int, double> rows[] = {
        {10, 9.61686},  {11, 10.36308}, {12, 11.13490}, {14, 13.39786},
        {15, 14.26512}, {16, 15.01712}, {18, 17.24606}, {19, 18.13157},
        {20, 18.86727}, {22, 21.06862}, {23, 21.96975}, {26, 24.87008},
    };
    std::string bad;
    for (const auto& [n, expected] : rows) {
        const double e = energy(tstar(n, 3), 1e-9).energy;
        if (std::abs(e - expected) > kTable1Tol)
            bad += " n=" + std::to_string(n) + fmt(" computed %.6f expected %.5f;", e, expected);
    }
    const double dt = seconds_since(t0);
    const bool in_time = dt < 10.0;
    if (bad.empty() && in_time)
        verdict(1, true, fmt("12 tabulated energies within 5e-5, %.2f s", dt));
    else if (!bad.empty())
        verdict(1, false, "mismatches:" + bad);
    else
        verdict(1, false, fmt("values ok but runtime %.1f s exceeds 10 s", dt));
}

// ---- criterion 2: every individually cited energy value

void criterion2() {
    struct Row {
        std::string label;
        double computed;
        double expected;
    };
    std::vector<Row> rows = {
        {"S1", energy(figure1(Figure1Name::S1), 1e-9).energy, 0.0},
        {"S3", energy(figure1(Figure1Name::S3), 1e-9).energy, 2.828},
        {"S4", energy(figure1(Figure1Name::S4), 1e-9).energy, 3.464},
        {"W", energy(figure1(Figure1Name::W), 1e-9).energy, 6.828},
        {"T6", energy(tstar(6, 3), 1e-9).energy, 5.818},
    };
    auto exact_degree_energies = [](int n, int delta) {
        std::vector<double> es;
        TreeStream s(n, delta);
        while (auto t = s.next())
            if (max_degree(*t) == delta)
                es.push_back(energy(*t, 1e-9).energy);
        std::sort(es.begin(), es.end());
        return es;
    };
    const auto u86 = exact_degree_energies(8, 6);
    const auto u75 = exact_degree_energies(7, 5);
    const auto t85 = exact_degree_energies(8, 5);
    bool shape_ok = u86.size() == 1 && u75.size() == 1 && t85.size() == 3;
    if (shape_ok) {
        rows.push_back({"unique(8,6)", u86[0], 6.774});
        rows.push_back({"unique(7,5)", u75[0], 6.324});
        const double cited[] = {7.114, 7.212, 8.152};
        for (int i = 0; i < 3; ++i)
            rows.push_back({"trio(8,5)[" + std::to_string(i) + "]", t85[i], cited[i]});
    }
    std::string bad;
    for (const auto& r : rows)
        if (std::abs(r.computed - r.expected) > kCitedTol)
            bad += " " + r.label + fmt(" computed %.6f cited %.3f;", r.computed, r.expected);
    if (!shape_ok)
        verdict(2, false, "enumeration did not produce the cited tree counts");
    else if (bad.empty())
        verdict(2, true, "all cited energies within 1e-3");
    else
        verdict(2, false, "outside 1e-3:" + bad);
}

// ---- criterion 3: minimality of the degree-4 family by exhaustive search

void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    std::string bad;
    for (int n = 1; n <= 14; ++n) {
        const MinEnergyResult m = min_energy_tree(n, 4, 1e-9);
        if (canonical_code(m.tree) != canonical_code(tstar(n, 3)))
            bad += " n=" + std::to_string(n) + " minimizer differs;";
        else if (!m.unique)
            bad += " n=" + std::to_string(n) + " minimizer not unique;";
    }
    const double dt = seconds_since(t0);
    if (!bad.empty())
        verdict(3, false, bad);
    else if (dt >= 120.0)
        verdict(3, false, fmt("minimizers ok but runtime %.1f s exceeds 120 s", dt));
    else
        verdict(3, true, fmt("unique minimum through n=14, %.1f s", dt));
}

// ---- criterion 4: exhaustive search agrees with the classification tables

void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::string bad;
    for (int n = 1; n <= 16; ++n) {
        const auto scan = exhaustive_verdict_scan(n);
        for (int delta = 0; delta < n; ++delta) {
            if (!degree_feasible(n, delta))
                continue;
            const bool h = hypo_exists(n, delta).hypo_exists;
            const bool s = strong_exists(n, delta).strong_exists;
            if (scan[delta].first != h)
                bad += " (" + std::to_string(n) + "," + std::to_string(delta) + ") hypo;";
            if (scan[delta].second != s)
                bad += " (" + std::to_string(n) + "," + std::to_string(delta) + ") strong;";
        }
    }
    if (bad.empty())
        verdict(4, true, fmt("all feasible pairs through n=16 match, %.1f s", seconds_since(t0)));
    else
        verdict(4, false, "table disagreements:" + bad);
}

// ---- criterion 5: certified witnesses for every yes verdict in range

void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    std::string bad;
    for (int n = 1; n <= 30; ++n)
        for (int delta = 0; delta <= 10; ++delta) {
            if (!degree_feasible(n, delta))
                continue;
            for (bool strong : {false, true}) {
                const Verdict base = strong ? strong_exists(n, delta) : hypo_exists(n, delta);
                if (!(strong ? base.strong_exists : base.hypo_exists))
                    continue;
                ++checked;
                try {
                    const Verdict v = witness(n, delta, strong, 1e-9);
                    const double threshold = n - (strong ? 1 : 0);
                    const bool ok = v.witness && v.witness->order() == n &&
                                    max_degree(*v.witness) == delta && v.certificate &&
                                    v.certificate->energy + v.certificate->error_bound < threshold;
                    if (!ok)
                        bad += " (" + std::to_string(n) + "," + std::to_string(delta) +
                               (strong ? ",strong)" : ",hypo)");
                } catch (const Error&) {
                    bad += " (" + std::to_string(n) + "," + std::to_string(delta) +
                           (strong ? ",strong) threw" : ",hypo) threw");
                }
            }
        }
    if (bad.empty())
        verdict(5, true,
                std::to_string(checked) + " yes verdicts, all witnesses certified," +
                    fmt(" %.1f s", seconds_since(t0)));
    else
        verdict(5, false, "uncertified:" + bad);
}

// ---- criterion 6: the extremal nullity formula on the full grid

void criterion6() {
    std::string bad;
    for (int delta = 2; delta <= 8; ++delta)
        for (int n = delta + 1; n <= 40; ++n) {
            const Tree t = max_nullity_tree(n, delta);
            const long long expected = n - 2 * nullity_cover_size(n, delta);
            // nullity() checks the matching-number route against the
            // trailing-coefficient route internally
            const int direct = t.order() - 2 * matching_number(t);
            if (nullity(t) != expected || direct != expected ||
                char_poly(t).trailing_zeros() != expected || max_degree(t) != delta)
                bad += " (" + std::to_string(n) + "," + std::to_string(delta) + ");";
        }
    if (bad.empty())
        verdict(6, true, "nullity n - 2*ceil((n-1)/delta) achieved on delta 2..8, n to 40");
    else
        verdict(6, false, "grid failures:" + bad);
}

// ---- criterion 7: property suites

void criterion7() {
    std::string bad;

    // coalescence never raises energy above the sum of the parts
    std::mt19937 rng(20260825);
    std::uniform_int_distribution<int> order(2, 16);
    for (int rep = 0; rep < 500; ++rep) {
        const Tree a = testutil::random_tree(order(rng), rng);
        const Tree b = testutil::random_tree(order(rng), rng);
        std::uniform_int_distribution<int> ua(0, a.order() - 1), vb(0, b.order() - 1);
        const Tree joined = coalesce(a, ua(rng), b, vb(rng));
        const EnergyResult ea = energy(a, 1e-9), eb = energy(b, 1e-9),
                           ej = energy(joined, 1e-9);
        if (ej.energy - ej.error_bound >
            ea.energy + eb.energy + ea.error_bound + eb.error_bound) {
            bad += " coalescence rep " + std::to_string(rep) + ";";
            break;
        }
    }
    // identifying with a single vertex changes nothing
    for (int n : {2, 5, 9}) {
        const Tree t = testutil::random_tree(n, rng);
        if (canonical_code(coalesce(t, 0, star(1), 0)) != canonical_code(t))
            bad += " one-vertex coalescence changed the tree;";
    }

    // nullity upper bound, equality exactly at stars
    for (int n = 2; n <= 12; ++n) {
        TreeStream s(n, std::nullopt);
        while (auto t = s.next()) {
            const EnergyResult r = energy(*t, 1e-9);
            const double bound = energy_upper_bound(*t);
            if (r.energy > bound + r.error_bound) {
                bad += " bound violated at n=" + std::to_string(n) + ";";
                break;
            }
            const bool is_star = max_degree(*t) == n - 1;
            if (is_star && std::abs(r.energy - bound) > 2 * r.error_bound + 1e-12)
                bad += " star equality failed at n=" + std::to_string(n) + ";";
            if (!is_star && !(r.energy < bound))
                bad += " non-star equality at n=" + std::to_string(n) + ";";
        }
    }

    // spectral moments on every tree through n = 12
    for (int n = 1; n <= 12; ++n) {
        TreeStream s(n, std::nullopt);
        while (auto t = s.next()) {
            const EnergyResult r = energy(*t, 1e-9);
            double sum = 0, sq = 0;
            for (double x : r.eigenvalues) {
                sum += x;
                sq += x * x;
            }
            if (std::abs(sum) > kMomentTol || std::abs(sq - 2.0 * (n - 1)) > kMomentTol) {
                bad += " moments off at n=" + std::to_string(n) + ";";
                break;
            }
        }
    }

    // the two backends agree far inside their error budgets
    std::vector<Tree> sample;
    for (int n : {10, 25, 40, 60}) {
        sample.push_back(path(n));
        sample.push_back(star(n));
        sample.push_back(tstar(n, 3));
        sample.push_back(max_nullity_tree(n, 5));
        sample.push_back(testutil::random_tree(n, rng));
    }
    for (const Tree& t : sample) {
        const double ex = energy(t, 1e-11, Method::exact_roots).energy;
        const double de = energy(t, 1e-10, Method::dense_eigensolver).energy;
        if (std::abs(ex - de) > kBackendAgreeTol) {
            bad += fmt(" backends differ by %.2e at n=", std::abs(ex - de)) +
                   std::to_string(t.order()) + ";";
        }
    }

    if (bad.empty())
        verdict(7, true,
                "coalescence, nullity bound, moment, and backend-agreement suites clean");
    else
        verdict(7, false, bad);
}

// ---- criterion 8: documented desk-scale limitation, witnesses extend past it

void criterion8() {
#ifndef HYPOTREE_SOURCE_DIR
    verdict(8, false, "source dir not wired in");
#else
    std::ifstream readme(std::string(HYPOTREE_SOURCE_DIR) + "/README.md");
    std::stringstream buf;
    buf << readme.rdbuf();
    const std::string text = buf.str();
    const bool documented = !text.empty() && text.find("desk scale") != std::string::npos &&
                            text.find("n = 30") != std::string::npos;
    bool extended = false;
    std::string note;
    try {
        const Verdict v = witness(40, 4, true, 1e-9);
        extended = v.witness && v.witness->order() == 40 && max_degree(*v.witness) == 4 &&
                   v.certificate->energy + v.certificate->error_bound < 39.0;
        note = fmt("witness(40,4,strong) energy %.5f", v.certificate->energy);
    } catch (const Error& e) {
        note = std::string("witness(40,4,strong) threw: ") + e.what();
    }
    if (documented && extended)
        verdict(8, true, "limitation documented in README; " + note);
    else if (!documented)
        verdict(8, false, "README does not state the desk-scale limitation");
    else
        verdict(8, false, note);
#endif
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    return failures;
}
