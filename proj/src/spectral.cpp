#include "hypotree/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace hypotree {

namespace {

// Post-order over the tree rooted at 0: returns (order, parent).
std::pair<std::vector<int>, std::vector<int>> rooted_order(const Tree& t) {
    const int n = t.order();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    return {order, parent};
}

} // namespace

int CharPoly::trailing_zeros() const {
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            return static_cast<int>(i);
    return degree();
}

BigInt CharPoly::matching_count(int k) const {
    const int n = degree();
    if (k < 0 || n - 2 * k < 0)
        return 0;
    BigInt c = coeffs[n - 2 * k];
    return (k % 2 == 0) ? c : -c;
}

CharPoly char_poly(const Tree& t) {
    // Rooted two-polynomial recursion:
    //   p_v = x * prod(p_c) - sum_j q_j * prod_{i != j} p_i,   q_v = prod(p_c)
    // p_v is the characteristic polynomial of v's subtree, q_v of the
    // subtree minus v. Exact integers throughout.
    const int n = t.order();
    auto [order, parent] = rooted_order(t);
    std::vector<IPoly> p(n), q(n);
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0)
            children[parent[v]].push_back(v);
    const IPoly x{BigInt(0), BigInt(1)};
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[i];
        const auto& ch = children[v];
        if (ch.empty()) {
            p[v] = x;
            q[v] = IPoly{BigInt(1)};
            continue;
        }
        const size_t k = ch.size();
        // prefix[j] = prod of p over children [0, j), suffix[j] over [j, k)
        std::vector<IPoly> prefix(k + 1), suffix(k + 1);
        prefix[0] = IPoly{BigInt(1)};
        for (size_t j = 0; j < k; ++j)
            prefix[j + 1] = poly::mul(prefix[j], p[ch[j]]);
        suffix[k] = IPoly{BigInt(1)};
        for (size_t j = k; j-- > 0;)
            suffix[j] = poly::mul(p[ch[j]], suffix[j + 1]);
        IPoly sum;
        for (size_t j = 0; j < k; ++j)
            sum = poly::add(sum, poly::mul(q[ch[j]], poly::mul(prefix[j], suffix[j + 1])));
        q[v] = prefix[k];
        p[v] = poly::sub(poly::mul(x, q[v]), sum);
    }
    CharPoly out{p[0]};
    if (out.degree() != n)
        throw Error(errc::internal_inconsistency, "characteristic polynomial degree");
    return out;
}

int matching_number(const Tree& t) {
    const int n = t.order();
    auto [order, parent] = rooted_order(t);
    constexpr int kNeg = std::numeric_limits<int>::min() / 2;
    std::vector<int> unmatched(n, 0), matched(n, kNeg);
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[i];
        int base = 0;
        for (int w : t.neighbors(v))
            if (w != parent[v])
                base += std::max(unmatched[w], matched[w]);
        unmatched[v] = base;
        int best = kNeg;
        for (int w : t.neighbors(v))
            if (w != parent[v])
                best = std::max(best, base - std::max(unmatched[w], matched[w]) + unmatched[w] + 1);
        matched[v] = best;
    }
    return std::max(unmatched[0], matched[0]);
}

int nullity(const Tree& t) {
    const int n = t.order();
    const int via_matching = n - 2 * matching_number(t);
    const int via_poly = char_poly(t).trailing_zeros();
    if (via_matching != via_poly)
        throw Error(errc::internal_inconsistency,
                    "nullity " + std::to_string(via_matching) + " (matching) vs " +
                        std::to_string(via_poly) + " (trailing coefficient)");
    return via_matching;
}

namespace {

// ---- exact_roots backend ----------------------------------------------

// The matching polynomial in y = x^2: phi(x) = x^n0 * M(x^2),
// M monic of degree mu with M(0) != 0. Roots of M are the squared
// nonzero eigenvalues.
IPoly y_polynomial(const CharPoly& cp, int n0) {
    const int n = cp.degree();
    const int mu = (n - n0) / 2;
    IPoly m(mu + 1);
    for (int j = 0; j <= mu; ++j)
        m[j] = cp.coeffs[n0 + 2 * j];
    for (int i = 0; i < static_cast<int>(cp.coeffs.size()); ++i) {
        const bool structural = i >= n0 && (i - n0) % 2 == 0;
        if (!structural && cp.coeffs[i] != 0)
            throw Error(errc::internal_inconsistency, "characteristic polynomial parity");
    }
    return m;
}

struct SturmChain {
    std::vector<IPoly> polys;

    explicit SturmChain(const IPoly& squarefree) {
        polys.push_back(squarefree);
        IPoly d = poly::derivative(squarefree);
        if (!d.empty())
            polys.push_back(d);
        while (polys.size() >= 2) {
            IPoly r = poly::pseudo_rem(polys[polys.size() - 2], polys.back());
            if (r.empty())
                break;
            polys.push_back(poly::primitive_part(poly::negate(r)));
            if (poly::degree(polys.back()) == 0)
                break;
        }
    }

    // Sign variations at num/den (den > 0); zero signs skipped, so
    // variations(a) - variations(b) counts roots in the half-open (a, b].
    int variations(const BigInt& num, const BigInt& den) const {
        int count = 0, prev = 0;
        for (const auto& p : polys) {
            int s = poly::sign_at(p, num, den);
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++count;
            prev = s;
        }
        return count;
    }
};

struct RootInterval {
    double lo_sqrt; // certified enclosure of the positive eigenvalue
    double hi_sqrt;
    int multiplicity;
};

double rational_to_double(const BigInt& num, const BigInt& den) {
    return num.convert_to<double>() / den.convert_to<double>();
}

// Isolate and refine all roots of the squarefree factor in (0, bound];
// the y-interval width target tol2 yields sqrt-interval width < sqrt(tol2).
void isolate_roots(const IPoly& factor, int multiplicity, const BigInt& bound, double tol2,
                   std::vector<RootInterval>& out) {
    if (poly::degree(factor) < 1)
        return;
    SturmChain chain(factor);
    struct Segment {
        BigInt lo, hi, den;
        int v_lo, v_hi;
    };
    std::deque<Segment> work;
    {
        int v0 = chain.variations(0, 1);
        int v1 = chain.variations(bound, 1);
        if (v0 - v1 > 0)
            work.push_back({BigInt(0), bound, BigInt(1), v0, v1});
    }
    while (!work.empty()) {
        Segment seg = std::move(work.front());
        work.pop_front();
        const int roots = seg.v_lo - seg.v_hi;
        if (roots <= 0)
            continue;
        const double width = rational_to_double(seg.hi - seg.lo, seg.den);
        if (roots == 1 && width < tol2) {
            const double lo = rational_to_double(seg.lo, seg.den);
            const double hi = rational_to_double(seg.hi, seg.den);
            out.push_back({std::sqrt(std::max(lo, 0.0)), std::sqrt(hi), multiplicity});
            continue;
        }
        BigInt mid = seg.lo + seg.hi, den = seg.den * 2;
        if (mid % 2 == 0) {
            mid /= 2;
            den = seg.den;
        } else {
            seg.lo *= 2;
            seg.hi *= 2;
        }
        const int v_mid = chain.variations(mid, den);
        work.push_back({seg.lo, mid, den, seg.v_lo, v_mid});
        work.push_back({mid, seg.hi, den, v_mid, seg.v_hi});
    }
}

std::vector<double> assemble_spectrum(const std::vector<RootInterval>& roots, int n0,
                                      double* energy_out, double* err_out) {
    std::vector<double> eig;
    double energy = 0.0, err = 0.0;
    for (const auto& r : roots) {
        const double lambda = 0.5 * (r.lo_sqrt + r.hi_sqrt);
        const double half = 0.5 * (r.hi_sqrt - r.lo_sqrt) + 8 * DBL_EPSILON * (r.hi_sqrt + 1.0);
        for (int m = 0; m < r.multiplicity; ++m) {
            eig.push_back(lambda);
            eig.push_back(-lambda);
            energy += 2 * lambda;
            err += 2 * half;
        }
    }
    for (int i = 0; i < n0; ++i)
        eig.push_back(0.0);
    std::sort(eig.begin(), eig.end());
    *energy_out = energy;
    *err_out = err;
    return eig;
}

EnergyResult exact_roots_energy(const Tree& t, double tol) {
    if (tol <= 0)
        throw std::invalid_argument("tol must be positive");
    if (tol < 4e-15)
        throw Error(errc::non_convergence, "tol below double precision floor");
    const int n = t.order();
    const int n0 = nullity(t);
    EnergyResult res;
    res.method = Method::exact_roots;
    res.nullity = n0;
    if (n0 == n) { // single vertex
        res.eigenvalues.assign(n, 0.0);
        return res;
    }
    const CharPoly cp = char_poly(t);
    const IPoly m = y_polynomial(cp, n0);
    const int mu = poly::degree(m);

    const long long delta = max_degree(t);
    const BigInt bound = BigInt(delta) * delta + 1; // lambda_max <= max degree

    std::vector<RootInterval> roots;
    const double tol2 = tol * tol;
    for (const auto& [factor, mult] : poly::squarefree_decompose(m))
        isolate_roots(factor, mult, bound, tol2, roots);

    int found = 0;
    for (const auto& r : roots)
        found += r.multiplicity;
    if (found != mu)
        throw Error(errc::internal_inconsistency,
                    "isolated " + std::to_string(found) + " positive roots, expected " +
                        std::to_string(mu));

    res.eigenvalues = assemble_spectrum(roots, n0, &res.energy, &res.error_bound);
    return res;
}

// ---- dense backend ------------------------------------------------------

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
}

EnergyResult dense_energy(const Tree& t, double tol) {
    if (tol <= 0)
        throw std::invalid_argument("tol must be positive");
    const int n = t.order();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : t.neighbors(u))
            a[u * n + v] = 1.0;

    const int max_sweeps = 100;
    int sweep = 0;
    while (offdiag_norm(a, n) >= tol) {
        if (++sweep > max_sweeps)
            throw Error(errc::non_convergence,
                        "Jacobi off-diagonal norm stuck above tol=" + std::to_string(tol));
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0)
                    continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double sign = theta >= 0 ? 1.0 : -1.0;
                const double tt = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;
                const double tau = s / (1.0 + c);
                a[p * n + p] -= tt * apq;
                a[q * n + q] += tt * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q)
                        continue;
                    const double arp = a[r * n + p], arq = a[r * n + q];
                    a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                    a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                }
            }
    }
    const double off = offdiag_norm(a, n);
    EnergyResult res;
    res.method = Method::dense_eigensolver;
    res.nullity = t.order() - 2 * matching_number(t);
    res.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i)
        res.eigenvalues[i] = a[i * n + i];
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    double max_abs = 0.0;
    for (double x : res.eigenvalues) {
        res.energy += std::abs(x);
        max_abs = std::max(max_abs, std::abs(x));
    }
    // Wielandt-Hoffman: sum |lambda_i - d_i| <= sqrt(n) * ||offdiag||_F,
    // plus accumulated rotation roundoff.
    res.error_bound = std::sqrt(double(n)) * off + 64 * n * DBL_EPSILON * (max_abs + 1.0) * sweep;
    return res;
}

} // namespace

std::vector<double> eigenvalues(const Tree& t, double tol, Method method) {
    return energy(t, tol, method).eigenvalues;
}

EnergyResult energy(const Tree& t, double tol, Method method) {
    return method == Method::exact_roots ? exact_roots_energy(t, tol) : dense_energy(t, tol);
}

double energy_upper_bound(const Tree& t) {
    const long long n = t.order();
    const long long n0 = nullity(t);
    return std::sqrt(2.0 * double(n - 1) * double(n - n0));
}

const char* method_name(Method m) {
    return m == Method::exact_roots ? "exact_roots" : "dense_eigensolver";
}

std::string energy_result_to_json(const Tree& t, const EnergyResult& r) {
    nlohmann::json j;
    j["n"] = t.order();
    j["energy"] = r.energy;
    j["error_bound"] = r.error_bound;
    j["nullity"] = r.nullity;
    j["eigenvalues"] = r.eigenvalues;
    j["method"] = method_name(r.method);
    std::vector<std::string> coeffs;
    for (const auto& c : char_poly(t).coeffs)
        coeffs.push_back(c.str());
    j["char_poly_coeffs"] = coeffs;
    return j.dump();
}

} // namespace hypotree
