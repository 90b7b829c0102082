#include "hypotree/poly.hpp"

#include <stdexcept>

namespace hypotree {
namespace poly {

int degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

bool is_zero(const IPoly& p) { return p.empty(); }

IPoly add(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

IPoly sub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

IPoly mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty())
        return {};
    IPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

IPoly scale(const IPoly& a, const BigInt& c) {
    if (c == 0)
        return {};
    IPoly r = a;
    for (auto& x : r)
        x *= c;
    return r;
}

IPoly negate(const IPoly& a) {
    IPoly r = a;
    for (auto& x : r)
        x = -x;
    return r;
}

IPoly derivative(const IPoly& a) {
    if (a.size() <= 1)
        return {};
    IPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * BigInt(i);
    trim(r);
    return r;
}

IPoly div_exact(const IPoly& a, const IPoly& b) {
    if (b.empty())
        throw std::invalid_argument("division by zero polynomial");
    IPoly rem = a, q(a.size(), BigInt(0));
    const BigInt& lead = b.back();
    while (degree(rem) >= degree(b)) {
        BigInt c = rem.back() / lead;
        if (c * lead != rem.back())
            throw std::invalid_argument("inexact polynomial division");
        int shift = degree(rem) - degree(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            rem[i + shift] -= c * b[i];
        trim(rem);
        if (rem.empty())
            break;
    }
    if (!rem.empty())
        throw std::invalid_argument("inexact polynomial division (nonzero remainder)");
    trim(q);
    return q;
}

IPoly pseudo_rem(const IPoly& a, const IPoly& b) {
    if (b.empty())
        throw std::invalid_argument("pseudo_rem by zero polynomial");
    int da = degree(a), db = degree(b);
    if (da < db)
        return a;
    BigInt lead = abs(b.back());
    BigInt factor = 1;
    for (int i = 0; i < da - db + 1; ++i)
        factor *= lead;
    IPoly rem = scale(a, factor);
    while (!rem.empty() && degree(rem) >= db) {
        BigInt c = rem.back() / b.back(); // exact: |lc(b)|^(da-db+1) premultiplier
        int shift = degree(rem) - db;
        for (size_t i = 0; i < b.size(); ++i)
            rem[i + shift] -= c * b[i];
        trim(rem);
    }
    return rem;
}

IPoly primitive_part(const IPoly& a) {
    if (a.empty())
        return {};
    BigInt g = 0;
    for (const auto& c : a)
        g = boost::multiprecision::gcd(g, c);
    if (g == 0)
        return {};
    IPoly r = a;
    for (auto& c : r)
        c /= g;
    return r;
}

IPoly gcd(const IPoly& a, const IPoly& b) {
    IPoly x = primitive_part(a), y = primitive_part(b);
    if (x.empty())
        return y;
    if (y.empty())
        return x;
    if (degree(x) < degree(y))
        std::swap(x, y);
    while (!y.empty()) {
        IPoly r = primitive_part(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty() && x.back() < 0)
        x = negate(x);
    return x;
}

int sign_at(const IPoly& p, const BigInt& num, const BigInt& den) {
    if (p.empty())
        return 0;
    // sum c_i num^i den^(deg-i), den > 0 so the sign matches p(num/den)
    BigInt acc = 0, npow = 1;
    std::vector<BigInt> dpow(p.size());
    dpow[p.size() - 1] = 1;
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i)
        dpow[i] = dpow[i + 1] * den;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0)
            acc += p[i] * npow * dpow[i];
        npow *= num;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

std::vector<std::pair<IPoly, int>> squarefree_decompose(const IPoly& p) {
    std::vector<std::pair<IPoly, int>> out;
    IPoly f = primitive_part(p);
    if (degree(f) < 1)
        return out;
    if (f.back() < 0)
        f = negate(f);
    IPoly g = gcd(f, derivative(f));
    if (degree(g) < 1) {
        out.emplace_back(f, 1);
        return out;
    }
    // Yun's algorithm
    IPoly c = div_exact(f, g);
    IPoly d = sub(div_exact(derivative(f), g), derivative(c));
    int i = 1;
    while (degree(c) > 0) {
        IPoly s = gcd(c, d);
        if (degree(s) > 0)
            out.emplace_back(s, i);
        c = div_exact(c, s.empty() ? IPoly{BigInt(1)} : s);
        d = sub(div_exact(d, s.empty() ? IPoly{BigInt(1)} : s), derivative(c));
        ++i;
    }
    return out;
}

} // namespace poly
} // namespace hypotree
