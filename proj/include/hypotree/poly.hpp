#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypotree {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial, coefficients low to high, no trailing zeros
/// (the zero polynomial is an empty vector).
using IPoly = std::vector<BigInt>;

namespace poly {

int degree(const IPoly& p); // -1 for zero
void trim(IPoly& p);
bool is_zero(const IPoly& p);
IPoly add(const IPoly& a, const IPoly& b);
IPoly sub(const IPoly& a, const IPoly& b);
IPoly mul(const IPoly& a, const IPoly& b);
IPoly scale(const IPoly& a, const BigInt& c);
IPoly derivative(const IPoly& a);
IPoly negate(const IPoly& a);

/// Exact quotient a / b; throws on inexact division.
IPoly div_exact(const IPoly& a, const IPoly& b);

/// Remainder of |lc(b)|^(deg a - deg b + 1) * a  divided by b.
/// The positive premultiplier keeps every step integral without
/// disturbing the sign, so Sturm chains stay valid.
IPoly pseudo_rem(const IPoly& a, const IPoly& b);

/// Divide by the gcd of the coefficients; sign is preserved.
IPoly primitive_part(const IPoly& a);

/// Primitive polynomial gcd, positive leading coefficient.
IPoly gcd(const IPoly& a, const IPoly& b);

/// Sign of p(num/den), den > 0: evaluates sum c_i num^i den^(deg-i).
int sign_at(const IPoly& p, const BigInt& num, const BigInt& den);

/// Yun squarefree decomposition: returns {(q_i, i)} with p = lc * prod q_i^i,
/// the q_i squarefree, pairwise coprime, multiplicity i >= 1.
std::vector<std::pair<IPoly, int>> squarefree_decompose(const IPoly& p);

} // namespace poly
} // namespace hypotree
