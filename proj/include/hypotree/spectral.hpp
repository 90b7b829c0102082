#pragma once

#include <string>
#include <vector>

#include "hypotree/poly.hpp"
#include "hypotree/tree.hpp"

namespace hypotree {

/// Exact characteristic polynomial det(xI - A) of a tree.
/// For trees this equals the matching polynomial:
///   phi(x) = sum_k (-1)^k m_k x^(n-2k),  m_k = number of k-matchings.
struct CharPoly {
    IPoly coeffs; // c_0..c_n, low to high, c_n = 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Multiplicity of the root 0 (index of lowest nonzero coefficient).
    int trailing_zeros() const;
    /// m_k, k = 0..floor(n/2); zero beyond the matching number.
    BigInt matching_count(int k) const;
};

CharPoly char_poly(const Tree& t);

int matching_number(const Tree& t);

/// n - 2*matching_number, cross-checked against the trailing zero count of
/// the characteristic polynomial. Throws internal_inconsistency if the two
/// routes disagree.
int nullity(const Tree& t);

enum class Method { exact_roots, dense_eigensolver };

struct EnergyResult {
    double energy = 0.0;
    double error_bound = 0.0;             // |reported - true| <= error_bound
    std::vector<double> eigenvalues;      // sorted ascending
    int nullity = 0;
    Method method = Method::exact_roots;
};

/// Adjacency eigenvalues, each within tol of a true eigenvalue.
///   exact_roots: Sturm-sequence bisection on the matching polynomial in
///     y = x^2, exact integer arithmetic; deterministic.
///   dense_eigensolver: cyclic Jacobi rotations on the adjacency matrix.
std::vector<double> eigenvalues(const Tree& t, double tol,
                                Method method = Method::exact_roots);

EnergyResult energy(const Tree& t, double tol = 1e-9,
                    Method method = Method::exact_roots);

/// sqrt(2(n-1)(n-n0)) with exact nullity; energy never exceeds this,
/// with equality exactly for stars.
double energy_upper_bound(const Tree& t);

const char* method_name(Method m);

/// JSON document {n, energy, error_bound, nullity, eigenvalues[], method,
/// char_poly_coeffs[]} with coefficients as decimal strings.
std::string energy_result_to_json(const Tree& t, const EnergyResult& r);

} // namespace hypotree
