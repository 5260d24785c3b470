#pragma once
/**
 * @file assocmod.hpp
 * @brief Line-bundle modules over the odd-case base: idempotent matrices
 *        built from connection factor lists, the trace recursion in the
 *        base generator a, and bounded bases of the homogeneous components.
 *
 * For a factor list omega = sum_i l_i (x) r_i with sum_i l_i r_i = 1 and
 * legs of degree -n / n, the matrix E_ij = r_i l_j is idempotent and its
 * entries are invariant, so E presents the degree-n component as a
 * projective module over the invariants. The trace of E is a polynomial
 * in the generator a alone and satisfies a first-order recursion in n;
 * both computation paths are exposed and compared exactly.
 */

#include "qrpw/algebras.hpp"
#include "qrpw/presentation.hpp"

#include <utility>
#include <vector>

namespace qrpw {

/**
 * Idempotent matrix over the odd quotient sphere with E_ij = r_i l_j.
 * The factor list the matrix was built from is kept verbatim (the
 * canonical two-leg form would absorb scalar redistributions between the
 * legs of a pair, and those move E by a diagonal conjugation).
 */
struct ProjectorMatrix {
    int n = 0;
    int size = 0;
    PresPtr pres;
    std::vector<std::vector<Element>> entries;
    std::vector<std::pair<Element, Element>> factors;

    Element trace() const;
    /// Rows separated by newlines, entries by " | ".
    std::string str() const;
};

/**
 * E[n] from the recursive connection on the weight-l odd quotient sphere.
 * Idempotency, invariance of every entry, and rewritability of every entry
 * in the base generators a, b, c- are verified before returning.
 */
ProjectorMatrix projector(int l, int n);

/**
 * Same construction and checks from an explicit factor list (pairs of
 * (left, right) elements with sum l_i r_i = 1). An idempotency failure
 * throws std::logic_error carrying the residual matrix E^2 - E; a
 * non-invariant entry throws std::invalid_argument.
 */
ProjectorMatrix projector_from_pairs(const PresPtr& quotient_neg, int n,
                                     const std::vector<std::pair<Element, Element>>& pairs);

/// Polynomial in the base generator a with Laurent coefficients.
struct ChernPolynomial {
    int n = 0;
    std::vector<LaurentPoly> c;  // c[i] multiplies a^i, trailing zeros trimmed

    bool operator==(const ChernPolynomial& o) const { return n == o.n && c == o.c; }
    std::string str() const;
};

/**
 * The trace recursion: c_0 = 1 and c_n is built from c_{n-1} by one
 * substitution step a -> q^{±2l} a and two fixed product factors
 * (one step per unit of |n|, either sign).
 */
ChernPolynomial chern_rec(int l, int n);

/**
 * Compares two independent computations of the same polynomial: the trace
 * of projector(l, n) rewritten through the fixed-point embedding (checked
 * to be a polynomial in a alone) against chern_rec(l, n). Reports both
 * polynomials on mismatch.
 */
CheckReport trace_check(int l, int n);

/**
 * Normal-word basis of the degree-n component of a quotient sphere, word
 * length <= bound. For the even (pos) quotient the component is free over
 * the invariants: every listed element is verified to factor as z'^-n
 * times a degree-0 element before it is returned.
 */
std::vector<Element> gamma_basis(const PresPtr& quotient, int n, int bound);
/// Convenience overload building the weight-l quotient of the given parity.
std::vector<Element> gamma_basis(int l, Parity parity, int n, int bound);

}  // namespace qrpw
