#pragma once
/**
 * @file connection.hpp
 * @brief Strong connection forms for the circle coactions on the quotient
 *        spheres, their axioms, and cleaving maps for the trivial case.
 *
 * A connection form assigns to every u^n a two-leg tensor omega(n) with
 *   omega(0) = 1 (x) 1,
 *   mu(omega(n)) = 1 exactly,
 *   left legs of degree -n and right legs of degree n.
 * The odd-case form is built by the y,z-corrected recursion; the even case
 * admits the one-pair form coming from its central unitary.
 */

#include "qrpw/presentation.hpp"
#include "qrpw/tensor.hpp"

#include <functional>

namespace qrpw {

/// Gaussian binomial binom(l, m)_s evaluated at s = q^k, as a Laurent
/// polynomial; zero outside 0 <= m <= l.
LaurentPoly qbinom(int l, int m, int k);

/// Recursive strong connection on the odd quotient sphere (generators
/// x, y, z with weight l). Values are memoized.
class StrongConnection {
public:
    StrongConnection(PresPtr quotient_neg, int l);
    const TensorAA& omega(int n);

private:
    PresPtr p_;
    int l_;
    Element x_, xs_, y_, z_;
    std::map<int, TensorAA> memo_;
};

/// One-pair connection z'^n (x) z'^-n on the even quotient sphere.
TensorAA cleft_omega(const PresPtr& quotient_pos, int n);

/**
 * Checks the connection axioms for |n| <= nmax: value at 0, exact unit
 * multiplication, and per-leg homogeneity (-n left, n right) in the table t.
 */
CheckReport verify_strong_connection(const PresPtr& p, const DegreeTable& t,
                                     const std::function<TensorAA(int)>& omega, int nmax);

/**
 * Checks that j is a cleaving map for the grading t on |n| <= nmax:
 * j(0) = 1, j(m) j(n) = j(m+n) (hence convolution invertibility),
 * j(n)* = j(-n), and colinearity deg j(n) = n.
 */
CheckReport verify_cleaving_map(const PresPtr& p, const DegreeTable& t,
                                const std::function<Element(int)>& j, int nmax);

/**
 * Checks that omega inverts the lifted canonical map on simple tensors:
 * omega(n) maps to 1 (x) u^n for |n| <= nmax, and g . omega(n) maps to
 * g (x) u^n for every generator (the lifted map is a left module map, so
 * these generate all preimages a . omega(n) of a (x) u^n).
 */
CheckReport can_inverse_check(const PresPtr& p, const DegreeTable& t,
                              const std::function<TensorAA(int)>& omega, int nmax);

}  // namespace qrpw
