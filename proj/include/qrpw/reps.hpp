#pragma once
/**
 * @file reps.hpp
 * @brief Bounded *-representations of the two base algebras on a truncated
 *        standard basis, cross-checking the symbolic identities in floating
 *        point.
 *
 * The infinite-dimensional irreducibles act on l^2(N) by a diagonal operator
 * (a) and weighted down-shifts (b by one step, c- by two, c+ by one); the
 * one-dimensional family sends everything but the top generator to zero and
 * that generator to a phase. Truncation at dimension D only corrupts the top
 * boundary, so residuals are measured on basis columns n <= D-3; everything
 * below is exact up to float rounding.
 */

#include "qrpw/algebras.hpp"
#include "qrpw/presentation.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qrpw {

/// Dense square complex matrix, row-major.
struct CMat {
    int n = 0;
    std::vector<std::complex<double>> a;

    static CMat zero(int n);
    static CMat identity(int n);

    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<size_t>(i) * n + j];
    }

    CMat operator*(const CMat& o) const;
    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    friend CMat operator+(CMat x, const CMat& y) { return x += y; }
    friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
    CMat scaled(std::complex<double> c) const;
    CMat adjoint() const;

    /// Frobenius norm of the leading rows x cols block.
    double block_norm(int rows, int cols) const;
    double norm() const { return block_norm(n, n); }
};

/**
 * One bounded irreducible of a base algebra with every generator realized
 * as a dim x dim matrix (mutual adjoints map to conjugate transposes
 * verbatim). Columns 0..safe-1 lie outside the truncation shadow.
 */
struct TruncatedRep {
    PresPtr pres;
    std::string label;  // "r=2" or "theta=0.25"
    int dim = 0;
    int safe = 0;
    double q0 = 0;
    std::vector<CMat> gen_mat;  // indexed by generator

    const CMat& matrix(const std::string& gen_name) const;
};

/**
 * The r-th infinite-dimensional irreducible (r in 1..l) truncated to
 * dimension D >= 4 at deformation value q0 in (0, 1): a acts diagonally
 * with eigenvalues q0^{2(l n + r)}, the remaining generators as weighted
 * down-shifts with square-root product weights.
 */
TruncatedRep build_rep(const PresPtr& base, int r, int D, double q0);

/// The one-dimensional irreducible with phase exp(2 pi i theta), theta in [0,1).
TruncatedRep build_rep(const PresPtr& base, double theta);

// Convenience overloads constructing the weight-l base algebra themselves.
TruncatedRep build_rep(Parity parity, int l, int r, int D, double q0);
TruncatedRep build_rep(Parity parity, int l, double theta);

/// Evaluates a raw term list without normal-form reduction. Coefficients are
/// evaluated in 100-digit precision and rounded once, so even the worst
/// cancelling monomial expansions cost no double-precision accuracy.
CMat eval_terms(const TruncatedRep& rep, const TermList& terms);
/// Evaluates an element of the represented algebra (instance must match).
CMat eval_element(const TruncatedRep& rep, const Element& e);

/**
 * Evaluation plus its conditioning scale: the sum over terms of
 * |coefficient| times the term matrix norm on the given block. Rewriting an
 * identity can spread it over terms of magnitude far above the result (for
 * small q0 the expanded annihilation products reach 1e15), so float
 * residuals are meaningful only relative to this scale.
 */
struct EvalScaled {
    CMat value;
    double scale = 0;
};
EvalScaled eval_terms_scaled(const TruncatedRep& rep, const TermList& terms, int rows, int cols);

/**
 * Numeric cross-check report: worst residuals over every label (all series
 * reps plus three phase samples) with the failure witness, if any. Every
 * residual is a Frobenius norm divided by 1 + the conditioning scale of the
 * compared evaluations, so the tolerances stay meaningful when an identity
 * is spread over hugely cancelling terms.
 */
struct RepReport {
    bool pass = true;
    std::string witness;
    std::vector<std::string> log;
    double max_relation_residual = 0;  // defining relations on the safe block
    double max_star_residual = 0;      // eval(e*) vs adjoint of eval(e)
    double max_product_residual = 0;   // eval(u v) vs eval(u) eval(v)
    double max_eigen_error = 0;        // relative, diagonal of eval(a)
    double max_trace_poly_residual = 0;  // trace polynomials on the diagonal
};

/**
 * Evaluates every defining relation of the weight-l base algebra in every
 * representation label on the truncation-safe block, checks adjoint and
 * product compatibility on seeded random elements, the spectrum of a, and
 * (odd case) that the trace polynomials evaluate diagonally to their
 * scalar values. Tolerances: 1e-10, eigenvalues 1e-12 relative.
 */
RepReport residual_suite(Parity parity, int l, int D, double q0, std::uint64_t seed = 0);

}  // namespace qrpw
