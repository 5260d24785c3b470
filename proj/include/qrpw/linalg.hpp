#pragma once
/**
 * @file linalg.hpp
 * @brief Exact univariate polynomials, rational functions, and Gaussian
 *        elimination over an arbitrary field.
 *
 * The field tower used by the searches is
 *   Rational -> Poly<Rational> -> PolyFrac<Rational>            (Q(q))
 *            -> Poly<PolyFrac<Rational>> -> PolyFrac<...>       (Q(q)(tau))
 * A field type K must support: K() == additive zero, K(1) == unit, the four
 * arithmetic operators, and ==.
 *
 * gauss_solve returns, besides a particular solution when one exists, a
 * basis of the left null space of the coefficient matrix together with the
 * pairings against the right-hand side; a row with nonzero pairing is an
 * exact certificate that the system is infeasible over the field.
 */

#include "qrpw/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qrpw {

template <class K>
struct Poly {
    std::vector<K> c;  // c[i] is the coefficient of t^i; no trailing zeros

    Poly() = default;
    Poly(K k) {
        if (!(k == K())) c.push_back(std::move(k));
    }
    static Poly variable() {
        Poly p;
        p.c = {K(), K(1)};
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const K& leading() const {
        if (c.empty()) throw std::domain_error("leading of zero polynomial");
        return c.back();
    }
    void trim() {
        while (!c.empty() && c.back() == K()) c.pop_back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), K());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), K());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K());
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    bool operator==(const Poly& o) const { return c == o.c; }

    /// Euclidean division; the divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& d, Poly& quot, Poly& rem) {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        quot = Poly();
        rem = a;
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            K factor = rem.leading() / d.leading();
            if (quot.c.size() < static_cast<size_t>(shift + 1))
                quot.c.resize(static_cast<size_t>(shift + 1), K());
            quot.c[static_cast<size_t>(shift)] = quot.c[static_cast<size_t>(shift)] + factor;
            for (int i = 0; i <= d.degree(); ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                rem.c[idx] = rem.c[idx] - factor * d.c[static_cast<size_t>(i)];
            }
            rem.trim();
        }
        quot.trim();
    }

    K eval(const K& x) const {
        K acc = K();
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
};

/// Monic greatest common divisor via the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> q, r;
        Poly<K>::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        K lead = a.leading();
        for (auto& k : a.c) k = k / lead;
    }
    return a;
}

/// Fraction field of Poly<K>: denominators kept monic and coprime to numerators.
template <class K>
struct PolyFrac {
    Poly<K> num;
    Poly<K> den = Poly<K>(K(1));

    PolyFrac() = default;
    PolyFrac(K k) : num(std::move(k)) {}
    PolyFrac(int k) : num(K(k)) {}
    PolyFrac(Poly<K> n) : num(std::move(n)) {}
    PolyFrac(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num.is_zero()) {
            den = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            Poly<K> q, r;
            Poly<K>::divmod(num, g, q, r);
            num = q;
            Poly<K>::divmod(den, g, q, r);
            den = q;
        }
        K lead = den.leading();
        if (!(lead == K(1))) {
            for (auto& k : num.c) k = k / lead;
            for (auto& k : den.c) k = k / lead;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num * b.num, a.den * b.den);
    }
    friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return PolyFrac(a.num * b.den, a.den * b.num);
    }
    bool operator==(const PolyFrac& o) const { return num == o.num && den == o.den; }
};

using PolyQ = Poly<Rational>;
using FuncQ = PolyFrac<Rational>;  // Q(q)
using PolyT = Poly<FuncQ>;         // Q(q)[tau]
using FuncT = PolyFrac<FuncQ>;     // Q(q)(tau)

/// Laurent polynomial as an element of Q(q): num / q^k with k >= 0.
inline FuncQ to_funcq(const LaurentPoly& p) {
    if (p.is_zero()) return FuncQ();
    int min_exp = p.terms().begin()->first;
    int shift = min_exp < 0 ? -min_exp : 0;
    PolyQ num;
    num.c.assign(static_cast<size_t>(p.terms().rbegin()->first + shift) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) num.c[static_cast<size_t>(e + shift)] = c;
    num.trim();
    PolyQ den;
    den.c.assign(static_cast<size_t>(shift) + 1, Rational(0));
    den.c.back() = 1;
    return FuncQ(std::move(num), std::move(den));
}

/// Inverse of to_funcq when the denominator is a monomial in q; nullopt otherwise.
inline std::optional<LaurentPoly> funcq_to_laurent(const FuncQ& f) {
    if (f.is_zero()) return LaurentPoly::zero();
    size_t nonzero = 0;
    for (const auto& k : f.den.c)
        if (!(k == Rational(0))) ++nonzero;
    if (nonzero != 1) return std::nullopt;
    int k = f.den.degree();
    Rational lead = f.den.leading();
    LaurentPoly out;
    for (size_t i = 0; i < f.num.c.size(); ++i)
        if (f.num.c[i] != 0)
            out += LaurentPoly::monomial(f.num.c[i] / lead, static_cast<int>(i) - k);
    return out;
}

template <class K>
struct GaussResult {
    int rank = 0;
    bool consistent = true;
    std::vector<K> solution;                 // a particular solution (free vars = 0)
    std::vector<std::vector<K>> left_null;   // rows y with y A = 0
    std::vector<K> left_null_rhs;            // corresponding y . b
};

struct LaurentSolveResult {
    int rank = 0;
    bool field_consistent = true;  // solvable with rational-function coefficients
    bool solvable = false;         // solvable with Laurent polynomial coefficients
    std::vector<LaurentPoly> solution;  // set exactly when solvable
    int obstructions = 0;   // zero rows left with a nonzero right-hand side
    int nondivisible = 0;   // diagonal entries failing Laurent divisibility
};

/**
 * Exact linear solve of A x = b with unknowns in the ring of Laurent
 * polynomials. The matrix is diagonalised by unimodular row and column
 * operations over Q[q] (Euclidean elimination on entry degrees), which
 * decides ring solvability: a system can be consistent over the rational
 * function field Q(q) and still admit no Laurent solution, and the result
 * reports the two conditions separately. Deterministic pivoting (lowest
 * entry degree, first position wins), and the returned solution is
 * re-substituted into the original system before returning.
 */
LaurentSolveResult laurent_solve(std::vector<std::vector<LaurentPoly>> A,
                                 std::vector<LaurentPoly> b);

/**
 * Exact Gaussian elimination on A x = b. Deterministic pivoting (first
 * nonzero entry scanning rows top to bottom), so results are reproducible.
 */
template <class K>
GaussResult<K> gauss_solve(std::vector<std::vector<K>> A, std::vector<K> b) {
    const size_t rows = A.size();
    const size_t cols = rows == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("gauss_solve: ragged matrix");
    if (b.size() != rows) throw std::invalid_argument("gauss_solve: rhs size mismatch");

    // E tracks row operations: E * A_original = A_current.
    std::vector<std::vector<K>> E(rows, std::vector<K>(rows, K()));
    for (size_t i = 0; i < rows; ++i) E[i][i] = K(1);

    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && A[piv][col] == K()) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        std::swap(E[piv], E[r]);
        K inv = K(1) / A[r][col];
        for (size_t j = col; j < cols; ++j) A[r][j] = A[r][j] * inv;
        for (size_t j = 0; j < rows; ++j) E[r][j] = E[r][j] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][col] == K()) continue;
            K f = A[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!(A[r][j] == K())) A[i][j] = A[i][j] - f * A[r][j];
            for (size_t j = 0; j < rows; ++j)
                if (!(E[r][j] == K())) E[i][j] = E[i][j] - f * E[r][j];
            if (!(b[r] == K())) b[i] = b[i] - f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++r;
    }

    GaussResult<K> res;
    res.rank = static_cast<int>(r);
    for (size_t i = r; i < rows; ++i) {
        res.left_null.push_back(E[i]);
        res.left_null_rhs.push_back(b[i]);
        if (!(b[i] == K())) res.consistent = false;
    }
    if (res.consistent) {
        res.solution.assign(cols, K());
        for (size_t i = 0; i < r; ++i)
            res.solution[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
    }
    return res;
}

}  // namespace qrpw
