#include "qrpw/linalg.hpp"

#include <algorithm>
#include <utility>

namespace qrpw {

namespace {

// p * q^shift as a plain polynomial; the caller guarantees e + shift >= 0.
PolyQ laurent_shift_to_poly(const LaurentPoly& p, int shift) {
    PolyQ out;
    if (p.is_zero()) return out;
    int top = p.terms().rbegin()->first + shift;
    out.c.assign(static_cast<size_t>(top) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) out.c[static_cast<size_t>(e + shift)] = c;
    out.trim();
    return out;
}

LaurentPoly poly_to_laurent(const PolyQ& p, int shift) {
    LaurentPoly out;
    for (size_t i = 0; i < p.c.size(); ++i)
        if (!(p.c[i] == 0)) out += LaurentPoly::monomial(p.c[i], static_cast<int>(i) + shift);
    return out;
}

}  // namespace

LaurentSolveResult laurent_solve(std::vector<std::vector<LaurentPoly>> A,
                                 std::vector<LaurentPoly> b) {
    const size_t rows = A.size();
    const size_t cols = rows == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("laurent_solve: ragged matrix");
    if (b.size() != rows) throw std::invalid_argument("laurent_solve: rhs size mismatch");
    const auto A0 = A;
    const auto b0 = b;

    // Scale each row by a power of q (a unit of the Laurent ring, so the
    // solution set is unchanged) to land in Q[q].
    std::vector<std::vector<PolyQ>> P(rows, std::vector<PolyQ>(cols));
    std::vector<PolyQ> c(rows);
    for (size_t i = 0; i < rows; ++i) {
        int low = 0;
        bool seen = false;
        auto feed = [&](const LaurentPoly& p) {
            if (p.is_zero()) return;
            int e = p.terms().begin()->first;
            low = seen ? std::min(low, e) : e;
            seen = true;
        };
        for (const auto& e : A[i]) feed(e);
        feed(b[i]);
        for (size_t j = 0; j < cols; ++j) P[i][j] = laurent_shift_to_poly(A[i][j], -low);
        c[i] = laurent_shift_to_poly(b[i], -low);
    }

    // Column operations are accumulated in V so that x = V y maps the
    // diagonal unknowns back to the original ones.
    std::vector<std::vector<PolyQ>> V(cols, std::vector<PolyQ>(cols));
    for (size_t j = 0; j < cols; ++j) V[j][j] = PolyQ(Rational(1));

    LaurentSolveResult res;
    size_t k = 0;
    const size_t kmax = std::min(rows, cols);
    while (k < kmax) {
        // lowest-degree nonzero entry of the trailing submatrix
        size_t pi = rows, pj = cols;
        int best = -1;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (!P[i][j].is_zero() && (best < 0 || P[i][j].degree() < best)) {
                    best = P[i][j].degree();
                    pi = i;
                    pj = j;
                }
        if (best < 0) break;
        std::swap(P[k], P[pi]);
        std::swap(c[k], c[pi]);
        if (pj != k)
            for (size_t i = 0; i < rows; ++i) std::swap(P[i][k], P[i][pj]);
        if (pj != k) std::swap(V[k], V[pj]);  // V is stored by column

        // Euclidean clearing of row k and column k; a nonzero remainder is a
        // lower-degree entry, so the pass restarts and must terminate.
        bool dirty = false;
        for (size_t i = 0; i < rows; ++i) {
            if (i == k || P[i][k].is_zero()) continue;
            PolyQ s, r;
            PolyQ::divmod(P[i][k], P[k][k], s, r);
            for (size_t j = k; j < cols; ++j) P[i][j] = P[i][j] - s * P[k][j];
            c[i] = c[i] - s * c[k];
            if (!r.is_zero()) dirty = true;
        }
        for (size_t j = 0; j < cols; ++j) {
            if (j == k || P[k][j].is_zero()) continue;
            PolyQ s, r;
            PolyQ::divmod(P[k][j], P[k][k], s, r);
            for (size_t i = 0; i < rows; ++i) P[i][j] = P[i][j] - s * P[i][k];
            for (size_t t = 0; t < cols; ++t) V[j][t] = V[j][t] - s * V[k][t];
            if (!r.is_zero()) dirty = true;
        }
        if (!dirty) ++k;
    }
    res.rank = static_cast<int>(k);

    for (size_t i = k; i < rows; ++i)
        if (!c[i].is_zero()) {
            res.field_consistent = false;
            ++res.obstructions;
        }

    std::vector<LaurentPoly> y(cols);
    for (size_t i = 0; i < k; ++i) {
        // strip the q-power unit from the diagonal entry, then divide
        size_t s = 0;
        while (P[i][i].c[s] == 0) ++s;
        PolyQ d;
        d.c.assign(P[i][i].c.begin() + static_cast<long>(s), P[i][i].c.end());
        PolyQ quot, rem;
        PolyQ::divmod(c[i], d, quot, rem);
        if (!rem.is_zero()) {
            ++res.nondivisible;
            continue;
        }
        y[i] = poly_to_laurent(quot, -static_cast<int>(s));
    }
    if (!res.field_consistent || res.nondivisible > 0) return res;

    res.solution.assign(cols, LaurentPoly());
    for (size_t j = 0; j < cols; ++j) {
        // column j of V pairs with y_j; V is stored by column
        for (size_t t = 0; t < cols; ++t)
            if (!y[j].is_zero() && !V[j][t].is_zero())
                res.solution[t] += poly_to_laurent(V[j][t], 0) * y[j];
    }
    for (size_t i = 0; i < rows; ++i) {
        LaurentPoly acc;
        for (size_t j = 0; j < cols; ++j) acc += A0[i][j] * res.solution[j];
        if (acc != b0[i]) throw std::logic_error("laurent_solve: solution failed re-check");
    }
    res.solvable = true;
    return res;
}

}  // namespace qrpw
