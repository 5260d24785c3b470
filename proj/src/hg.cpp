#include "qrpw/principal.hpp"

#include "qrpw/algebras.hpp"
#include "qrpw/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace qrpw {

namespace {

// The sphere carries two finer integer gradings preserved by every rewrite
// rule: alpha counts z0 against z0*, beta counts z1 against two units of xi.
// The weighted circle grading is k*alpha + l*beta, so products that are to
// contain the unit word must pair opposite bidegrees.
struct Bidegree {
    long long alpha = 0, beta = 0;
    bool operator==(const Bidegree& o) const { return alpha == o.alpha && beta == o.beta; }
    Bidegree operator-() const { return {-alpha, -beta}; }
};

Bidegree bidegree_of(const Presentation& p, const Word& w) {
    Bidegree b;
    for (const auto& f : w.f) {
        const std::string& n = p.gens[static_cast<size_t>(f.gen)].name;
        if (n == "z0")
            b.alpha += f.exp;
        else if (n == "z0*")
            b.alpha -= f.exp;
        else if (n == "z1")
            b.beta += f.exp;
        else if (n == "xi")
            b.beta -= 2 * f.exp;
    }
    return b;
}

}  // namespace

HGSearchResult hg_preimage_search(int k, int l, int target, int bound) {
    if (bound < 1) throw std::invalid_argument("hg_preimage_search: bound must be >= 1");
    if (std::gcd(k, l) != 1) throw std::invalid_argument("hg_preimage_search: gcd(k,l) != 1");
    HGSearchResult res;
    auto sp = sphere_algebra(l, k);
    const auto& rho = sp->table_or_throw("rho");

    // Integer pruning pass: a product b_i b_j can only contain the unit word
    // when neither side carries z1 (rewriting never lowers the z1 count), so
    // the unit-reaching families are indexed by a z0 exponent m and a xi
    // exponent p. Their right-word degree condition is a pure integer
    // equation, logged per family before any linear algebra runs.
    auto family = [&](int sign, const char* label) {
        int count = 0;
        for (int m = 1; m + 0 <= bound; ++m)
            for (int p = -(bound - m); p <= bound - m; ++p)
                if (sign * m * k - 2 * l * p == target) ++count;
        res.log.push_back(std::string("case ") + label + ": " + std::to_string(sign * k) +
                          "*m - 2*" + std::to_string(l) + "*p = " + std::to_string(target) +
                          " has " + std::to_string(count) + " solutions within the bound");
        return count;
    };
    int c1 = family(-1, "1 (right word z0*^m xi^p)");
    int c2 = family(+1, "2 (right word z0^m xi^p)");
    int c3 = 0;
    for (int p = -bound; p <= bound; ++p)
        if (p != 0 && -2 * l * p == target) ++c3;
    if (target == 0) ++c3;  // the unit pair itself
    res.log.push_back("case 3 (right word xi^p): -2*" + std::to_string(l) +
                      "*p = " + std::to_string(target) + " has " + std::to_string(c3) +
                      " solutions within the bound");
    res.log.push_back("unit word reachable by " + std::to_string(c1 + c2 + c3) +
                      " z1-free families");

    // full candidate pair list and exact coefficient system over Q(q)
    auto basis = sp->normal_word_enum(bound);
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& bj : basis) {
        if (rho.word_degree(bj) != target) continue;
        Bidegree need = -bidegree_of(*sp, bj);
        for (const auto& bi : basis)
            if (bidegree_of(*sp, bi) == need) pairs.push_back({bi, bj});
    }
    res.pairs = static_cast<int>(pairs.size());

    std::map<Word, size_t> row_of;
    row_of.emplace(Word::one(), 0);
    std::vector<std::map<size_t, LaurentPoly>> cols;
    cols.reserve(pairs.size());
    for (const auto& [bi, bj] : pairs) {
        Element prod = sp->el_word(bi) * sp->el_word(bj);
        std::map<size_t, LaurentPoly> col;
        for (const auto& [w, c] : prod.terms()) {
            auto [it, fresh] = row_of.emplace(w, row_of.size());
            (void)fresh;
            col[it->second] = c;
        }
        cols.push_back(std::move(col));
    }
    res.rows = static_cast<int>(row_of.size());

    std::vector<std::vector<LaurentPoly>> A(row_of.size(),
                                            std::vector<LaurentPoly>(pairs.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) A[r][j] = c;
    std::vector<LaurentPoly> rhs(row_of.size());
    rhs[0] = LaurentPoly::one();

    auto sol = laurent_solve(A, rhs);
    res.field_solvable = sol.field_consistent;
    res.log.push_back("linear system: " + std::to_string(res.rows) + " support words x " +
                      std::to_string(res.pairs) + " pairs, rank " + std::to_string(sol.rank));
    if (!sol.field_consistent) {
        res.found = false;
        res.log.push_back("infeasible: " + std::to_string(sol.obstructions) +
                          " obstruction rows force a nonzero residual against the unit");
        return res;
    }
    if (!sol.solvable) {
        res.found = false;
        res.log.push_back("solvable only with rational-function coefficients (" +
                          std::to_string(sol.nondivisible) +
                          " diagonal divisibility failures); no Laurent-coefficient "
                          "combination at this bound");
        return res;
    }

    std::vector<std::pair<Element, Element>> wit;
    for (size_t j = 0; j < pairs.size(); ++j) {
        if (sol.solution[j].is_zero()) continue;
        wit.push_back(
            {sp->el_word(pairs[j].first).scaled(sol.solution[j]), sp->el_word(pairs[j].second)});
    }
    TensorAA t = TensorAA::from_pairs(sp, wit);
    if (!(lifted_can(t, rho) == TensorAH::delta(sp, target)))
        throw std::logic_error("hg_preimage_search: witness failed exact re-verification");
    res.found = true;
    res.witness = std::move(t);
    res.log.push_back("witness verified: lifted canonical image is 1 (x) u^" +
                      std::to_string(target));
    return res;
}

}  // namespace qrpw
