#include "qrpw/assocmod.hpp"

#include "qrpw/connection.hpp"
#include "qrpw/grading.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace qrpw {

namespace {

// polynomials in the symbol a, index = power of a
using APoly = std::vector<LaurentPoly>;

APoly atrim(APoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

APoly amul(const APoly& f, const APoly& g) {
    if (f.empty() || g.empty()) return {};
    APoly h(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    return atrim(h);
}

APoly aadd(APoly f, const APoly& g) {
    if (f.size() < g.size()) f.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) f[i] += g[i];
    return atrim(f);
}

APoly asub(APoly f, const APoly& g) {
    if (f.size() < g.size()) f.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    return atrim(f);
}

// substitution a -> q^k a
APoly ascale_arg(APoly f, int k) {
    for (size_t i = 0; i < f.size(); ++i) f[i] *= LaurentPoly::q_power(k * static_cast<int>(i));
    return f;
}

// prod_{p=m0}^{m1} (1 - q^{2p} a)
APoly qa_product(int m0, int m1) {
    APoly f{LaurentPoly::one()};
    for (int p = m0; p <= m1; ++p)
        f = amul(f, {LaurentPoly::one(), -LaurentPoly::q_power(2 * p)});
    return f;
}

}  // namespace

Element ProjectorMatrix::trace() const {
    Element t = pres->zero();
    for (size_t i = 0; i < entries.size(); ++i) t += entries[i][i];
    return t;
}

std::string ProjectorMatrix::str() const {
    std::string out;
    for (const auto& row : entries) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += " | ";
            out += row[j].str();
        }
        out += "\n";
    }
    return out;
}

ProjectorMatrix projector_from_pairs(const PresPtr& quotient_neg, int n,
                                     const std::vector<std::pair<Element, Element>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("projector needs a nonempty factor list");
    const size_t s = pairs.size();
    ProjectorMatrix E;
    E.n = n;
    E.size = static_cast<int>(s);
    E.pres = quotient_neg;
    E.factors = pairs;
    E.entries.assign(s, {});
    for (size_t i = 0; i < s; ++i) {
        E.entries[i].reserve(s);
        for (size_t j = 0; j < s; ++j) E.entries[i].push_back(pairs[i].second * pairs[j].first);
    }

    // E^2 = E reduces to sum_i l_i r_i = 1; verified entrywise anyway
    ProjectorMatrix residual;
    residual.size = E.size;
    residual.pres = quotient_neg;
    residual.entries.assign(s, {});
    bool idempotent = true;
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            Element acc = quotient_neg->zero();
            for (size_t k = 0; k < s; ++k) acc += E.entries[i][k] * E.entries[k][j];
            acc -= E.entries[i][j];
            if (!acc.is_zero()) idempotent = false;
            residual.entries[i].push_back(std::move(acc));
        }
    if (!idempotent)
        throw std::logic_error("projector is not idempotent, residual E^2 - E:\n" +
                               residual.str());

    const DegreeTable& phi = quotient_neg->table_or_throw("phi");
    auto base = base_algebra_neg(quotient_neg->weight);
    Morphism fix = embed_neg_fix(base, quotient_neg);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            auto d = degree_of(E.entries[i][j], phi);
            if (!d.zero && !d.is(0))
                throw std::invalid_argument("projector entry (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") has degree " + d.str());
            // rewritability in a, b, c- is verified inside express itself
            (void)express_in_coinvariants(fix, E.entries[i][j]);
        }
    return E;
}

ProjectorMatrix projector(int l, int n) {
    auto p = quotient_sphere_neg(l);
    StrongConnection conn(p, l);
    return projector_from_pairs(p, n, conn.omega(n).as_element_pairs());
}

std::string ChernPolynomial::str() const {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c[0].str();
            continue;
        }
        out += "(" + c[i].str() + ") a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

ChernPolynomial chern_rec(int l, int n) {
    if (l < 1) throw std::invalid_argument("chern_rec needs weight l >= 1");
    const APoly up = qa_product(0, l - 1);  // prod_{p=0}^{l-1} (1 - q^{2p} a)
    const APoly dn = qa_product(-l, -1);    // prod_{p=1}^{l}  (1 - q^{-2p} a)
    const APoly one{LaurentPoly::one()};
    APoly cur = one;
    for (int i = std::abs(n); i > 0; --i)
        cur = n > 0 ? aadd(amul(ascale_arg(cur, 2 * l), up), amul(cur, asub(one, dn)))
                    : aadd(amul(ascale_arg(cur, -2 * l), dn), amul(cur, asub(one, up)));
    ChernPolynomial out;
    out.n = n;
    out.c = atrim(std::move(cur));
    return out;
}

CheckReport trace_check(int l, int n) {
    CheckReport rep;
    ProjectorMatrix E = projector(l, n);
    rep.log.push_back("projector " + std::to_string(E.size) + " x " + std::to_string(E.size) +
                      ", idempotency and invariance verified");

    auto base = base_algebra_neg(l);
    Morphism fix = embed_neg_fix(base, E.pres);
    Element tr = express_in_coinvariants(fix, E.trace());
    int a = base->gen("a");
    ChernPolynomial got;
    got.n = n;
    for (const auto& [w, cf] : tr.terms()) {
        if (w.f.size() > 1 || (!w.empty() && w.f[0].gen != a)) {
            rep.fail("trace is not a polynomial in a alone: " + tr.str());
            return rep;
        }
        size_t i = w.empty() ? 0 : static_cast<size_t>(w.f[0].exp);
        if (got.c.size() <= i) got.c.resize(i + 1);
        got.c[i] = cf;
    }
    got.c = atrim(std::move(got.c));
    rep.log.push_back("trace in the base generator a: " + got.str());

    ChernPolynomial rec = chern_rec(l, n);
    if (!(got == rec)) {
        rep.fail("trace " + got.str() + " does not match the recursion " + rec.str());
        return rep;
    }
    rep.log.push_back("recursion gives the same polynomial");
    return rep;
}

}  // namespace qrpw
