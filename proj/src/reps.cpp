/**
 * @file reps.cpp
 * @brief Truncated matrix models of the base algebra irreducibles.
 *
 * Normal words factor as (one-directional shift run)(diagonal power), so
 * evaluating a normal-form element column by column never leaves the
 * truncated basis range: the result is exactly the compression of the
 * untruncated operator. Raw words (relation sides, products of separately
 * evaluated factors) can overshoot the top of the basis by at most two
 * indices, which is where the safe-block cutoff D-2 comes from.
 */

#include "qrpw/reps.hpp"

#include "qrpw/assocmod.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qrpw {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

// sqrt of prod_{m=1}^{count} (1 - q0^{2(l n + r - m)}); every factor is
// positive whenever the shifted column stays inside the basis (l n + r > count).
double root_weight(double q0, int l, int r, int n, int count) {
    double prod = 1.0;
    for (int m = 1; m <= count; ++m) prod *= 1.0 - std::pow(q0, 2.0 * (l * n + r - m));
    return std::sqrt(prod);
}

void require_base(const PresPtr& base) {
    if (!base || (base->id != "base-neg" && base->id != "base-pos"))
        throw std::invalid_argument("representations are defined for the base algebras, got " +
                                    (base ? base->id : std::string("null")));
}

// Rewriting can expand a product into monomials of magnitude far above the
// result (beyond 1e60 for small q0) that cancel almost completely, so
// summing them in doubles wipes out the result. 100-digit floats keep the
// absolute coefficient error below 1e-30 even in the worst case.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

class CoeffEval {
public:
    explicit CoeffEval(double q0) : q0_(q0), inv_(1 / q0_) { cache_.emplace(0, BigFloat(1)); }

    double operator()(const LaurentPoly& c) {
        BigFloat acc = 0;
        for (const auto& [e, co] : c.terms()) acc += BigFloat(co) * power(e);
        return acc.convert_to<double>();
    }

private:
    // steps from the nearest cached exponent, so a whole evaluation costs
    // one multiplication per exponent unit covered instead of a fresh
    // power loop per monomial
    const BigFloat& power(int e) {
        auto up = cache_.lower_bound(e);
        if (up != cache_.end() && up->first == e) return up->second;
        int from;
        if (up == cache_.end())
            from = std::prev(up)->first;
        else if (up == cache_.begin())
            from = up->first;
        else
            from = e - std::prev(up)->first <= up->first - e ? std::prev(up)->first : up->first;
        BigFloat p = cache_.at(from);
        for (; from < e; ++from) p *= q0_;
        for (; from > e; --from) p *= inv_;
        return cache_.emplace(e, std::move(p)).first->second;
    }

    BigFloat q0_, inv_;
    std::map<int, BigFloat> cache_;
};

}  // namespace

CMat CMat::zero(int n) {
    CMat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, std::complex<double>(0.0));
    return m;
}

CMat CMat::identity(int n) {
    CMat m = zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::operator*(const CMat& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    CMat r = zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            std::complex<double> x = at(i, k);
            if (x == std::complex<double>(0.0)) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

CMat& CMat::operator+=(const CMat& o) {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

CMat CMat::scaled(std::complex<double> c) const {
    CMat r = *this;
    for (auto& x : r.a) x *= c;
    return r;
}

CMat CMat::adjoint() const {
    CMat r = zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

double CMat::block_norm(int rows, int cols) const {
    rows = std::min(rows, n);
    cols = std::min(cols, n);
    double s = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s += std::norm(at(i, j));
    return std::sqrt(s);
}

const CMat& TruncatedRep::matrix(const std::string& gen_name) const {
    return gen_mat.at(static_cast<size_t>(pres->gen(gen_name)));
}

TruncatedRep build_rep(const PresPtr& base, int r, int D, double q0) {
    require_base(base);
    int l = base->weight;
    if (r < 1 || r > l) throw std::invalid_argument("series index must lie in 1..weight");
    if (D < 4) throw std::invalid_argument("truncation dimension must be at least 4");
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::invalid_argument("deformation value must lie strictly inside (0, 1)");

    TruncatedRep rep;
    rep.pres = base;
    rep.label = "r=" + std::to_string(r);
    rep.dim = D;
    rep.safe = D - 2;
    rep.q0 = q0;
    rep.gen_mat.assign(base->gens.size(), CMat::zero(D));

    CMat& A = rep.gen_mat[static_cast<size_t>(base->gen("a"))];
    for (int n = 0; n < D; ++n) A.at(n, n) = std::pow(q0, 2.0 * (l * n + r));

    if (base->id == "base-neg") {
        CMat& B = rep.gen_mat[static_cast<size_t>(base->gen("b"))];
        for (int n = 1; n < D; ++n)
            B.at(n - 1, n) =
                std::pow(q0, static_cast<double>(l * n + r)) * root_weight(q0, l, r, n, l);
        CMat& C = rep.gen_mat[static_cast<size_t>(base->gen("c-"))];
        for (int n = 2; n < D; ++n) C.at(n - 2, n) = root_weight(q0, l, r, n, 2 * l);
        rep.gen_mat[static_cast<size_t>(base->gen("b*"))] = B.adjoint();
        rep.gen_mat[static_cast<size_t>(base->gen("c-*"))] = C.adjoint();
    } else {
        CMat& C = rep.gen_mat[static_cast<size_t>(base->gen("c+"))];
        for (int n = 1; n < D; ++n) C.at(n - 1, n) = root_weight(q0, l, r, n, l);
        rep.gen_mat[static_cast<size_t>(base->gen("c+*"))] = C.adjoint();
    }
    return rep;
}

TruncatedRep build_rep(const PresPtr& base, double theta) {
    require_base(base);
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::invalid_argument("phase parameter must lie in [0, 1)");

    TruncatedRep rep;
    rep.pres = base;
    std::ostringstream os;
    os << "theta=" << theta;
    rep.label = os.str();
    rep.dim = 1;
    rep.safe = 1;
    rep.q0 = 0.5;  // coefficient evaluation point; the matrices are constant in q
    rep.gen_mat.assign(base->gens.size(), CMat::zero(1));

    std::complex<double> ph = std::polar(1.0, 2.0 * std::numbers::pi * theta);
    std::string top = base->id == "base-neg" ? "c-" : "c+";
    rep.gen_mat[static_cast<size_t>(base->gen(top))].at(0, 0) = ph;
    rep.gen_mat[static_cast<size_t>(base->gen(top + "*"))].at(0, 0) = std::conj(ph);
    return rep;
}

TruncatedRep build_rep(Parity parity, int l, int r, int D, double q0) {
    return build_rep(parity == Parity::neg ? base_algebra_neg(l) : base_algebra_pos(l), r, D, q0);
}

TruncatedRep build_rep(Parity parity, int l, double theta) {
    return build_rep(parity == Parity::neg ? base_algebra_neg(l) : base_algebra_pos(l), theta);
}

EvalScaled eval_terms_scaled(const TruncatedRep& rep, const TermList& terms, int rows, int cols) {
    CoeffEval ev(rep.q0);
    EvalScaled out{CMat::zero(rep.dim), 0.0};
    for (const auto& [w, coeff] : terms) {
        CMat m = CMat::identity(rep.dim);
        for (const auto& fa : w.f) {
            if (fa.exp < 0)
                throw std::invalid_argument("negative exponent has no bounded representative");
            const CMat& g = rep.gen_mat.at(static_cast<size_t>(fa.gen));
            for (long long k = 0; k < fa.exp; ++k) m = m * g;
        }
        double c = ev(coeff);
        out.value += m.scaled(c);
        out.scale += std::abs(c) * m.block_norm(rows, cols);
    }
    return out;
}

CMat eval_terms(const TruncatedRep& rep, const TermList& terms) {
    return eval_terms_scaled(rep, terms, 0, 0).value;
}

CMat eval_element(const TruncatedRep& rep, const Element& e) {
    if (e.pres() != rep.pres)
        throw std::invalid_argument("element belongs to a different algebra instance");
    TermList terms(e.terms().begin(), e.terms().end());
    return eval_terms(rep, terms);
}

RepReport residual_suite(Parity parity, int l, int D, double q0, std::uint64_t seed) {
    if (l < 1) throw std::invalid_argument("weight must be positive");
    PresPtr base = parity == Parity::neg ? base_algebra_neg(l) : base_algebra_pos(l);

    RepReport out;
    auto fail = [&out](const std::string& w) {
        if (out.pass) out.witness = w;
        out.pass = false;
    };

    std::vector<TruncatedRep> reps;
    for (int r = 1; r <= l; ++r) reps.push_back(build_rep(base, r, D, q0));
    for (double theta : {0.0, 0.25, 1.0 / 3.0}) {
        reps.push_back(build_rep(base, theta));
        reps.back().q0 = q0;
    }

    auto rels = base->relations();
    std::mt19937_64 rng(seed);
    auto rand_el = [&](int bound) {
        auto words = base->normal_word_enum(bound);
        std::uniform_int_distribution<size_t> wd(0, words.size() - 1);
        std::uniform_int_distribution<int> cd(-2, 2), ed(-1, 1);
        Element e = base->zero();
        for (int i = 0; i < 3; ++i) {
            Rational c(cd(rng));
            if (c == 0) c = 1;
            e += base->el_word(words[wd(rng)]).scaled(LaurentPoly::monomial(c, ed(rng)));
        }
        return e;
    };

    auto term_list = [](const Element& e) { return TermList(e.terms().begin(), e.terms().end()); };

    for (const auto& rep : reps) {
        for (size_t k = 0; k < rels.size(); ++k) {
            auto lhs = eval_terms_scaled(rep, rels[k].first, rep.dim, rep.safe);
            auto rhs = eval_terms_scaled(rep, rels[k].second, rep.dim, rep.safe);
            double res = (lhs.value - rhs.value).block_norm(rep.dim, rep.safe) /
                         (1.0 + lhs.scale + rhs.scale);
            out.max_relation_residual = std::max(out.max_relation_residual, res);
            if (res > 1e-10)
                fail(rep.label + ": relation " + std::to_string(k) + " residual " + fmt(res));
        }

        for (int t = 0; t < 20; ++t) {
            Element e = rand_el(3);
            auto starred = eval_terms_scaled(rep, term_list(e.star()), rep.dim, rep.dim);
            auto plain = eval_terms_scaled(rep, term_list(e), rep.dim, rep.dim);
            double res = (starred.value - plain.value.adjoint()).norm() /
                         (1.0 + starred.scale + plain.scale);
            out.max_star_residual = std::max(out.max_star_residual, res);
            if (res > 1e-10) fail(rep.label + ": star residual " + fmt(res) + " on " + e.str());

            // separately evaluated factors only corrupt the top four columns
            Element u = rand_el(2), v = rand_el(2);
            CMat uu = eval_element(rep, u), vv = eval_element(rep, v);
            int cols = std::max(1, rep.dim - 4);
            auto joint = eval_terms_scaled(rep, term_list(u * v), rep.dim, cols);
            double pr = (joint.value - uu * vv).block_norm(rep.dim, cols) /
                        (1.0 + joint.scale + uu.norm() * vv.norm());
            out.max_product_residual = std::max(out.max_product_residual, pr);
            if (pr > 1e-10) fail(rep.label + ": product residual " + fmt(pr));
        }
    }

    // diagonal spectrum against an independently accumulated running product
    for (int r = 1; r <= l; ++r) {
        const CMat& A = reps[static_cast<size_t>(r - 1)].matrix("a");
        double lambda = 1.0, factor = 1.0;
        for (int m = 0; m < 2 * r; ++m) lambda *= q0;
        for (int m = 0; m < 2 * l; ++m) factor *= q0;
        for (int n = 0; n < D; ++n) {
            double rel = std::abs(A.at(n, n).real() - lambda) / lambda;
            out.max_eigen_error = std::max(out.max_eigen_error, rel);
            if (rel > 1e-12)
                fail("r=" + std::to_string(r) + ": eigenvalue " + std::to_string(n) +
                     " off by " + fmt(rel));
            lambda *= factor;
        }
    }

    if (parity == Parity::neg) {
        int ga = base->gen("a");
        for (int r = 1; r <= l; ++r) {
            const auto& rep = reps[static_cast<size_t>(r - 1)];
            for (int n = -2; n <= 2; ++n) {
                auto cp = chern_rec(l, n);
                CoeffEval cev(q0);
                std::vector<double> cval;
                TermList terms;
                for (size_t i = 0; i < cp.c.size(); ++i) {
                    cval.push_back(cev(cp.c[i]));
                    if (!cp.c[i].is_zero())
                        terms.push_back({Word::single(ga, static_cast<long long>(i)), cp.c[i]});
                }
                auto got = eval_terms_scaled(rep, terms, D, D);
                CMat expect = CMat::zero(D);
                for (int j = 0; j < D; ++j) {
                    double lam = std::pow(q0, 2.0 * (l * j + r));
                    double s = 0.0, p = 1.0;
                    for (size_t i = 0; i < cval.size(); ++i) {
                        s += cval[i] * p;
                        p *= lam;
                    }
                    expect.at(j, j) = s;
                }
                double res = (got.value - expect).norm() / (1.0 + 2.0 * got.scale);
                out.max_trace_poly_residual = std::max(out.max_trace_poly_residual, res);
                if (res > 1e-10)
                    fail(rep.label + ": trace polynomial " + std::to_string(n) + " residual " +
                         fmt(res));
            }
        }
    }

    std::ostringstream head;
    head << base->id << " weight " << l << ", " << reps.size() << " labels, dimension " << D
         << ", q0=" << q0;
    out.log.push_back(head.str());
    out.log.push_back("max relation residual " + fmt(out.max_relation_residual) +
                      " on the safe block");
    out.log.push_back("star residual " + fmt(out.max_star_residual) + ", product residual " +
                      fmt(out.max_product_residual) + " over 20 seeded samples per label");
    out.log.push_back("eigenvalue relative error " + fmt(out.max_eigen_error));
    if (parity == Parity::neg)
        out.log.push_back("trace polynomial residual " + fmt(out.max_trace_poly_residual) +
                          " for degrees -2..2");
    return out;
}

}  // namespace qrpw
