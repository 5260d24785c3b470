#include "qrpw/connection.hpp"

#include "qrpw/algebras.hpp"
#include "qrpw/grading.hpp"

namespace qrpw {

LaurentPoly qbinom(int l, int m, int k) {
    if (m < 0 || m > l) return LaurentPoly::zero();
    // Pascal recursion binom(n, j)_s = binom(n-1, j-1)_s + s^j binom(n-1, j)_s
    std::vector<LaurentPoly> row{LaurentPoly::one()};
    for (int n = 1; n <= l; ++n) {
        std::vector<LaurentPoly> next(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            if (j > 0) next[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
            if (j < n)
                next[static_cast<size_t>(j)] +=
                    row[static_cast<size_t>(j)] * LaurentPoly::q_power(k * j);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(m)];
}

StrongConnection::StrongConnection(PresPtr quotient_neg, int l) : p_(std::move(quotient_neg)), l_(l) {
    if (l < 1) throw std::invalid_argument("strong connection needs weight l >= 1");
    x_ = p_->el_gen("x");
    xs_ = p_->el_gen("x*");
    y_ = p_->el_gen("y");
    z_ = p_->el_gen("z");
    memo_.emplace(0, TensorAA::one(p_));
}

const TensorAA& StrongConnection::omega(int n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;

    const int step = n > 0 ? 1 : -1;
    const TensorAA& prev = omega(n - step);
    TensorAA acc = TensorAA::zero(p_);
    if (n > 0) {
        acc += prev.conj(xs_, x_);
        for (int m = 1; m <= l_; ++m) {
            // -(-1)^m q^{-m(m+1)} binom(l,m)_{q^-2} y^{2m-1} z^m ... y
            LaurentPoly c = qbinom(l_, m, -2) * LaurentPoly::q_power(-m * (m + 1));
            if (m % 2 == 0) c = -c;
            Element left =
                p_->el_word(make_word(*p_, {{"y", 2 * m - 1}, {"z", m}})).scaled(c);
            acc += prev.conj(left, y_);
        }
    } else {
        acc += prev.conj(x_, xs_);
        Element yz = y_ * z_;
        for (int m = 1; m <= l_; ++m) {
            // -(-1)^m q^{m(m-1)} binom(l,m)_{q^2} y^{2m-1} z^{m-1} ... y z
            LaurentPoly c = qbinom(l_, m, 2) * LaurentPoly::q_power(m * (m - 1));
            if (m % 2 == 0) c = -c;
            Element left =
                p_->el_word(make_word(*p_, {{"y", 2 * m - 1}, {"z", m - 1}})).scaled(c);
            acc += prev.conj(left, yz);
        }
    }
    return memo_.emplace(n, std::move(acc)).first->second;
}

TensorAA cleft_omega(const PresPtr& quotient_pos, int n) {
    Element zp = quotient_pos->el_gen("z'");
    return TensorAA::from_pairs(quotient_pos, {{zp.pow(n), zp.pow(-n)}});
}

CheckReport verify_strong_connection(const PresPtr& p, const DegreeTable& t,
                                     const std::function<TensorAA(int)>& omega, int nmax) {
    CheckReport rep;
    if (!(omega(0) == TensorAA::one(p))) {
        rep.fail("omega(1_H) is not 1 (x) 1");
        return rep;
    }
    rep.log.push_back("omega(1_H) = 1 (x) 1");
    for (int n = -nmax; n <= nmax && rep.pass; ++n) {
        TensorAA w = omega(n);
        if (!(w.multiply_legs() == p->one())) {
            rep.fail("mu(omega(u^" + std::to_string(n) + ")) != 1, got " +
                     w.multiply_legs().str());
            break;
        }
        for (const auto& [lw, v] : w.pairs()) {
            if (t.word_degree(lw) != -n) {
                rep.fail("left leg " + p->word_str(lw) + " of omega(u^" + std::to_string(n) +
                         ") has degree " + std::to_string(t.word_degree(lw)));
                break;
            }
            if (!degree_of(v, t).is(n)) {
                rep.fail("right leg of omega(u^" + std::to_string(n) + ") at " + p->word_str(lw) +
                         " is not homogeneous of degree " + std::to_string(n) + ": " + v.str());
                break;
            }
        }
        if (rep.pass)
            rep.log.push_back("omega(u^" + std::to_string(n) + "): " +
                              std::to_string(w.pairs().size()) +
                              " pairs, unit and bidegree verified exactly");
    }
    return rep;
}

CheckReport verify_cleaving_map(const PresPtr& p, const DegreeTable& t,
                                const std::function<Element(int)>& j, int nmax) {
    CheckReport rep;
    if (!(j(0) == p->one())) {
        rep.fail("j(1_H) != 1");
        return rep;
    }
    for (int n = -nmax; n <= nmax && rep.pass; ++n) {
        Element jn = j(n);
        if (!degree_of(jn, t).is(n)) {
            rep.fail("j(u^" + std::to_string(n) + ") is not colinear: degree " +
                     degree_of(jn, t).str());
            break;
        }
        if (!(jn.star() == j(-n))) {
            rep.fail("j(u^" + std::to_string(n) + ")* != j(u^" + std::to_string(-n) + ")");
            break;
        }
    }
    for (int m = -nmax; m <= nmax && rep.pass; ++m)
        for (int n = -nmax; n <= nmax && rep.pass; ++n) {
            if (std::abs(m + n) > nmax) continue;
            if (!(j(m) * j(n) == j(m + n)))
                rep.fail("j(u^" + std::to_string(m) + ") j(u^" + std::to_string(n) +
                         ") != j(u^" + std::to_string(m + n) + ")");
        }
    if (rep.pass)
        rep.log.push_back("cleaving axioms verified exactly for |n| <= " + std::to_string(nmax));
    return rep;
}

CheckReport can_inverse_check(const PresPtr& p, const DegreeTable& t,
                              const std::function<TensorAA(int)>& omega, int nmax) {
    CheckReport rep;
    for (int n = -nmax; n <= nmax && rep.pass; ++n) {
        TensorAA om = omega(n);
        if (!(lifted_can(om, t) == TensorAH::delta(p, n))) {
            rep.fail("omega(u^" + std::to_string(n) + ") does not map to 1 (x) u^" +
                     std::to_string(n));
            break;
        }
        for (size_t gi = 0; gi < p->gens.size() && rep.pass; ++gi) {
            if (p->gens[gi].eliminated) continue;
            Element g = p->el_word(Word::single(static_cast<int>(gi)));
            TensorAH expct(p);
            expct.comp[n] = g;
            expct.prune();
            if (!(lifted_can(om.conj(g, p->one()), t) == expct))
                rep.fail(p->gens[gi].name + " . omega(u^" + std::to_string(n) +
                         ") does not map to " + p->gens[gi].name + " (x) u^" + std::to_string(n));
        }
    }
    if (rep.pass)
        rep.log.push_back("lifted canonical map inverted on generators for |n| <= " +
                          std::to_string(nmax));
    return rep;
}

}  // namespace qrpw
