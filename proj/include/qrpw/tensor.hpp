#pragma once
/**
 * @file tensor.hpp
 * @brief Two-leg tensors over an algebra and one-leg tensors against the
 *        circle Hopf algebra.
 *
 * TensorAA holds an element of A (x) A in a canonical form: left legs are
 * single normal words with coefficient 1, scalars are absorbed into the
 * right leg, legs with equal left word are merged and zero right legs are
 * dropped. Equality of canonical forms is then plain map equality.
 *
 * TensorAH holds an element of A (x) H for H the Laurent algebra on one
 * unitary u, keyed by the u-exponent.
 */

#include "qrpw/presentation.hpp"

#include <map>
#include <vector>

namespace qrpw {

class TensorAA {
public:
    static TensorAA zero(const PresPtr& p) { return TensorAA(p); }
    static TensorAA one(const PresPtr& p);
    /// Canonicalizes a sum of (left, right) pairs of arbitrary elements.
    static TensorAA from_pairs(const PresPtr& p,
                               const std::vector<std::pair<Element, Element>>& raw);

    const PresPtr& pres() const { return pres_; }
    const std::map<Word, Element>& pairs() const { return pairs_; }

    /// left . (u (x) v) . right = (left u) (x) (v right), canonicalized.
    TensorAA conj(const Element& left, const Element& right) const;
    TensorAA scaled(const LaurentPoly& c) const;
    /// Multiplication map mu(u (x) v) = u v.
    Element multiply_legs() const;
    /// The pairs as (left, right) elements, lefts monic words.
    std::vector<std::pair<Element, Element>> as_element_pairs() const;

    TensorAA& operator+=(const TensorAA& o);
    friend TensorAA operator+(TensorAA a, const TensorAA& b) { return a += b; }
    bool operator==(const TensorAA& o) const {
        return pres_ == o.pres_ && pairs_ == o.pairs_;
    }
    std::string str() const;

private:
    explicit TensorAA(PresPtr p) : pres_(std::move(p)) {}
    void add_pair(const Word& w, const Element& v);

    PresPtr pres_;
    std::map<Word, Element> pairs_;
};

struct TensorAH {
    PresPtr pres;
    std::map<int, Element> comp;  // u-exponent -> algebra leg

    explicit TensorAH(PresPtr p) : pres(std::move(p)) {}
    static TensorAH delta(const PresPtr& p, int n) {
        TensorAH t(p);
        t.comp[n] = p->one();
        return t;
    }
    void prune() {
        for (auto it = comp.begin(); it != comp.end();)
            it = it->second.is_zero() ? comp.erase(it) : std::next(it);
    }
    bool operator==(const TensorAH& o) const { return pres == o.pres && comp == o.comp; }
    std::string str() const;
};

/// Image of a two-leg tensor under the lifted canonical map
/// u (x) v |-> u v_(0) (x) v_(1), splitting v by the grading t.
TensorAH lifted_can(const TensorAA& t, const DegreeTable& table);

}  // namespace qrpw
