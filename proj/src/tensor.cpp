#include "qrpw/tensor.hpp"

namespace qrpw {

TensorAA TensorAA::one(const PresPtr& p) {
    TensorAA t(p);
    t.pairs_.emplace(Word::one(), p->one());
    return t;
}

void TensorAA::add_pair(const Word& w, const Element& v) {
    auto it = pairs_.find(w);
    if (it == pairs_.end()) {
        if (!v.is_zero()) pairs_.emplace(w, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) pairs_.erase(it);
}

TensorAA TensorAA::from_pairs(const PresPtr& p,
                              const std::vector<std::pair<Element, Element>>& raw) {
    TensorAA t(p);
    for (const auto& [a, b] : raw) {
        if (a.pres() != p || b.pres() != p)
            throw std::invalid_argument("tensor legs must live in one algebra");
        for (const auto& [w, c] : a.terms()) t.add_pair(w, b.scaled(c));
    }
    return t;
}

TensorAA TensorAA::conj(const Element& left, const Element& right) const {
    TensorAA out(pres_);
    for (const auto& [w, v] : pairs_) {
        Element lw = left * pres_->el_word(w);
        Element vr = v * right;
        for (const auto& [w2, c2] : lw.terms()) out.add_pair(w2, vr.scaled(c2));
    }
    return out;
}

TensorAA TensorAA::scaled(const LaurentPoly& c) const {
    TensorAA out(pres_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : pairs_) out.pairs_.emplace(w, v.scaled(c));
    return out;
}

Element TensorAA::multiply_legs() const {
    Element acc = pres_->zero();
    for (const auto& [w, v] : pairs_) acc += pres_->el_word(w) * v;
    return acc;
}

std::vector<std::pair<Element, Element>> TensorAA::as_element_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    out.reserve(pairs_.size());
    for (const auto& [w, v] : pairs_) out.push_back({pres_->el_word(w), v});
    return out;
}

TensorAA& TensorAA::operator+=(const TensorAA& o) {
    if (pres_ != o.pres_) throw std::invalid_argument("tensor sum across algebras");
    for (const auto& [w, v] : o.pairs_) add_pair(w, v);
    return *this;
}

namespace {

void join_term(std::string& out, const std::string& piece) {
    if (out.empty()) {
        out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
    } else {
        out += " + " + piece;
    }
}

}  // namespace

std::string TensorAA::str() const {
    if (pairs_.empty()) return "0";
    std::string out;
    for (const auto& [w, v] : pairs_) {
        std::string piece;
        if (v.support_size() == 1) {
            // display the scalar back on the left leg
            const auto& [w2, c2] = *v.terms().begin();
            piece = pres_->terms_str({{w, c2}}) + " (x) " + pres_->word_str(w2);
        } else {
            piece = pres_->word_str(w) + " (x) (" + v.str() + ")";
        }
        join_term(out, piece);
    }
    return out;
}

std::string TensorAH::str() const {
    if (comp.empty()) return "0";
    std::string out;
    for (const auto& [n, e] : comp) {
        std::string h = n == 0 ? "1" : (n == 1 ? "u" : "u^" + std::to_string(n));
        std::string piece = (e.support_size() == 1 ? e.str() : "(" + e.str() + ")") + " (x) " + h;
        join_term(out, piece);
    }
    return out;
}

TensorAH lifted_can(const TensorAA& t, const DegreeTable& table) {
    TensorAH out(t.pres());
    for (const auto& [w, v] : t.pairs()) {
        Element lw = t.pres()->el_word(w);
        for (const auto& [w2, c2] : v.terms()) {
            int d = table.word_degree(w2);
            auto [it, fresh] = out.comp.emplace(d, t.pres()->zero());
            (void)fresh;
            it->second += lw * t.pres()->el({{w2, c2}});
        }
    }
    out.prune();
    return out;
}

}  // namespace qrpw
