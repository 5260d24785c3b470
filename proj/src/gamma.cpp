#include "qrpw/assocmod.hpp"

#include "qrpw/grading.hpp"

#include <stdexcept>

namespace qrpw {

std::vector<Element> gamma_basis(const PresPtr& quotient, int n, int bound) {
    const bool pos = quotient->id == "quotient-pos";
    if (!pos && quotient->id != "quotient-neg")
        throw std::invalid_argument("gamma_basis needs a quotient sphere, got " + quotient->id);
    const DegreeTable& t = quotient->table_or_throw(pos ? "Omega" : "phi");
    std::vector<Element> out;
    for (const Word& w : quotient->normal_word_enum(bound)) {
        if (t.word_degree(w) != n) continue;
        Element e = quotient->el_word(w);
        if (pos) {
            // the even quotient is trivial as a comodule algebra, so the
            // component is free with generator z'^-n; factor through it
            Element inv = quotient->el_gen("z'", n) * e;
            if (!degree_of(inv, t).is(0) || !(quotient->el_gen("z'", -n) * inv == e))
                throw std::logic_error("gamma_basis: freeness factorization failed for " +
                                       e.str());
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Element> gamma_basis(int l, Parity parity, int n, int bound) {
    return gamma_basis(parity == Parity::neg ? quotient_sphere_neg(l) : quotient_sphere_pos(l),
                       n, bound);
}

}  // namespace qrpw
