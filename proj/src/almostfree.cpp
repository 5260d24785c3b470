#include "qrpw/principal.hpp"

#include "qrpw/algebras.hpp"
#include "qrpw/connection.hpp"
#include "qrpw/grading.hpp"

#include <stdexcept>

namespace qrpw {

/**
 * The weight-(k, l) circle coaction on the sphere restricts the quotient
 * algebra's own circle grading through a hop exponent multiplier: degree-d
 * quotient elements land in sphere degree mult * d. The lifted canonical map
 * of the restricted coaction therefore hits exactly the tensors
 * 1 (x) u^{m * mult}, and the missing exponents generate a finite cokernel.
 */
AlmostFreeReport almost_free_evidence(int k, int l) {
    if (l < 1) throw std::invalid_argument("almost_free_evidence: needs l >= 1");
    int mult = 0;
    if (k == 1) {
        mult = l;
    } else if (k == 2) {
        if (l % 2 == 0)
            throw std::invalid_argument("almost_free_evidence: k = 2 needs odd l (otherwise "
                                        "gcd(k, 2l) > 2 and the quotient changes shape)");
        mult = 2 * l;
    } else {
        throw std::invalid_argument("almost_free_evidence: k must be 1 or 2");
    }

    AlmostFreeReport rep;
    rep.pass = true;
    Morphism inc = k == 1 ? incl_neg(l, 1) : incl_pos(l, 2);
    PresPtr qs = inc.src, sp = inc.dst;
    const auto& qt = qs->table_or_throw(k == 1 ? "phi" : "Omega");
    const auto& rho = sp->table_or_throw("rho");

    auto fail = [&](const std::string& what) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = what;
        rep.log.push_back("FAIL " + what);
    };

    // coaction square on generators: image degree = mult * source degree
    for (const auto& [gi, image] : inc.img) {
        const std::string& name = qs->gens[static_cast<size_t>(gi)].name;
        int dq = qt.deg.at(static_cast<size_t>(gi));
        auto d = degree_of(image, rho);
        if (d.is(mult * dq))
            rep.log.push_back("generator " + name + ": image homogeneous of degree " +
                              std::to_string(mult * dq) + " = " + std::to_string(mult) + " * " +
                              std::to_string(dq));
        else
            fail("generator " + name + ": image degree " + d.str() + ", expected " +
                 std::to_string(mult * dq));
    }

    // every tensor 1 (x) u^{m * mult} is hit: push a connection form through
    // the inclusion and apply the lifted canonical map of the sphere coaction
    std::optional<StrongConnection> sc;
    if (k == 1) sc.emplace(qs, l);
    for (int m = -3; m <= 3; ++m) {
        TensorAA om = k == 1 ? sc->omega(m) : cleft_omega(qs, m);
        std::vector<std::pair<Element, Element>> pushed;
        for (const auto& [left, right] : om.as_element_pairs())
            pushed.push_back({inc.apply(left), inc.apply(right)});
        TensorAA t = TensorAA::from_pairs(sp, pushed);
        if (lifted_can(t, rho) == TensorAH::delta(sp, m * mult))
            rep.log.push_back("1 (x) u^" + std::to_string(m * mult) +
                              " reached through the inclusion (m = " + std::to_string(m) + ")");
        else
            fail("1 (x) u^" + std::to_string(m * mult) + " not reached");
    }

    // cokernel of the exponent lattice mult * Z inside Z
    for (int j = 1; j < mult; ++j)
        rep.cokernel_generators.push_back("[1 (x) u^" + std::to_string(j) + "]");
    rep.log.push_back("cokernel generated by " + std::to_string(mult - 1) +
                      " classes [1 (x) u^j], 0 < j < " + std::to_string(mult));
    return rep;
}

}  // namespace qrpw
