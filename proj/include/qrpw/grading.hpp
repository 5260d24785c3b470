#pragma once
/**
 * @file grading.hpp
 * @brief Degree bookkeeping for the circle and cyclic gradings, coinvariant
 *        bases, and rewriting invariant elements through the fixed-point
 *        embeddings.
 *
 * Gradings are induced by DegreeTable entries on generators; every normal
 * word is homogeneous, so an element is homogeneous exactly when all its
 * support words share one degree. "Inhomogeneous" is a first-class outcome,
 * not an error.
 */

#include "qrpw/presentation.hpp"

namespace qrpw {

struct DegreeResult {
    bool homogeneous = true;
    bool zero = false;  // degree of 0 is undefined but homogeneous
    int value = 0;

    bool is(int d) const { return homogeneous && !zero && value == d; }
    std::string str() const {
        if (zero) return "zero";
        if (!homogeneous) return "inhomogeneous";
        return std::to_string(value);
    }
};

DegreeResult degree_of(const Element& e, const DegreeTable& t);

/// Sum of the terms of degree d (the d-homogeneous component).
Element homogeneous_part(const Element& e, const DegreeTable& t, int d);

/// All degree-0 normal words of length <= bound, in enumeration order.
std::vector<Word> coinvariant_words(const Presentation& p, const DegreeTable& t, int bound);

/**
 * Rewrites a degree-0 element of a quotient sphere as an element of the
 * matching base algebra through the fixed-point embedding embed_fix
 * (src = base algebra, dst = quotient sphere). The result is verified by
 * applying embed_fix before returning; non-invariant input raises
 * std::invalid_argument.
 */
Element express_in_coinvariants(const Morphism& embed_fix, const Element& e);

/**
 * Evidence that a Z-grading is strong (A_i A_j = A_{i+j}): for each
 * 1 <= i <= range, a factorization of 1 into sums of products A_i . A_{-i}
 * and A_{-i} . A_i, each verified exactly. The i = 1 factorization is also
 * cross-checked by solving the corresponding exact linear system over Q(q)
 * on normal words of length <= bound (bound <= 0 picks one that covers the
 * constructive witness); higher i compose the i = 1 witness with itself.
 */
struct StrongGradingEvidence {
    bool pass = true;
    std::string witness;  // first failure description
    std::vector<std::string> log;
    // i -> pairs (u, v), deg u = i, deg v = -i, sum u v = 1
    std::map<int, std::vector<std::pair<Element, Element>>> unit_factorizations;
};

StrongGradingEvidence strong_grading_probe(const PresPtr& p, const DegreeTable& t, int range,
                                           int bound = 0);

}  // namespace qrpw
