#pragma once
/**
 * @file algebras.hpp
 * @brief The concrete algebra family: a q-deformed 3-sphere with a weighted
 *        circle grading, its two quotient 3-spheres, and the two fixed-point
 *        base algebras, together with the canonical maps between them.
 *
 * All presentations come with oriented rewrite rules whose normal forms give
 * explicit linear bases; the factories also attach the relevant degree
 * tables and a normal-word enumerator used by searches.
 */

#include "qrpw/presentation.hpp"

namespace qrpw {

/// Selects one of the two quotient families (odd/neg or even/pos parity).
enum class Parity { neg, pos };

/**
 * Coordinate algebra of the deformed 3-sphere. Generators z0, z0*, z1,
 * z1* (eliminated via z1* -> z1 xi), xi (central unitary). Degree tables:
 *  - "rho": Z-grading with weights deg z0 = k, deg z1 = l, deg xi = -2l;
 *  - "Phi": Z/2l-grading with deg z0 = 2, deg z1 = l, deg xi = 0;
 *  - "Zl":  Z/l-grading with deg z0 = 1, deg z1 = deg xi = 0.
 */
PresPtr sphere_algebra(int l = 1, int k = 1);

/**
 * Negative-parity quotient 3-sphere of weight l. Generators x, x*, y,
 * y* (eliminated via y* -> y z), z (central unitary). Table "phi":
 * Z-grading with deg x = deg y = 1, deg z = -2.
 */
PresPtr quotient_sphere_neg(int l);

/**
 * Positive-parity quotient 3-sphere of weight l (l odd). Generators x', x'*,
 * y', y'* (eliminated via y'* -> y' z'^2), z' (central unitary).
 * Table "Omega": Z-grading with deg x' = deg y' = 1, deg z' = -1.
 */
PresPtr quotient_sphere_pos(int l);

/**
 * Negative-parity base algebra of weight l. Generators c-, c-*, b, b*
 * (normal exponent of b at most 1), a (self-adjoint). Normal words are
 * c-^g b^e a^n and their adjoints with matching star signs.
 */
PresPtr base_algebra_neg(int l);

/// Positive-parity base algebra of weight l (l odd). Generators c+, c+*, a.
PresPtr base_algebra_pos(int l);

// Canonical *-algebra maps, given as generator images between explicit
// instances (pointer identity of src/dst matters for element arithmetic).
Morphism embed_neg(PresPtr src, PresPtr dst);      // base-neg  -> sphere
Morphism embed_pos(PresPtr src, PresPtr dst);      // base-pos  -> sphere
Morphism incl_neg(PresPtr src, PresPtr dst);       // quotient-neg -> sphere
Morphism incl_pos(PresPtr src, PresPtr dst);       // quotient-pos -> sphere
Morphism embed_neg_fix(PresPtr src, PresPtr dst);  // base-neg  -> quotient-neg
Morphism embed_pos_fix(PresPtr src, PresPtr dst);  // base-pos  -> quotient-pos

// Convenience overloads constructing fresh source/target instances.
Morphism embed_neg(int l);
Morphism embed_pos(int l);
Morphism incl_neg(int l, int k = 1);
Morphism incl_pos(int l, int k = 1);
Morphism embed_neg_fix(int l);
Morphism embed_pos_fix(int l);

/**
 * Expansion of scale * lead * prod_{m=m0}^{m1} (1 - q^(2m) base) as a term
 * list in powers of base. `base` must be a product of pairwise commuting
 * generator powers (a single word); an empty range yields scale * lead.
 */
TermList one_minus_q2m_product(const Word& base, int m0, int m1, const Word& lead = Word::one(),
                               const LaurentPoly& scale = LaurentPoly::one());

/// Word helper: builds a word from (generator name, exponent) pairs.
Word make_word(const Presentation& p, const std::vector<std::pair<std::string, long long>>& factors);

/// CLI registry. Names: sphere, quotient-neg, quotient-pos, base-neg, base-pos.
PresPtr algebra_by_name(const std::string& name, int l, int k = 1);

}  // namespace qrpw
