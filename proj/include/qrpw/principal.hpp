#pragma once
/**
 * @file principal.hpp
 * @brief Bounded searches and evidence reports around the lifted canonical
 *        map: preimage search for 1 (x) u^t over the sphere, the probe for
 *        degree-1 units of the odd quotient sphere, and almost-freeness
 *        evidence for the weighted circle coactions on the sphere.
 *
 * All searches are exact (linear algebra over the Laurent polynomial ring
 * for the preimage search, over Q(q) or Q(q)(tau) for the unit probe) and
 * bounded; exhaustion results carry infeasibility certificates and are
 * reported as bounded evidence, never as proofs.
 */

#include "qrpw/presentation.hpp"
#include "qrpw/tensor.hpp"

#include <optional>

namespace qrpw {

struct HGSearchResult {
    bool found = false;
    std::optional<TensorAA> witness;  // set when found
    int pairs = 0;                    // candidate (b_i, b_j) pairs in the system
    int rows = 0;                     // matched support words
    // True when the coefficient system is solvable over the rational
    // function field Q(q); found additionally requires a Laurent solution.
    bool field_solvable = false;
    std::vector<std::string> log;     // integer pruning cases + certificate notes

    std::string verdict() const { return found ? "found" : "exhausted"; }
};

/**
 * Searches for tensors T = sum c_ij b_i (x) b_j over the sphere algebra with
 * weights (k, l), basis words of length <= bound, such that the lifted
 * canonical map sends T to 1 (x) u^target. Right words are restricted to
 * degree target and left words to the opposite bidegree (both restrictions
 * are complete: contributions to other degrees decouple). The coefficient
 * system is solved exactly with unknowns in the Laurent polynomial ring,
 * matching the coefficient ring of the algebra elements; systems that are
 * solvable only with rational-function coefficients are reported as
 * exhausted with the distinction noted in the log.
 */
HGSearchResult hg_preimage_search(int k, int l, int target_degree, int bound);

struct UnitProbeReport {
    bool pass = false;     // every candidate family refuted (bounded evidence)
    std::string verdict;
    std::string witness;   // set when a unit candidate actually solved
    std::vector<std::string> log;
    std::vector<std::string> undetermined;  // families the field analysis could not settle
};

/**
 * Evidence that the odd quotient sphere has no unit of circle-degree 1:
 * certifies z^n as units, then refutes every homogeneous degree-1 candidate
 * supported on at most support_size basis words of length <= bound, with a
 * two-sided inverse of length <= bound + 2l. Single-parameter families
 * (pair candidates) are handled over Q(q)(tau) with certificate gcd
 * analysis; quotient arguments settle the families containing y.
 */
UnitProbeReport noncleft_unit_probe(int l, int support_size, int bound);

struct AlmostFreeReport {
    bool pass = false;
    std::string witness;
    std::vector<std::string> log;
    std::vector<std::string> cokernel_generators;
};

/**
 * Almost-freeness evidence for the weight-(k, l) circle coaction on the
 * sphere, k = 1 (odd quotient, exponent multiplier l) or k = 2 with l odd
 * (even quotient, multiplier 2l): verifies the commuting square on quotient
 * generators, exhibits 1 (x) u^{m*mult} in the image of the lifted canonical
 * map through the inclusion for |m| <= 3, and lists cokernel generators.
 */
AlmostFreeReport almost_free_evidence(int k, int l);

}  // namespace qrpw
