#pragma once
/**
 * @file presentation.hpp
 * @brief Finitely presented *-algebras with oriented, confluent rewrite rules.
 *
 * A Presentation owns an alphabet of generators and three oriented rule
 * families:
 *   - swaps        g^a h^b -> q^(c a b) h^b g^a     (q-commutation, c an int)
 *   - contractions g h     -> sum of lower terms    (consumes one unit each)
 *   - substitutions g      -> sum of terms          (eliminated generators)
 * Central unitary generators commute with everything (coefficient 1) and are
 * the only generators allowed negative exponents; their star is inversion.
 *
 * Elements are kept in normal form: a finite map from irreducible words to
 * nonzero Laurent coefficients. Reduction terminates for the rule sets used
 * here (each step lowers a lexicographic (mixed-pair, inversion) measure) and
 * unique normal forms are validated probabilistically by check_presentation,
 * which races two independent reduction strategies.
 */

#include "qrpw/laurent.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qrpw {

struct Factor {
    int gen = 0;
    long long exp = 0;
    auto operator<=>(const Factor&) const = default;
};

/// Product of generator powers; the empty word is the algebra unit.
struct Word {
    std::vector<Factor> f;
    auto operator<=>(const Word&) const = default;

    bool empty() const { return f.empty(); }
    static Word one() { return {}; }
    static Word single(int gen, long long exp = 1) {
        Word w;
        if (exp != 0) w.f.push_back({gen, exp});
        return w;
    }
    Word& append(int gen, long long exp) {
        if (exp != 0) f.push_back({gen, exp});
        return *this;
    }
    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        w.f.insert(w.f.end(), b.f.begin(), b.f.end());
        return w;
    }
    /// Sum of absolute exponents (word length in generator units).
    long long length() const {
        long long n = 0;
        for (const auto& fa : f) n += fa.exp < 0 ? -fa.exp : fa.exp;
        return n;
    }
};

using Term = std::pair<Word, LaurentPoly>;
using TermList = std::vector<Term>;

struct Generator {
    std::string name;
    int star = -1;          // index of the adjoint generator (self for self-adjoint)
    bool central = false;   // central unitary: exponents range over Z, star = inverse
    int rank = 0;           // target position in normal words (lower = further left)
    long long max_exp = 0;  // 0 = unbounded; otherwise normal exponent bound
    bool eliminated = false;  // has a substitution rule, never appears in normal words
};

/// Z- or Z/m-valued degree assignment on generators, inducing a grading.
struct DegreeTable {
    std::string name;
    int modulus = 0;  // 0 means Z-valued
    std::vector<int> deg;

    int reduce_value(long long v) const {
        if (modulus == 0) return static_cast<int>(v);
        long long m = v % modulus;
        if (m < 0) m += modulus;
        return static_cast<int>(m);
    }
    int word_degree(const Word& w) const {
        long long s = 0;
        for (const auto& fa : w.f) s += fa.exp * deg.at(static_cast<size_t>(fa.gen));
        return reduce_value(s);
    }
};

enum class Strategy { Leftmost, Random };

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

class Element {
public:
    Element() = default;
    Element(PresPtr pres, std::map<Word, LaurentPoly> terms)
        : pres_(std::move(pres)), terms_(std::move(terms)) {}

    const PresPtr& pres() const { return pres_; }
    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
    }
    size_t support_size() const { return terms_.size(); }
    LaurentPoly coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly::zero() : it->second;
    }

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    Element& operator*=(const Element& o) { return *this = *this * o; }
    Element scaled(const LaurentPoly& c) const;

    Element star() const;
    Element pow(long long n) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

private:
    PresPtr pres_;
    std::map<Word, LaurentPoly> terms_;
};

/**
 * Rewrite statistics for one reduction run (used by tests and the CLI's
 * verbose mode; steps is the number of rule applications).
 */
struct ReduceStats {
    long long steps = 0;
    long long peak_queue = 0;
};

class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    std::string id;
    std::vector<Generator> gens;
    std::map<std::string, int> gen_by_name;
    // (g, h) adjacency in rewrite order -> q-exponent c: g^a h^b -> q^(c a b) h^b g^a.
    std::map<std::pair<int, int>, int> swaps;
    // (g, h) -> replacement for the two-letter word g h; key (g, g) handles g^2.
    std::map<std::pair<int, int>, TermList> contracts;
    // g -> replacement for the one-letter word g.
    std::map<int, TermList> substs;
    std::vector<DegreeTable> tables;
    int weight = 1;  // structural parameter baked into the rules (l)

    /// Enumerates all normal words of length <= bound (central exponents range
    /// over [-bound, bound]); set by the factory for each concrete algebra.
    std::function<std::vector<Word>(int)> normal_word_enum;

    int gen(const std::string& name) const;
    const DegreeTable* table(const std::string& name) const;
    const DegreeTable& table_or_throw(const std::string& name) const;

    /// Merges adjacent equal generators, drops zero exponents, rejects
    /// negative exponents on non-central generators.
    Word normalize_word(const Word& w) const;

    std::map<Word, LaurentPoly> reduce_terms(const TermList& input, Strategy strategy,
                                             std::mt19937_64* rng = nullptr,
                                             ReduceStats* stats = nullptr) const;

    Element el(const TermList& input, Strategy strategy = Strategy::Leftmost,
               std::mt19937_64* rng = nullptr) const;
    Element el_word(const Word& w) const { return el({{w, LaurentPoly::one()}}); }
    Element el_gen(const std::string& name, long long exp = 1) const {
        return el_word(Word::single(gen(name), exp));
    }
    Element one() const { return el({{Word::one(), LaurentPoly::one()}}); }
    Element zero() const { return el({}); }
    Element scalar(const LaurentPoly& c) const { return el({{Word::one(), c}}); }

    /// Raw star on a term list (no reduction): reverses factors, swaps
    /// adjoint partners, inverts central unitaries. Coefficients are fixed
    /// (the coefficient ring has trivial involution).
    TermList star_terms(const TermList& input) const;

    /// True when no rewrite rule applies to w.
    bool is_normal(const Word& w) const;
    /// Structural shape of normal words: strictly increasing generator rank,
    /// positive exponents off-center, per-generator exponent bounds.
    bool matches_normal_pattern(const Word& w) const;

    /// All defining relations as (lhs, rhs) term-list pairs, derived from the
    /// rule tables (used by consistency checks and morphism verification).
    std::vector<std::pair<TermList, TermList>> relations() const;

    std::string word_str(const Word& w) const;
    std::string terms_str(const std::map<Word, LaurentPoly>& terms) const;

    static constexpr long long kStepCap = 20'000'000;
};

/// Outcome of a verification routine: pass/fail plus a human-readable
/// witness for the first failure (empty on success).
struct CheckReport {
    bool pass = true;
    std::vector<std::string> log;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

/**
 * Validates the rule set: every rule degree-homogeneous for every registered
 * table, rule set closed under star, and `probes` random words reduced by two
 * independent strategies (leftmost and randomized) reach identical normal
 * forms that match the normal pattern and are fixed by re-reduction.
 */
CheckReport check_presentation(const PresPtr& p, int probes, std::uint64_t seed);

/// Algebra map between presentations, determined by generator images.
struct Morphism {
    std::string id;
    PresPtr src;
    PresPtr dst;
    std::map<int, Element> img;  // keyed by src generator index

    Element apply_word(const Word& w) const;
    Element apply(const Element& e) const;
    TermList apply_terms_raw(const TermList& terms) const;
};

/**
 * Verifies that the generator images satisfy every defining relation of the
 * source exactly and intertwine star, so the assignment extends to a unique
 * *-algebra map.
 */
CheckReport check_morphism(const Morphism& m);

/// Composition dst(f) after g, with g.dst == f.src.
Morphism compose(const Morphism& f, const Morphism& g);

}  // namespace qrpw
