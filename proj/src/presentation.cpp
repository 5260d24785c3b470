#include "qrpw/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qrpw {

int Presentation::gen(const std::string& name) const {
    auto it = gen_by_name.find(name);
    if (it == gen_by_name.end())
        throw std::invalid_argument("unknown generator '" + name + "' in algebra " + id);
    return it->second;
}

const DegreeTable* Presentation::table(const std::string& name) const {
    for (const auto& t : tables)
        if (t.name == name) return &t;
    return nullptr;
}

const DegreeTable& Presentation::table_or_throw(const std::string& name) const {
    const DegreeTable* t = table(name);
    if (!t) throw std::invalid_argument("unknown degree table '" + name + "' on algebra " + id);
    return *t;
}

Word Presentation::normalize_word(const Word& w) const {
    Word out;
    for (const auto& fa : w.f) {
        if (fa.exp == 0) continue;
        const Generator& g = gens.at(static_cast<size_t>(fa.gen));
        if (fa.exp < 0 && !g.central)
            throw std::domain_error("negative exponent on non-central generator " + g.name);
        if (!out.f.empty() && out.f.back().gen == fa.gen) {
            out.f.back().exp += fa.exp;
            if (out.f.back().exp == 0) out.f.pop_back();
        } else {
            out.f.push_back(fa);
        }
    }
    return out;
}

namespace {

// kind: 0 substitution at factor pos, 1 same-generator overflow contraction,
// 2 adjacent contraction at (pos, pos+1), 3 swap at (pos, pos+1).
struct Cand {
    int pos;
    int kind;
};

}  // namespace

// Collects applicable rewrite positions in deterministic left-to-right order.
static void collect_candidates(const Presentation& p, const Word& w, std::vector<Cand>& out) {
    const int n = static_cast<int>(w.f.size());
    for (int i = 0; i < n; ++i) {
        const Factor& fa = w.f[static_cast<size_t>(i)];
        const Generator& g = p.gens[static_cast<size_t>(fa.gen)];
        if (p.substs.count(fa.gen)) out.push_back({i, 0});
        if (g.max_exp > 0 && fa.exp > g.max_exp && p.contracts.count({fa.gen, fa.gen}))
            out.push_back({i, 1});
        if (i + 1 < n) {
            const Factor& fb = w.f[static_cast<size_t>(i + 1)];
            const Generator& h = p.gens[static_cast<size_t>(fb.gen)];
            if (p.contracts.count({fa.gen, fb.gen})) {
                out.push_back({i, 2});
            } else if (p.swaps.count({fa.gen, fb.gen})) {
                out.push_back({i, 3});
            } else if ((g.central || h.central) && g.rank > h.rank) {
                out.push_back({i, 3});
            }
        }
    }
}

bool Presentation::is_normal(const Word& w) const {
    std::vector<Cand> c;
    collect_candidates(*this, w, c);
    return c.empty();
}

bool Presentation::matches_normal_pattern(const Word& w) const {
    int prev_rank = -1;
    for (const auto& fa : w.f) {
        const Generator& g = gens.at(static_cast<size_t>(fa.gen));
        if (g.eliminated) return false;
        if (!g.central && fa.exp <= 0) return false;
        if (g.max_exp > 0 && fa.exp > g.max_exp) return false;
        if (g.rank <= prev_rank) return false;
        prev_rank = g.rank;
    }
    return true;
}

static void apply_candidate(const Presentation& p, const Word& w, const LaurentPoly& c,
                            const Cand& cd, TermList& out) {
    const auto& f = w.f;
    const size_t i = static_cast<size_t>(cd.pos);
    auto prefix = [&](Word& nw) { nw.f.assign(f.begin(), f.begin() + static_cast<long>(i)); };
    switch (cd.kind) {
        case 0: {  // substitute one unit of f[i]
            const TermList& rhs = p.substs.at(f[i].gen);
            for (const auto& [rw, rc] : rhs) {
                Word nw;
                prefix(nw);
                nw.f.insert(nw.f.end(), rw.f.begin(), rw.f.end());
                nw.append(f[i].gen, f[i].exp - 1);
                nw.f.insert(nw.f.end(), f.begin() + static_cast<long>(i) + 1, f.end());
                out.push_back({p.normalize_word(nw), c * rc});
            }
            break;
        }
        case 1: {  // g^e -> g^(e-2) * rhs(g g)
            const TermList& rhs = p.contracts.at({f[i].gen, f[i].gen});
            for (const auto& [rw, rc] : rhs) {
                Word nw;
                prefix(nw);
                nw.append(f[i].gen, f[i].exp - 2);
                nw.f.insert(nw.f.end(), rw.f.begin(), rw.f.end());
                nw.f.insert(nw.f.end(), f.begin() + static_cast<long>(i) + 1, f.end());
                out.push_back({p.normalize_word(nw), c * rc});
            }
            break;
        }
        case 2: {  // g^a h^b -> g^(a-1) * rhs(g h) * h^(b-1)
            const TermList& rhs = p.contracts.at({f[i].gen, f[i + 1].gen});
            for (const auto& [rw, rc] : rhs) {
                Word nw;
                prefix(nw);
                nw.append(f[i].gen, f[i].exp - 1);
                nw.f.insert(nw.f.end(), rw.f.begin(), rw.f.end());
                nw.append(f[i + 1].gen, f[i + 1].exp - 1);
                nw.f.insert(nw.f.end(), f.begin() + static_cast<long>(i) + 2, f.end());
                out.push_back({p.normalize_word(nw), c * rc});
            }
            break;
        }
        case 3: {  // g^a h^b -> q^(c a b) h^b g^a
            auto it = p.swaps.find({f[i].gen, f[i + 1].gen});
            long long ce = it == p.swaps.end() ? 0 : it->second;
            long long qe = ce * f[i].exp * f[i + 1].exp;
            Word nw;
            prefix(nw);
            nw.f.push_back(f[i + 1]);
            nw.f.push_back(f[i]);
            nw.f.insert(nw.f.end(), f.begin() + static_cast<long>(i) + 2, f.end());
            out.push_back({p.normalize_word(nw),
                           qe == 0 ? c : c * LaurentPoly::q_power(static_cast<int>(qe))});
            break;
        }
        default:
            throw std::logic_error("apply_candidate: bad kind");
    }
}

std::map<Word, LaurentPoly> Presentation::reduce_terms(const TermList& input, Strategy strategy,
                                                       std::mt19937_64* rng,
                                                       ReduceStats* stats) const {
    std::mt19937_64 fallback(0);
    if (strategy == Strategy::Random && !rng) rng = &fallback;

    std::map<Word, LaurentPoly> result;
    TermList work;
    work.reserve(input.size());
    for (const auto& [w, c] : input)
        if (!c.is_zero()) work.push_back({normalize_word(w), c});

    long long steps = 0;
    long long peak = static_cast<long long>(work.size());
    std::vector<Cand> cands;
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        cands.clear();
        collect_candidates(*this, t.first, cands);
        if (cands.empty()) {
            auto it = result.find(t.first);
            if (it == result.end()) {
                result.emplace(std::move(t.first), std::move(t.second));
            } else {
                it->second += t.second;
                if (it->second.is_zero()) result.erase(it);
            }
            continue;
        }
        const Cand& pick = strategy == Strategy::Leftmost
                               ? cands.front()
                               : cands[static_cast<size_t>((*rng)() % cands.size())];
        apply_candidate(*this, t.first, t.second, pick, work);
        if (++steps > kStepCap)
            throw std::runtime_error("reduce: step cap exceeded in algebra " + id +
                                     " (non-terminating rule set?)");
        peak = std::max(peak, static_cast<long long>(work.size()));
    }
    if (stats) {
        stats->steps = steps;
        stats->peak_queue = peak;
    }
    return result;
}

Element Presentation::el(const TermList& input, Strategy strategy, std::mt19937_64* rng) const {
    return Element(shared_from_this(), reduce_terms(input, strategy, rng));
}

TermList Presentation::star_terms(const TermList& input) const {
    TermList out;
    out.reserve(input.size());
    for (const auto& [w, c] : input) {
        Word sw;
        for (auto it = w.f.rbegin(); it != w.f.rend(); ++it) {
            const Generator& g = gens.at(static_cast<size_t>(it->gen));
            if (g.central)
                sw.append(it->gen, -it->exp);
            else
                sw.append(g.star, it->exp);
        }
        out.push_back({sw, c});
    }
    return out;
}

std::vector<std::pair<TermList, TermList>> Presentation::relations() const {
    std::vector<std::pair<TermList, TermList>> rels;
    for (const auto& [gh, ce] : swaps) {
        Word l = Word::single(gh.first) * Word::single(gh.second);
        Word r = Word::single(gh.second) * Word::single(gh.first);
        rels.push_back({{{l, LaurentPoly::one()}}, {{r, LaurentPoly::q_power(ce)}}});
    }
    for (const auto& [gh, rhs] : contracts) {
        Word l = gh.first == gh.second ? Word::single(gh.first, 2)
                                       : Word::single(gh.first) * Word::single(gh.second);
        rels.push_back({{{l, LaurentPoly::one()}}, rhs});
    }
    for (const auto& [g, rhs] : substs)
        rels.push_back({{{Word::single(g), LaurentPoly::one()}}, rhs});
    return rels;
}

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& fa : w.f) {
        if (!out.empty()) out += " ";
        out += gens.at(static_cast<size_t>(fa.gen)).name;
        if (fa.exp != 1) {
            out += "^";
            out += std::to_string(fa.exp);
        }
    }
    return out;
}

std::string Presentation::terms_str(const std::map<Word, LaurentPoly>& terms) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        std::string piece;
        bool negative = false;
        if (c.is_monomial()) {
            const auto& [e, r] = *c.terms().begin();
            negative = r < 0;
            LaurentPoly mono = LaurentPoly::monomial(negative ? Rational(-r) : r, e);
            std::string ms = mono.str();
            if (w.empty())
                piece = ms;
            else if (ms == "1")
                piece = word_str(w);
            else
                piece = ms + " " + word_str(w);
        } else {
            piece = "(" + c.str() + ")";
            if (!w.empty()) piece += " " + word_str(w);
        }
        if (first) {
            if (negative) out += "-";
            out += piece;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

Element Element::operator-() const {
    std::map<Word, LaurentPoly> t;
    for (const auto& [w, c] : terms_) t.emplace(w, -c);
    return Element(pres_, std::move(t));
}

static void require_same_pres(const Element& a, const Element& b) {
    if (a.pres() != b.pres())
        throw std::domain_error("element operation across different presentations");
}

Element& Element::operator+=(const Element& o) {
    if (!pres_) return *this = o;
    if (!o.pres_) return *this;
    require_same_pres(*this, o);
    for (const auto& [w, c] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element operator*(const Element& a, const Element& b) {
    require_same_pres(a, b);
    TermList prod;
    prod.reserve(a.terms().size() * b.terms().size());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) prod.push_back({wa * wb, ca * cb});
    return a.pres()->el(prod);
}

Element Element::scaled(const LaurentPoly& c) const {
    std::map<Word, LaurentPoly> t;
    if (!c.is_zero())
        for (const auto& [w, c0] : terms_) t.emplace(w, c0 * c);
    return Element(pres_, std::move(t));
}

Element Element::star() const {
    TermList raw(terms_.begin(), terms_.end());
    return pres_->el(pres_->star_terms(raw));
}

Element Element::pow(long long n) const {
    if (!pres_) throw std::domain_error("pow on empty element");
    if (n == 0) return pres_->one();
    if (n < 0) {
        // only invertible scalars times central words can be raised negatively
        if (terms_.size() != 1) throw std::domain_error("pow: negative power of a non-unit");
        const auto& [w, c] = *terms_.begin();
        Word iw;
        for (const auto& fa : w.f) {
            if (!pres_->gens.at(static_cast<size_t>(fa.gen)).central)
                throw std::domain_error("pow: negative power of a non-unit word");
            iw.append(fa.gen, -fa.exp);
        }
        Element inv = pres_->el({{iw, c.inverse()}});
        return inv.pow(-n);
    }
    Element acc = pres_->one();
    Element base = *this;
    long long k = n;
    while (k > 0) {
        if (k & 1) acc *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

bool Element::operator==(const Element& o) const {
    if (pres_ != o.pres_) {
        if (is_zero() && o.is_zero()) return true;
        require_same_pres(*this, o);
    }
    return terms_ == o.terms_;
}

std::string Element::str() const {
    if (!pres_) return "0";
    return pres_->terms_str(terms_);
}

namespace {

Word random_word(const Presentation& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lend(1, 6);
    std::uniform_int_distribution<int> gend(0, static_cast<int>(p.gens.size()) - 1);
    std::uniform_int_distribution<int> expd(1, 4);
    std::uniform_int_distribution<int> cexpd(-4, 4);
    Word w;
    int len = lend(rng);
    for (int i = 0; i < len; ++i) {
        int g = gend(rng);
        long long e;
        if (p.gens[static_cast<size_t>(g)].central) {
            do {
                e = cexpd(rng);
            } while (e == 0);
        } else {
            e = expd(rng);
        }
        w.append(g, e);
    }
    return w;
}

std::string rule_str(const Presentation& p, const std::pair<TermList, TermList>& rel) {
    auto side = [&](const TermList& tl) {
        std::map<Word, LaurentPoly> m;
        for (const auto& [w, c] : tl) m[w] += c;
        return p.terms_str(m);
    };
    return side(rel.first) + " -> " + side(rel.second);
}

}  // namespace

CheckReport check_presentation(const PresPtr& p, int probes, std::uint64_t seed) {
    CheckReport rep;
    auto rels = p->relations();

    for (const auto& t : p->tables) {
        for (const auto& rel : rels) {
            std::optional<int> deg;
            bool homogeneous = true;
            for (const auto& side : {rel.first, rel.second})
                for (const auto& [w, c] : side) {
                    if (c.is_zero()) continue;
                    int d = t.word_degree(w);
                    if (!deg)
                        deg = d;
                    else if (*deg != d)
                        homogeneous = false;
                }
            if (!homogeneous)
                rep.fail("rule " + rule_str(*p, rel) + " is inhomogeneous for table " + t.name);
        }
    }
    rep.log.push_back("homogeneity: " + std::to_string(rels.size()) + " rules x " +
                      std::to_string(p->tables.size()) + " tables");

    for (const auto& rel : rels) {
        auto ls = p->reduce_terms(p->star_terms(rel.first), Strategy::Leftmost);
        auto rs = p->reduce_terms(p->star_terms(rel.second), Strategy::Leftmost);
        if (ls != rs)
            rep.fail("rule set not star-closed at " + rule_str(*p, rel) + ": got " +
                     p->terms_str(ls) + " vs " + p->terms_str(rs));
    }
    rep.log.push_back("star closure: " + std::to_string(rels.size()) + " rules");

    std::mt19937_64 master(seed);
    for (int i = 0; i < probes; ++i) {
        Word w = random_word(*p, master);
        std::mt19937_64 sub(master());
        std::map<Word, LaurentPoly> a, b;
        try {
            a = p->reduce_terms({{w, LaurentPoly::one()}}, Strategy::Leftmost);
            b = p->reduce_terms({{w, LaurentPoly::one()}}, Strategy::Random, &sub);
        } catch (const std::exception& e) {
            rep.fail("probe " + std::to_string(i) + " on " + p->word_str(w) + ": " + e.what());
            break;
        }
        if (a != b) {
            rep.fail("strategies disagree on " + p->word_str(w) + ": " + p->terms_str(a) +
                     " vs " + p->terms_str(b));
            break;
        }
        bool shape_ok = true;
        for (const auto& [nw, c] : a) {
            (void)c;
            if (!p->matches_normal_pattern(nw)) {
                rep.fail("reduced form of " + p->word_str(w) + " contains non-normal word " +
                         p->word_str(nw));
                shape_ok = false;
                break;
            }
        }
        if (!shape_ok) break;
        TermList back(a.begin(), a.end());
        if (p->reduce_terms(back, Strategy::Leftmost) != a) {
            rep.fail("reduction not idempotent on " + p->word_str(w));
            break;
        }
    }
    rep.log.push_back("confluence probes: " + std::to_string(probes));
    return rep;
}

Element Morphism::apply_word(const Word& w) const {
    Element acc = dst->one();
    for (const auto& fa : w.f) {
        auto it = img.find(fa.gen);
        if (it == img.end())
            throw std::domain_error("morphism " + id + ": no image for generator " +
                                    src->gens.at(static_cast<size_t>(fa.gen)).name);
        acc *= it->second.pow(fa.exp);
    }
    return acc;
}

Element Morphism::apply(const Element& e) const {
    if (e.pres() != src) throw std::domain_error("morphism " + id + ": wrong source algebra");
    Element acc = dst->zero();
    for (const auto& [w, c] : e.terms()) acc += apply_word(w).scaled(c);
    return acc;
}

TermList Morphism::apply_terms_raw(const TermList& terms) const {
    TermList out;
    for (const auto& [w, c] : terms) {
        Element im = apply_word(w).scaled(c);
        for (const auto& [iw, ic] : im.terms()) out.push_back({iw, ic});
    }
    return out;
}

CheckReport check_morphism(const Morphism& m) {
    CheckReport rep;
    auto rels = m.src->relations();
    for (const auto& rel : rels) {
        Element l = m.dst->zero(), r = m.dst->zero();
        for (const auto& [w, c] : rel.first) l += m.apply_word(w).scaled(c);
        for (const auto& [w, c] : rel.second) r += m.apply_word(w).scaled(c);
        if (l != r)
            rep.fail("morphism " + m.id + " breaks relation " + rule_str(*m.src, rel) +
                     ": images " + l.str() + " vs " + r.str());
    }
    rep.log.push_back("relations: " + std::to_string(rels.size()));

    for (size_t g = 0; g < m.src->gens.size(); ++g) {
        TermList gw{{Word::single(static_cast<int>(g)), LaurentPoly::one()}};
        Element lhs = m.apply_word(gw[0].first).star();
        TermList sg = m.src->star_terms(gw);
        Element rhs = m.dst->zero();
        for (const auto& [w, c] : sg) rhs += m.apply_word(w).scaled(c);
        if (lhs != rhs)
            rep.fail("morphism " + m.id + " does not intertwine star on generator " +
                     m.src->gens[g].name + ": " + lhs.str() + " vs " + rhs.str());
    }
    rep.log.push_back("star compatibility: " + std::to_string(m.src->gens.size()) +
                      " generators");
    return rep;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.dst != g.src) throw std::domain_error("compose: middle algebras differ");
    Morphism h;
    h.id = g.id + "." + f.id;
    h.src = f.src;
    h.dst = g.dst;
    for (const auto& [gen, im] : f.img) h.img.emplace(gen, g.apply(im));
    return h;
}

}  // namespace qrpw
