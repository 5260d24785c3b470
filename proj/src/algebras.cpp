#include "qrpw/algebras.hpp"

#include <stdexcept>

namespace qrpw {

namespace {

struct Builder {
    std::shared_ptr<Presentation> p = std::make_shared<Presentation>();

    int add(const std::string& name, int rank, bool central = false, long long max_exp = 0) {
        Generator g;
        g.name = name;
        g.rank = rank;
        g.central = central;
        g.max_exp = max_exp;
        g.star = static_cast<int>(p->gens.size());  // self until paired
        p->gens.push_back(g);
        p->gen_by_name[name] = g.star;
        return g.star;
    }
    void star_pair(int a, int b) {
        p->gens[static_cast<size_t>(a)].star = b;
        p->gens[static_cast<size_t>(b)].star = a;
    }
    void swap(int g, int h, int qexp) { p->swaps[{g, h}] = qexp; }
    void contract(int g, int h, TermList rhs) { p->contracts[{g, h}] = std::move(rhs); }
    void subst(int g, TermList rhs) {
        p->gens[static_cast<size_t>(g)].eliminated = true;
        p->substs[g] = std::move(rhs);
    }
};

void require_weight(int l) {
    if (l < 1) throw std::invalid_argument("weight l must be >= 1");
}

void require_odd_weight(int l) {
    require_weight(l);
    if (l % 2 == 0)
        throw std::invalid_argument("positive-parity algebras require odd weight l");
}

Word merged_append(Word w, const Word& tail, long long power = 1) {
    for (const auto& fa : tail.f) {
        long long e = fa.exp * power;
        if (e == 0) continue;
        if (!w.f.empty() && w.f.back().gen == fa.gen) {
            w.f.back().exp += e;
            if (w.f.back().exp == 0) w.f.pop_back();
        } else {
            w.f.push_back({fa.gen, e});
        }
    }
    return w;
}

}  // namespace

Word make_word(const Presentation& p,
               const std::vector<std::pair<std::string, long long>>& factors) {
    Word w;
    for (const auto& [name, exp] : factors) w.append(p.gen(name), exp);
    return w;
}

TermList one_minus_q2m_product(const Word& base, int m0, int m1, const Word& lead,
                               const LaurentPoly& scale) {
    std::vector<LaurentPoly> coeff{scale};
    for (int m = m0; m <= m1; ++m) {
        coeff.push_back(LaurentPoly::zero());
        for (size_t j = coeff.size() - 1; j >= 1; --j)
            coeff[j] -= LaurentPoly::q_power(2 * m) * coeff[j - 1];
    }
    TermList out;
    for (size_t j = 0; j < coeff.size(); ++j) {
        if (coeff[j].is_zero()) continue;
        out.push_back({merged_append(lead, base, static_cast<long long>(j)), coeff[j]});
    }
    return out;
}

PresPtr sphere_algebra(int l, int k) {
    require_weight(l);
    Builder b;
    b.p->id = "sphere";
    b.p->weight = l;
    int z0 = b.add("z0", 0);
    int z0s = b.add("z0*", 0);
    int z1 = b.add("z1", 1);
    int z1s = b.add("z1*", 1);
    int xi = b.add("xi", 2, /*central=*/true);
    b.star_pair(z0, z0s);
    b.star_pair(z1, z1s);

    Word z12xi = make_word(*b.p, {{"z1", 2}, {"xi", 1}});
    b.swap(z1, z0, -1);
    b.swap(z1, z0s, +1);
    b.contract(z0, z0s, {{Word::one(), LaurentPoly::one()}, {z12xi, -LaurentPoly::one()}});
    b.contract(z0s, z0, {{Word::one(), LaurentPoly::one()}, {z12xi, -LaurentPoly::q_power(-2)}});
    b.subst(z1s, {{make_word(*b.p, {{"z1", 1}, {"xi", 1}}), LaurentPoly::one()}});

    b.p->tables.push_back({"rho", 0, {k, -k, l, -l, -2 * l}});
    b.p->tables.push_back({"Phi", 2 * l, {2, -2, l, -l, 0}});
    b.p->tables.push_back({"Zl", l, {1, -1, 0, 0, 0}});

    b.p->normal_word_enum = [z0, z0s, z1, xi](int bound) {
        std::vector<Word> out;
        for (int r = 0; r <= bound; ++r)
            for (int s = 0; s + r <= bound; ++s)
                for (int t = -(bound - r - s); t <= bound - r - s; ++t) {
                    Word w;
                    w.append(z0, r).append(z1, s).append(xi, t);
                    out.push_back(w);
                    if (r > 0) {
                        Word v;
                        v.append(z0s, r).append(z1, s).append(xi, t);
                        out.push_back(v);
                    }
                }
        return out;
    };
    return b.p;
}

PresPtr quotient_sphere_neg(int l) {
    require_weight(l);
    Builder b;
    b.p->id = "quotient-neg";
    b.p->weight = l;
    int x = b.add("x", 0);
    int xs = b.add("x*", 0);
    int y = b.add("y", 1);
    int ys = b.add("y*", 1);
    int z = b.add("z", 2, /*central=*/true);
    b.star_pair(x, xs);
    b.star_pair(y, ys);

    Word y2z = make_word(*b.p, {{"y", 2}, {"z", 1}});
    b.swap(y, x, -l);
    b.swap(y, xs, +l);
    b.contract(x, xs, one_minus_q2m_product(y2z, 0, l - 1));
    b.contract(xs, x, one_minus_q2m_product(y2z, -l, -1));
    b.subst(ys, {{make_word(*b.p, {{"y", 1}, {"z", 1}}), LaurentPoly::one()}});

    b.p->tables.push_back({"phi", 0, {1, -1, 1, -1, -2}});

    b.p->normal_word_enum = [x, xs, y, z](int bound) {
        std::vector<Word> out;
        for (int r = 0; r <= bound; ++r)
            for (int s = 0; s + r <= bound; ++s)
                for (int t = -(bound - r - s); t <= bound - r - s; ++t) {
                    Word w;
                    w.append(x, r).append(y, s).append(z, t);
                    out.push_back(w);
                    if (r > 0) {
                        Word v;
                        v.append(xs, r).append(y, s).append(z, t);
                        out.push_back(v);
                    }
                }
        return out;
    };
    return b.p;
}

PresPtr quotient_sphere_pos(int l) {
    require_odd_weight(l);
    Builder b;
    b.p->id = "quotient-pos";
    b.p->weight = l;
    int x = b.add("x'", 0);
    int xs = b.add("x'*", 0);
    int y = b.add("y'", 1);
    int ys = b.add("y'*", 1);
    int z = b.add("z'", 2, /*central=*/true);
    b.star_pair(x, xs);
    b.star_pair(y, ys);

    Word yz = make_word(*b.p, {{"y'", 1}, {"z'", 1}});
    b.swap(y, x, -2 * l);
    b.swap(y, xs, +2 * l);
    b.contract(x, xs, one_minus_q2m_product(yz, 0, l - 1));
    b.contract(xs, x, one_minus_q2m_product(yz, -l, -1));
    b.subst(ys, {{make_word(*b.p, {{"y'", 1}, {"z'", 2}}), LaurentPoly::one()}});

    b.p->tables.push_back({"Omega", 0, {1, -1, 1, -1, -1}});

    b.p->normal_word_enum = [x, xs, y, z](int bound) {
        std::vector<Word> out;
        for (int r = 0; r <= bound; ++r)
            for (int s = 0; s + r <= bound; ++s)
                for (int t = -(bound - r - s); t <= bound - r - s; ++t) {
                    Word w;
                    w.append(x, r).append(y, s).append(z, t);
                    out.push_back(w);
                    if (r > 0) {
                        Word v;
                        v.append(xs, r).append(y, s).append(z, t);
                        out.push_back(v);
                    }
                }
        return out;
    };
    return b.p;
}

PresPtr base_algebra_neg(int l) {
    require_weight(l);
    Builder bd;
    bd.p->id = "base-neg";
    bd.p->weight = l;
    int c = bd.add("c-", 0);
    int cs = bd.add("c-*", 0);
    int b = bd.add("b", 1, false, 1);
    int bs = bd.add("b*", 1, false, 1);
    int a = bd.add("a", 2);
    bd.star_pair(c, cs);
    bd.star_pair(b, bs);

    Word wa = Word::single(a);
    Word wb = Word::single(b);
    Word wbs = Word::single(bs);
    bd.swap(b, c, -2 * l);
    bd.swap(bs, cs, +2 * l);
    bd.swap(a, c, -4 * l);
    bd.swap(a, cs, +4 * l);
    bd.swap(a, b, -2 * l);
    bd.swap(a, bs, +2 * l);

    bd.contract(b, b, {{make_word(*bd.p, {{"c-", 1}, {"a", 1}}), LaurentPoly::q_power(-l)}});
    bd.contract(bs, bs, {{make_word(*bd.p, {{"c-*", 1}, {"a", 1}}), LaurentPoly::q_power(3 * l)}});
    bd.contract(b, bs, one_minus_q2m_product(wa, 0, l - 1, wa, LaurentPoly::q_power(2 * l)));
    bd.contract(bs, b, one_minus_q2m_product(wa, -l, -1, wa));
    bd.contract(b, cs, one_minus_q2m_product(wa, l, 2 * l - 1, wbs, LaurentPoly::q_power(l)));
    bd.contract(bs, c, one_minus_q2m_product(wa, -2 * l, -l - 1, wb, LaurentPoly::q_power(-l)));
    bd.contract(c, bs, one_minus_q2m_product(wa, 0, l - 1, wb, LaurentPoly::q_power(l)));
    bd.contract(cs, b, one_minus_q2m_product(wa, -l, -1, wbs, LaurentPoly::q_power(-l)));
    bd.contract(c, cs, one_minus_q2m_product(wa, 0, 2 * l - 1));
    bd.contract(cs, c, one_minus_q2m_product(wa, -2 * l, -1));

    bd.p->normal_word_enum = [c, cs, b, bs, a](int bound) {
        std::vector<Word> out;
        for (int g = 0; g <= bound; ++g)
            for (int e = 0; e <= 1 && g + e <= bound; ++e)
                for (int n = 0; g + e + n <= bound; ++n) {
                    Word w;
                    w.append(c, g).append(b, e).append(a, n);
                    out.push_back(w);
                    if (g + e > 0) {
                        Word v;
                        v.append(cs, g).append(bs, e).append(a, n);
                        out.push_back(v);
                    }
                }
        return out;
    };
    return bd.p;
}

PresPtr base_algebra_pos(int l) {
    require_odd_weight(l);
    Builder bd;
    bd.p->id = "base-pos";
    bd.p->weight = l;
    int c = bd.add("c+", 0);
    int cs = bd.add("c+*", 0);
    int a = bd.add("a", 1);
    bd.star_pair(c, cs);

    Word wa = Word::single(a);
    bd.swap(a, c, -2 * l);
    bd.swap(a, cs, +2 * l);
    bd.contract(c, cs, one_minus_q2m_product(wa, 0, l - 1));
    bd.contract(cs, c, one_minus_q2m_product(wa, -l, -1));

    bd.p->normal_word_enum = [c, cs, a](int bound) {
        std::vector<Word> out;
        for (int g = 0; g <= bound; ++g)
            for (int n = 0; g + n <= bound; ++n) {
                Word w;
                w.append(c, g).append(a, n);
                out.push_back(w);
                if (g > 0) {
                    Word v;
                    v.append(cs, g).append(a, n);
                    out.push_back(v);
                }
            }
        return out;
    };
    return bd.p;
}

namespace {

// Fills images for starred partners by applying the target star, so factories
// only specify images of the unstarred generators.
void complete_star_images(Morphism& m) {
    for (size_t g = 0; g < m.src->gens.size(); ++g) {
        const Generator& gen = m.src->gens[g];
        if (gen.central || m.img.count(static_cast<int>(g))) continue;
        int partner = gen.star;
        auto it = m.img.find(partner);
        if (it == m.img.end())
            throw std::domain_error("morphism " + m.id + ": missing image for " + gen.name);
        m.img[static_cast<int>(g)] = it->second.star();
    }
}

}  // namespace

Morphism embed_neg(PresPtr src, PresPtr dst) {
    int l = src->weight;
    Morphism m;
    m.id = "embed-neg";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("a")] = dst->el_word(make_word(*dst, {{"z1", 2}, {"xi", 1}}));
    m.img[src->gen("b")] = dst->el_word(make_word(*dst, {{"z0", l}, {"z1", 1}, {"xi", 1}}));
    m.img[src->gen("c-")] = dst->el_word(make_word(*dst, {{"z0", 2 * l}, {"xi", 1}}));
    complete_star_images(m);
    return m;
}

Morphism embed_pos(PresPtr src, PresPtr dst) {
    int l = src->weight;
    Morphism m;
    m.id = "embed-pos";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("a")] = dst->el_word(make_word(*dst, {{"z1", 2}, {"xi", 1}}));
    m.img[src->gen("c+")] = dst->el_word(make_word(*dst, {{"z0", l}, {"xi", 1}}));
    complete_star_images(m);
    return m;
}

Morphism incl_neg(PresPtr src, PresPtr dst) {
    int l = src->weight;
    Morphism m;
    m.id = "incl-neg";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("x")] = dst->el_word(make_word(*dst, {{"z0", l}}));
    m.img[src->gen("y")] = dst->el_word(make_word(*dst, {{"z1", 1}}));
    m.img[src->gen("z")] = dst->el_word(make_word(*dst, {{"xi", 1}}));
    complete_star_images(m);
    return m;
}

Morphism incl_pos(PresPtr src, PresPtr dst) {
    int l = src->weight;
    Morphism m;
    m.id = "incl-pos";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("x'")] = dst->el_word(make_word(*dst, {{"z0", l}}));
    m.img[src->gen("y'")] = dst->el_word(make_word(*dst, {{"z1", 2}}));
    m.img[src->gen("z'")] = dst->el_word(make_word(*dst, {{"xi", 1}}));
    complete_star_images(m);
    return m;
}

Morphism embed_neg_fix(PresPtr src, PresPtr dst) {
    Morphism m;
    m.id = "embed-neg-fix";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("a")] = dst->el_word(make_word(*dst, {{"y", 2}, {"z", 1}}));
    m.img[src->gen("b")] = dst->el_word(make_word(*dst, {{"x", 1}, {"y", 1}, {"z", 1}}));
    m.img[src->gen("c-")] = dst->el_word(make_word(*dst, {{"x", 2}, {"z", 1}}));
    complete_star_images(m);
    return m;
}

Morphism embed_pos_fix(PresPtr src, PresPtr dst) {
    Morphism m;
    m.id = "embed-pos-fix";
    m.src = src;
    m.dst = dst;
    m.img[src->gen("a")] = dst->el_word(make_word(*dst, {{"y'", 1}, {"z'", 1}}));
    m.img[src->gen("c+")] = dst->el_word(make_word(*dst, {{"x'", 1}, {"z'", 1}}));
    complete_star_images(m);
    return m;
}

Morphism embed_neg(int l) { return embed_neg(base_algebra_neg(l), sphere_algebra(l)); }
Morphism embed_pos(int l) { return embed_pos(base_algebra_pos(l), sphere_algebra(l)); }
Morphism incl_neg(int l, int k) { return incl_neg(quotient_sphere_neg(l), sphere_algebra(l, k)); }
Morphism incl_pos(int l, int k) { return incl_pos(quotient_sphere_pos(l), sphere_algebra(l, k)); }
Morphism embed_neg_fix(int l) {
    return embed_neg_fix(base_algebra_neg(l), quotient_sphere_neg(l));
}
Morphism embed_pos_fix(int l) {
    return embed_pos_fix(base_algebra_pos(l), quotient_sphere_pos(l));
}

PresPtr algebra_by_name(const std::string& name, int l, int k) {
    if (name == "sphere") return sphere_algebra(l, k);
    if (name == "quotient-neg") return quotient_sphere_neg(l);
    if (name == "quotient-pos") return quotient_sphere_pos(l);
    if (name == "base-neg") return base_algebra_neg(l);
    if (name == "base-pos") return base_algebra_pos(l);
    throw std::invalid_argument("unknown algebra '" + name +
                                "' (expected sphere, quotient-neg, quotient-pos, base-neg, base-pos)");
}

}  // namespace qrpw
