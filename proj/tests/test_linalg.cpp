#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrpw/linalg.hpp"

#include <algorithm>
#include <random>

using namespace qrpw;

namespace {

PolyQ poly(std::initializer_list<long long> coeffs) {
    PolyQ p;
    for (long long c : coeffs) p.c.push_back(Rational(c));
    p.trim();
    return p;
}

PolyQ random_polyq(std::mt19937_64& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> d(0, max_deg), cd(-4, 4);
    PolyQ p;
    int deg = d(rng);
    for (int i = 0; i <= deg; ++i) p.c.push_back(Rational(cd(rng)));
    p.trim();
    return p;
}

FuncQ random_funcq(std::mt19937_64& rng) {
    PolyQ den;
    do {
        den = random_polyq(rng, 2);
    } while (den.is_zero());
    return FuncQ(random_polyq(rng), den);
}

template <class K>
std::vector<K> mat_vec(const std::vector<std::vector<K>>& A, const std::vector<K>& x) {
    std::vector<K> out(A.size(), K());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] = out[i] + A[i][j] * x[j];
    return out;
}

template <class K>
std::vector<K> vec_mat(const std::vector<K>& y, const std::vector<std::vector<K>>& A) {
    std::vector<K> out(A.empty() ? 0 : A[0].size(), K());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[j] = out[j] + y[i] * A[i][j];
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and euclidean structure") {
    PolyQ one = poly({1});
    CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
    CHECK((poly({1, 2}) + poly({-1, -2})).is_zero());
    CHECK(poly({0}).is_zero());
    CHECK(poly({5, 0, 0}).degree() == 0);

    PolyQ q3m1 = poly({-1, 0, 0, 1});
    PolyQ qm1 = poly({-1, 1});
    PolyQ quot, rem;
    PolyQ::divmod(q3m1, qm1, quot, rem);
    CHECK(rem.is_zero());
    CHECK(quot == poly({1, 1, 1}));
    CHECK(quot * qm1 + rem == q3m1);

    CHECK(poly_gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK(poly_gcd(poly({-2, 2}), poly({-3, 3})) == poly({-1, 1}));
    CHECK(poly_gcd(one, poly({4, 7})) == one);

    std::mt19937_64 rng(0);
    for (int t = 0; t < 100; ++t) {
        PolyQ a = random_polyq(rng), b = random_polyq(rng);
        if (b.is_zero()) continue;
        PolyQ q, r;
        PolyQ::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}

TEST_CASE("rational functions form a field") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 150; ++t) {
        FuncQ a = random_funcq(rng), b = random_funcq(rng), c = random_funcq(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
            CHECK(b / b == FuncQ(1));
        }
    }
    // canonical form: denominators monic and coprime to numerators
    FuncQ f(poly({-1, 0, 1}), poly({2, 2}));  // (q^2-1)/(2q+2) = (q-1)/2
    CHECK(f.den == poly({1}));
    CHECK(f.num == PolyQ(Rational(1, 2)) * poly({-1, 1}));
}

TEST_CASE("laurent polynomials embed into Q(q) and back") {
    LaurentPoly p = LaurentPoly::monomial(rational_from(3, 2), -2) + LaurentPoly::q_power(4) -
                    LaurentPoly::one();
    auto f = to_funcq(p);
    auto back = funcq_to_laurent(f);
    REQUIRE(back.has_value());
    CHECK(*back == p);

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> ed(-5, 5), cd(-4, 4);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly lp;
        for (int i = 0; i < 3; ++i) lp += LaurentPoly::monomial(Rational(cd(rng)), ed(rng));
        auto g = to_funcq(lp);
        auto b2 = funcq_to_laurent(g);
        REQUIRE(b2.has_value());
        CHECK(*b2 == lp);
        // embedding is a ring map
        LaurentPoly lp2 = LaurentPoly::q_power(ed(rng)) + LaurentPoly(Rational(cd(rng)));
        CHECK(to_funcq(lp * lp2) == to_funcq(lp) * to_funcq(lp2));
    }

    FuncQ non_monomial(poly({1}), poly({1, 1}));  // 1/(1+q)
    CHECK_FALSE(funcq_to_laurent(non_monomial).has_value());
}

TEST_CASE("gaussian elimination solves and certifies over Q") {
    using VV = std::vector<std::vector<Rational>>;
    VV A{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    std::vector<Rational> b{Rational(5), Rational(10)};
    auto res = gauss_solve(A, b);
    CHECK(res.consistent);
    CHECK(res.rank == 2);
    CHECK(mat_vec(A, res.solution) == b);
    CHECK(res.solution == std::vector<Rational>{Rational(1), Rational(3)});

    // inconsistent: second row is twice the first but rhs is not
    VV A2{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    std::vector<Rational> b2{Rational(1), Rational(3)};
    auto res2 = gauss_solve(A2, b2);
    CHECK_FALSE(res2.consistent);
    REQUIRE(res2.left_null.size() == 1);
    auto y = res2.left_null[0];
    auto yA = vec_mat(y, A2);
    CHECK(std::all_of(yA.begin(), yA.end(), [](const Rational& r) { return r == 0; }));
    Rational yb = y[0] * b2[0] + y[1] * b2[1];
    CHECK(yb != 0);
    CHECK(yb == res2.left_null_rhs[0]);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> cd(-5, 5);
    for (int t = 0; t < 60; ++t) {
        VV M(4, std::vector<Rational>(5));
        for (auto& row : M)
            for (auto& e : row) e = Rational(cd(rng));
        std::vector<Rational> x0(5);
        for (auto& e : x0) e = Rational(cd(rng));
        auto rhs = mat_vec(M, x0);
        auto r3 = gauss_solve(M, rhs);
        REQUIRE(r3.consistent);
        CHECK(mat_vec(M, r3.solution) == rhs);
        // left-null rows really annihilate the matrix
        for (const auto& yn : r3.left_null) {
            auto z = vec_mat(yn, M);
            CHECK(std::all_of(z.begin(), z.end(), [](const Rational& r) { return r == 0; }));
        }
    }
}

TEST_CASE("elimination works over the function field towers") {
    // Q(q): [[q, 1], [1, 1/q]] is singular; rhs picks out (in)consistency
    FuncQ q(PolyQ::variable());
    FuncQ inv_q = FuncQ(1) / q;
    std::vector<std::vector<FuncQ>> A{{q, FuncQ(1)}, {FuncQ(1), inv_q}};
    auto res = gauss_solve(A, {q, FuncQ(1)});
    CHECK(res.consistent);
    CHECK(res.rank == 1);
    CHECK(mat_vec(A, res.solution) == std::vector<FuncQ>{q, FuncQ(1)});

    auto res2 = gauss_solve(A, {q, FuncQ(0)});
    CHECK_FALSE(res2.consistent);
    for (size_t i = 0; i < res2.left_null.size(); ++i) {
        auto z = vec_mat(res2.left_null[i], A);
        CHECK(std::all_of(z.begin(), z.end(), [](const FuncQ& f) { return f.is_zero(); }));
    }

    // Q(q)(tau): certificate for an infeasible parametric system
    FuncT tau(PolyT::variable());
    FuncT one(1);
    std::vector<std::vector<FuncT>> P{{one, tau}, {tau, tau * tau}};
    auto res3 = gauss_solve(P, {one, one});
    CHECK_FALSE(res3.consistent);
    REQUIRE(res3.left_null.size() == 1);
    auto yP = vec_mat(res3.left_null[0], P);
    CHECK(std::all_of(yP.begin(), yP.end(), [](const FuncT& f) { return f.is_zero(); }));
    CHECK_FALSE(res3.left_null_rhs[0].is_zero());

    auto res4 = gauss_solve(P, {one, tau});
    CHECK(res4.consistent);
    CHECK(mat_vec(P, res4.solution) == std::vector<FuncT>{one, tau});
}

TEST_CASE("laurent ring solve separates field and ring solvability") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly q2 = LaurentPoly::q_power(2);

    // (1 - q^2) x = 1: solvable over Q(q), no Laurent solution
    {
        auto r = laurent_solve({{one - q2}}, {one});
        CHECK(r.rank == 1);
        CHECK(r.field_consistent);
        CHECK_FALSE(r.solvable);
        CHECK(r.nondivisible == 1);
    }
    // q^2 x = 1 + q: the q-power is a unit of the ring
    {
        auto r = laurent_solve({{q2}}, {one + q});
        REQUIRE(r.solvable);
        CHECK(r.solution[0] == LaurentPoly::q_power(-2) + LaurentPoly::q_power(-1));
    }
    // (1 - q^2) x = 1 - q^4 divides exactly
    {
        auto r = laurent_solve({{one - q2}}, {one - LaurentPoly::q_power(4)});
        REQUIRE(r.solvable);
        CHECK(r.solution[0] == one + q2);
    }
    // inconsistent even over the field
    {
        auto r = laurent_solve({{one}, {one}}, {one, q});
        CHECK_FALSE(r.field_consistent);
        CHECK(r.obstructions == 1);
        CHECK_FALSE(r.solvable);
    }
    // underdetermined: [1 - q^2, q] hits 1 through the unit column
    {
        auto r = laurent_solve({{one - q2, q}}, {one});
        REQUIRE(r.solvable);
        CHECK((one - q2) * r.solution[0] + q * r.solution[1] == one);
    }
    // empty system edge cases
    {
        auto r = laurent_solve({}, {});
        CHECK(r.solvable);
        CHECK(r.rank == 0);
        auto r2 = laurent_solve({{LaurentPoly()}}, {one});
        CHECK_FALSE(r2.field_consistent);
    }
}

TEST_CASE("laurent solve recovers planted solutions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> cd(-3, 3), ed(-2, 2), nt(0, 2);
    auto random_laurent = [&]() {
        LaurentPoly p;
        int terms = nt(rng);
        for (int t = 0; t <= terms; ++t) p += LaurentPoly::monomial(Rational(cd(rng)), ed(rng));
        return p;
    };
    for (int t = 0; t < 40; ++t) {
        std::vector<std::vector<LaurentPoly>> A(3, std::vector<LaurentPoly>(4));
        for (auto& row : A)
            for (auto& e : row) e = random_laurent();
        std::vector<LaurentPoly> x0(4);
        for (auto& e : x0) e = random_laurent();
        auto rhs = mat_vec(A, x0);
        auto r = laurent_solve(A, rhs);
        // a Laurent solution exists by construction; the solver must find one
        REQUIRE(r.solvable);
        CHECK(mat_vec(A, r.solution) == rhs);
    }
}
