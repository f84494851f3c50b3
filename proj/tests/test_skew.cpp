#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skewlab/skew.hpp"
#include "support.hpp"

using namespace skewlab;
using namespace skewlab::skew;
using testsupport::random_elem;

namespace {

SkewPoly random_poly(const SkewRing& R, std::size_t max_deg, std::mt19937_64& rng) {
    std::vector<gf::Elem> c(max_deg + 1);
    for (auto& v : c) v = random_elem(R.coeff_field(), rng);
    return SkewPoly(std::move(c));
}

SkewPoly random_nonzero(const SkewRing& R, std::size_t max_deg, std::mt19937_64& rng) {
    while (true) {
        auto f = random_poly(R, std::uniform_int_distribution<std::size_t>(0, max_deg)(rng), rng);
        if (!f.is_zero()) return f;
    }
}

std::vector<SkewPoly> all_monic_up_to(const SkewRing& R, std::size_t deg) {
    const auto size = R.coeff_field().size();
    std::vector<SkewPoly> out;
    for (std::size_t d = 0; d <= deg; ++d) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= size;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::vector<gf::Elem> c(d + 1, 0);
            c[d] = 1;
            std::size_t r = idx;
            for (std::size_t i = 0; i < d; ++i) {
                c[i] = static_cast<gf::Elem>(r % size);
                r /= size;
            }
            out.emplace_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("multiplication examples") {
    auto t = std::make_shared<const gf::FieldTower>(2, 1, 2, 1);
    SkewRing R(t);
    const auto& k = R.coeff_field();
    const gf::Elem tt = k.monomial(1);
    const gf::Elem a = 3;
    CHECK(R.mul(R.x(), R.constant(a)) == R.monomial(t->sigma(a, 1), 1));
    CHECK(R.mul(R.x(), R.monomial(tt, 1)) == R.monomial(k.add(tt, 1), 2));
    std::mt19937_64 rng(1);
    const auto f = random_poly(R, 5, rng);
    CHECK(R.mul(f, R.constant(1)) == f);
    CHECK(R.mul(R.constant(1), f) == f);
}

TEST_CASE("degree and leading coefficient of products") {
    std::mt19937_64 rng(2);
    for (const auto& spec : testsupport::desk_rings()) {
        SkewRing R(testsupport::tower(spec));
        for (int it = 0; it < 50; ++it) {
            const auto f = random_nonzero(R, 5, rng), g = random_nonzero(R, 5, rng);
            const auto fg = R.mul(f, g);
            REQUIRE(*fg.degree() == *f.degree() + *g.degree());
            REQUIRE(fg.lead() == R.coeff_field().mul(f.lead(), R.tower().sigma(g.lead(), static_cast<std::int64_t>(*f.degree()))));
        }
    }
}

TEST_CASE("associativity and distributivity") {
    std::mt19937_64 rng(3);
    for (const auto& spec : testsupport::desk_rings()) {
        SkewRing R(testsupport::tower(spec));
        for (int it = 0; it < 200; ++it) {
            const auto a = random_poly(R, 4, rng), b = random_poly(R, 4, rng), c = random_poly(R, 4, rng);
            REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
            REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        }
    }
}

TEST_CASE("right and left division reconstruct the dividend") {
    std::mt19937_64 rng(4);
    for (const auto& spec : testsupport::desk_rings()) {
        SkewRing R(testsupport::tower(spec));
        for (int it = 0; it < 500; ++it) {
            const auto f = random_poly(R, 7, rng), g = random_nonzero(R, 4, rng);
            const auto [q, r] = R.right_divide(f, g);
            REQUIRE(R.add(R.mul(q, g), r) == f);
            REQUIRE((r.is_zero() || *r.degree() < *g.degree()));
            // Uniqueness: re-dividing q·g + r gives the same pair.
            const auto again = R.right_divide(R.add(R.mul(q, g), r), g);
            REQUIRE(again.quotient == q);
            REQUIRE(again.remainder == r);
            const auto [ql, rl] = R.left_divide(f, g);
            REQUIRE(R.add(R.mul(g, ql), rl) == f);
            REQUIRE((rl.is_zero() || *rl.degree() < *g.degree()));
        }
    }
    SkewRing R(testsupport::tower({2, 1, 2, 1, 1}));
    const SkewPoly f({1, 2, 1});
    CHECK(R.right_divide(f, f).quotient == R.constant(1));
    CHECK(R.right_divide(f, f).remainder.is_zero());
    const SkewPoly g({3, 1});
    CHECK(R.right_divide(g, f).quotient.is_zero());
    CHECK(R.right_divide(g, f).remainder == g);
    CHECK_THROWS_AS(R.right_divide(f, SkewPoly{}), Error);
}

TEST_CASE("gcrd Bezout identity") {
    std::mt19937_64 rng(5);
    for (const auto& spec : testsupport::desk_rings()) {
        SkewRing R(testsupport::tower(spec));
        for (int it = 0; it < 500; ++it) {
            const auto f = random_poly(R, 6, rng), g = random_poly(R, 6, rng);
            if (f.is_zero() && g.is_zero()) continue;
            const auto b = R.gcrd_bezout(f, g);
            REQUIRE(b.d.is_monic());
            REQUIRE(R.right_rem(f, b.d).is_zero());
            REQUIRE(R.right_rem(g, b.d).is_zero());
            REQUIRE(R.add(R.mul(b.u, f), R.mul(b.v, g)) == b.d);
        }
    }
    SkewRing R(testsupport::tower({3, 1, 2, 1, 1}));
    const SkewPoly f({2, 1, 2});
    const auto b = R.gcrd_bezout(f, SkewPoly{});
    CHECK(b.d == R.make_monic(f));
    CHECK(b.u == R.constant(R.coeff_field().inv(2)));
    CHECK(b.v.is_zero());
    CHECK_THROWS_AS(R.gcrd_bezout(SkewPoly{}, SkewPoly{}), Error);
}

TEST_CASE("gcrd matches exhaustive common-divisor search over F_4") {
    SkewRing R(testsupport::tower({2, 1, 2, 1, 1}));
    const auto divisors = all_monic_up_to(R, 3);
    std::mt19937_64 rng(6);
    for (int it = 0; it < 150; ++it) {
        // Bias toward nontrivial common factors.
        const auto h = random_nonzero(R, 2, rng);
        auto f = R.mul(random_poly(R, 1, rng), h), g = R.mul(random_poly(R, 1, rng), h);
        if (it % 3 == 0) f = random_nonzero(R, 3, rng);
        if (f.is_zero() || g.is_zero() || *f.degree() > 3 || *g.degree() > 3) continue;
        SkewPoly best;
        for (const auto& d : divisors)
            if (R.right_rem(f, d).is_zero() && R.right_rem(g, d).is_zero())
                if (best.is_zero() || *d.degree() > *best.degree()) best = d;
        REQUIRE(R.gcrd(f, g) == best);
    }
}

TEST_CASE("lclm") {
    std::mt19937_64 rng(8);
    for (const auto& spec : testsupport::desk_rings()) {
        SkewRing R(testsupport::tower(spec));
        for (int it = 0; it < 500; ++it) {
            const auto f = random_nonzero(R, 5, rng), g = random_nonzero(R, 5, rng);
            const auto l = R.lclm(f, g);
            REQUIRE(l.is_monic());
            REQUIRE(R.right_rem(l, f).is_zero());
            REQUIRE(R.right_rem(l, g).is_zero());
            REQUIRE(*l.degree() + *R.gcrd(f, g).degree() == *f.degree() + *g.degree());
        }
        const auto f = random_nonzero(R, 4, rng);
        CHECK(R.lclm(f, f) == R.make_monic(f));
    }
    SkewRing R(testsupport::tower({2, 1, 2, 1, 1}));
    const auto l = R.lclm(R.x(), SkewPoly({1, 1}));
    CHECK(R.right_rem(l, R.x()).is_zero());
    CHECK(R.right_rem(l, SkewPoly({1, 1})).is_zero());
    CHECK_THROWS_AS(R.lclm(SkewPoly{}, R.x()), Error);
}

TEST_CASE("F(x^n) is central and coprime to x") {
    std::mt19937_64 rng(9);
    for (const auto& spec : testsupport::desk_rings()) {
        auto t = testsupport::tower(spec);
        SkewRing R(t);
        const auto F = CenterPoly::standard(*t);
        const auto Fx = center_eval(R, F);
        CHECK(*Fx.degree() == t->n() * t->s());
        CHECK(R.is_central(Fx));
        CHECK(R.gcrd(Fx, R.x()) == R.constant(1));
        for (int it = 0; it < 100; ++it) {
            const auto r = random_poly(R, 5, rng);
            REQUIRE(R.mul(Fx, r) == R.mul(r, Fx));
        }
        CHECK_FALSE(R.is_central(R.x()));
    }
}

TEST_CASE("center_eval examples and CenterPoly validation") {
    auto t1 = testsupport::tower({3, 1, 2, 1, 1});
    SkewRing R1(t1);
    CHECK(center_eval(R1, CenterPoly::standard(*t1)) == SkewPoly({2, 0, 1}));
    auto t2 = testsupport::tower({2, 1, 2, 2, 1});
    SkewRing R2(t2);
    const CenterPoly F(*t2, {1, 1, 1});
    CHECK(CenterPoly::standard(*t2) == F);
    CHECK(center_eval(R2, F) == SkewPoly({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(CenterPoly(*t2, {0, 1}), Error);        // F = y
    CHECK_THROWS_AS(CenterPoly(*t2, {1, 0, 1}), Error);     // (y+1)^2
    CHECK_THROWS_AS(CenterPoly(*t2, {1, 1, 0}), Error);     // not monic
    CHECK(parse_center_poly(*t2, "1,1,1") == F);
    CHECK(parse_center_poly(*t2, "mid:1; mid:1; mid:1") == F);
    CHECK(F.tag(*t2) == "1/1/1");
}

TEST_CASE("skew text form round-trips") {
    auto t = testsupport::tower({3, 1, 2, 1, 1});
    SkewRing R(t);
    const SkewPoly f({7, 0, 4});
    const auto s = to_text(*t, f);
    CHECK(s == "skew: big:1,2; big:0,0; big:1,1");
    CHECK(parse_skew(*t, s) == f);
    CHECK(parse_skew(*t, to_text(*t, SkewPoly{})).is_zero());
}
