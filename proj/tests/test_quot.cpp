#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "skewlab/linalg.hpp"
#include "skewlab/matrep.hpp"
#include "skewlab/quot.hpp"
#include "support.hpp"

using namespace skewlab;
using namespace skewlab::quot;
using testsupport::random_elem;

namespace {

// Every element Σ c_m x^{nm} with c_m ∈ F_q.
std::vector<QuotElem> center_elements(const QuotRing& R) {
    const auto& t = R.tower();
    const auto q = static_cast<std::size_t>(t.q());
    std::size_t total = 1;
    for (std::size_t i = 0; i < t.s(); ++i) total *= q;
    std::vector<QuotElem> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<gf::Elem> c(t.s());
        std::size_t r = idx;
        for (auto& v : c) {
            v = static_cast<gf::Elem>(r % q);
            r /= q;
        }
        out.push_back(R.center_element(c));
    }
    return out;
}

// Θ through x^{-1} obtained from the Bezout inverse instead of z.
QuotElem theta_oracle(const QuotElem& a, const QuotRing& target) {
    const auto& t = target.tower();
    const QuotElem xinv = target.inverse(target.x());
    QuotElem r = target.zero(), pw = target.one();
    for (std::size_t i = 0; i < target.dim(); ++i) {
        r = r + target.scale_left(t.sigma(a.rep[i], -static_cast<std::int64_t>(i)), pw);
        pw = pw * xinv;
    }
    return r;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    auto rp = testsupport::ring_pair({2, 1, 2, 2, 1});
    const auto& R = *rp.F;
    const auto x2 = R.monomial(1, 2);
    CHECK(x2 * x2 == R.add(x2, R.one()));
    std::mt19937_64 rng(1);
    const auto a = R.random(rng);
    CHECK(a * R.one() == a);
    CHECK(R.one() * a == a);
    CHECK(R.monomial(1, 6) == R.one());
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(2);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        for (int it = 0; it < 200; ++it) {
            const auto a = R.random(rng), b = R.random(rng), c = R.random(rng);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + b) * c == a * c + b * c);
            REQUIRE((a * b) * c == a * (b * c));
        }
        // Reduction agrees with right remainder by F(x^n).
        for (int it = 0; it < 50; ++it) {
            std::vector<gf::Elem> c(3 * R.dim());
            for (auto& v : c) v = random_elem(R.coeff_field(), rng);
            const skew::SkewPoly f(c);
            auto rem = R.skew_ring().right_rem(f, R.modulus()).coeffs;
            rem.resize(R.dim(), 0);
            REQUIRE(R.reduce(f).rep == rem);
        }
    }
}

TEST_CASE("mixing rings is rejected") {
    auto a = testsupport::ring_pair({2, 1, 3, 1, 1});
    auto b = testsupport::ring_pair({2, 1, 3, 2, 1});
    CHECK_THROWS_AS(a.F->one() * b.F->one(), Error);
    try {
        (void)(a.F->one() + b.F->one());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RingMismatch);
    }
}

TEST_CASE("inverses") {
    std::mt19937_64 rng(3);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        CHECK(R.inverse(R.one()) == R.one());
        const auto xi = R.inverse(R.x());
        CHECK(xi * R.x() == R.one());
        CHECK(R.x() * xi == R.one());
        for (int it = 0; it < 200; ++it) {
            const auto a = R.random(rng);
            const bool coprime = !a.is_zero() && R.skew_ring().gcrd(a.to_skew(), R.modulus()) == R.skew_ring().constant(1);
            bool ok = true;
            QuotElem inv;
            try {
                inv = R.inverse(a);
            } catch (const Error& e) {
                ok = false;
                REQUIRE(e.code() == ErrorCode::ZeroDivisor);
            }
            REQUIRE(ok == coprime);
            if (ok) {
                REQUIRE(inv * a == R.one());
                REQUIRE(a * inv == R.one());
            }
        }
        if (R.tower().n() > 1) {
            const auto g = matrep::least_divisor(R);
            CHECK_THROWS_AS(R.inverse(R.reduce(g)), Error);
        }
    }
}

TEST_CASE("central z") {
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        for (const auto* Rp : {rp.F.get(), rp.Fhat.get()}) {
            const auto& R = *Rp;
            const auto& z = R.central_z();
            const std::size_t ns = R.dim(), n = R.tower().n();
            CHECK(R.is_central(z));
            CHECK(z * R.monomial(1, ns) == R.one());
            for (std::size_t i = 1; i <= ns; ++i) CHECK(z * R.monomial(1, ns - i) * R.monomial(1, i) == R.one());
            for (std::size_t i = 0; i < ns; ++i)
                if (i % n) CHECK(z.rep[i] == 0);
            // Brute force over the centre.
            std::vector<QuotElem> hits;
            for (const auto& c : center_elements(R))
                if (c * R.monomial(1, ns) == R.one()) hits.push_back(c);
            REQUIRE(hits.size() == 1);
            CHECK(hits[0] == z);
        }
    }
    auto rp = testsupport::ring_pair({2, 1, 2, 2, 1});
    CHECK(rp.F->central_z() == rp.F->monomial(1, 2));
    auto t = testsupport::tower({5, 1, 3, 1, 1});
    QuotRing R(t, skew::CenterPoly(*t, {3, 1}));  // y - 2
    CHECK(R.central_z() == R.constant(t->big().inv(2)));
}

TEST_CASE("reciprocal polynomial") {
    auto t2 = testsupport::tower({2, 1, 1, 3, 1});
    CHECK(reciprocal(*t2, skew::CenterPoly(*t2, {1, 1, 0, 1})).coeffs() == std::vector<gf::Elem>{1, 0, 1, 1});
    auto t3 = testsupport::tower({3, 1, 1, 2, 1});
    CHECK(reciprocal(*t3, skew::CenterPoly(*t3, {2, 1, 1})).coeffs() == std::vector<gf::Elem>{2, 2, 1});
    auto t1 = testsupport::tower({3, 1, 2, 1, 1});
    const auto F1 = skew::CenterPoly::standard(*t1);
    CHECK(reciprocal(*t1, F1) == F1);
    for (const auto& spec : testsupport::desk_rings()) {
        auto t = testsupport::tower(spec);
        const auto F = skew::CenterPoly::standard(*t);
        const auto pair = reciprocal_pair(*t, F);
        CHECK(pair.Fhat.coeffs()[0] == t->mid().inv(F.coeffs()[0]));
        CHECK(reciprocal(*t, pair.Fhat) == F);
    }
}

TEST_CASE("Frobenius form") {
    std::mt19937_64 rng(4);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto& k = R.coeff_field();
        const std::size_t ns = R.dim();
        for (int it = 0; it < 20; ++it) {
            const auto al = random_elem(k, rng), be = random_elem(k, rng);
            for (std::size_t i = 0; i < ns; ++i)
                for (std::size_t j = 0; j < ns; ++j)
                    if (i + j > 0 && i + j < ns) REQUIRE(R.form(R.monomial(al, i), R.monomial(be, j)) == 0);
            REQUIRE(R.form(R.one(), R.constant(al)) == k.absolute_trace(al));
        }
        for (int it = 0; it < 200; ++it) {
            const auto a = R.random(rng), b = R.random(rng), c = R.random(rng);
            REQUIRE(R.form(a * b, c) == R.form(a, b * c));
        }
        const std::size_t N = R.fp_dim();
        CHECK(N == R.tower().n() * R.tower().n() * R.tower().s() * R.tower().e());
        gf::Matrix G(R.tower().prime(), N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) G(i, j) = R.form(R.basis(i), R.basis(j));
        CHECK(G.rank() == N);
    }
}

TEST_CASE("theta is an anti-isomorphism onto the reciprocal ring") {
    std::mt19937_64 rng(5);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto& Rh = *rp.Fhat;
        const auto& t = R.tower();
        for (gf::Elem al = 0; al < t.big().size(); ++al) REQUIRE(theta(R.constant(al), Rh) == Rh.constant(al));
        CHECK(theta(R.x(), Rh) * Rh.x() == Rh.one());
        for (std::size_t i = 0; i < R.fp_dim(); ++i) {
            const auto b = R.basis(i);
            REQUIRE(theta_inv(theta(b, Rh), R) == b);
            REQUIRE(theta(b, Rh) == theta_oracle(b, Rh));
            for (std::size_t j = 0; j < R.fp_dim(); ++j) {
                const auto c = R.basis(j);
                REQUIRE(theta(b * c, Rh) == theta(c, Rh) * theta(b, Rh));
            }
        }
        for (int it = 0; it < 500; ++it) {
            const auto a = R.random(rng), b = R.random(rng);
            REQUIRE(theta(a * b, Rh) == theta(b, Rh) * theta(a, Rh));
            REQUIRE(theta(a + b, Rh) == theta(a, Rh) + theta(b, Rh));
            REQUIRE(theta_inv(theta(a, Rh), R) == a);
        }
        // Centre goes onto centre, bijectively.
        std::set<std::vector<gf::Elem>> images;
        for (const auto& c : center_elements(R)) {
            const auto tc = theta(c, Rh);
            REQUIRE(Rh.is_central(tc));
            images.insert(tc.rep);
        }
        CHECK(images.size() == center_elements(Rh).size());
        if (!(R.F() == Rh.F())) CHECK_THROWS_AS(theta(R.one(), R), Error);
    }
}

TEST_CASE("quot text form") {
    auto rp = testsupport::ring_pair({3, 1, 2, 2, 1});
    const auto& R = *rp.F;
    std::mt19937_64 rng(6);
    const auto a = R.random(rng);
    const auto s = R.to_text(a);
    CHECK(s.rfind("quot[" + R.tag() + "]: ", 0) == 0);
    CHECK(R.parse(s) == a);
    CHECK_THROWS_AS(rp.Fhat->parse("quot[9/9]: big:0,0"), Error);
}
