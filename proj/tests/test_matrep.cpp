#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skewlab/matrep.hpp"
#include "support.hpp"

using namespace skewlab;
using namespace skewlab::matrep;

namespace {

RepOptions randomized(std::uint64_t seed) {
    RepOptions o;
    o.search = RepOptions::Search::randomized;
    o.seed = seed;
    return o;
}

// Rank as n minus the nullity counted by brute force over F_{q^s}^n (tiny cases only).
std::size_t rank_by_kernel_count(const gf::Matrix& A) {
    const auto& k = A.field();
    const std::size_t n = A.cols();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= k.size();
    std::size_t zeros = 0;
    for (std::size_t idx = 0; idx < total; ++idx) {
        gf::Vec v(n);
        std::size_t r = idx;
        for (auto& c : v) {
            c = static_cast<gf::Elem>(r % k.size());
            r /= k.size();
        }
        const auto w = A * v;
        zeros += std::all_of(w.begin(), w.end(), [](gf::Elem c) { return c == 0; });
    }
    std::size_t nullity = 0;
    for (std::size_t z = zeros; z > 1; z /= k.size()) ++nullity;
    return n - nullity;
}

}  // namespace

TEST_CASE("degree-one divisors for F = y - 1") {
    for (const auto& spec : testsupport::desk_rings()) {
        if (spec.s != 1) continue;
        auto rp = testsupport::ring_pair(spec);
        const auto& t = *rp.tower;
        const auto g = least_divisor(*rp.F);
        REQUIRE(*g.degree() == 1);
        CHECK(rp.F->skew_ring().right_rem(rp.F->modulus(), g).is_zero());
        if (rp.F->F().coeffs()[0] == t.mid().neg(1)) {
            const auto beta = t.big().neg(g.coeffs[0]);
            CHECK(t.big().norm(beta, t.e()) == 1);
        }
    }
}

TEST_CASE("representations are algebra isomorphisms") {
    std::mt19937_64 rng(1);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        for (const auto& opts : {RepOptions{}, randomized(17)}) {
            const auto ctx = RepContext::build(rp.F, opts);
            const auto& ef = ctx.ef();
            CHECK(R.skew_ring().right_rem(R.modulus(), ctx.divisor()).is_zero());
            CHECK(*ctx.divisor().degree() == R.tower().s());
            CHECK(ctx.represent(R.one()) == gf::Matrix::identity(ef, ctx.n()));
            CHECK(ctx.represent(R.monomial(1, R.tower().n())) == gf::Matrix::scalar(ef, ctx.n(), ctx.center_root()));
            for (std::size_t i = 0; i < R.fp_dim(); ++i)
                for (std::size_t j = 0; j < R.fp_dim(); ++j)
                    REQUIRE(ctx.represent(R.basis(i) * R.basis(j)) == ctx.basis_image(i) * ctx.basis_image(j));
            for (int it = 0; it < 300; ++it) {
                const auto a = R.random(rng), b = R.random(rng);
                const auto Ma = ctx.represent(a), Mb = ctx.represent(b);
                REQUIRE(ctx.represent(a * b) == Ma * Mb);
                REQUIRE(ctx.represent(a + b) == Ma + Mb);
                REQUIRE(ctx.preimage(Ma) == a);
            }
        }
    }
}

TEST_CASE("ranks") {
    std::mt19937_64 rng(2);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto c1 = RepContext::build(rp.F);
        const auto c2 = RepContext::build(rp.F, randomized(99));
        CHECK(c1.rank(R.one()) == R.tower().n());
        CHECK(c1.rank(R.zero()) == 0);
        CHECK(c1.rank(R.reduce(c1.divisor())) == R.tower().n() - 1);
        for (int it = 0; it < 300; ++it) {
            const auto a = R.random(rng);
            const auto r = c1.rank(a);
            REQUIRE(r == c2.rank(a));
            REQUIRE((r == R.tower().n()) == R.is_unit(a));
            REQUIRE((r == 0) == a.is_zero());
        }
        if (c1.ef().size() <= 9 && R.tower().n() <= 3) {
            for (int it = 0; it < 50; ++it) {
                const auto M = c1.represent(R.random(rng));
                REQUIRE(M.rank() == rank_by_kernel_count(M));
            }
        }
    }
}

TEST_CASE("Skolem-Noether conjugators") {
    std::mt19937_64 rng(3);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto c1 = RepContext::build(rp.F);
        const auto self = skolem_noether(c1, c1);
        CHECK(self.solution_dim == 1);
        CHECK(self.N == gf::Matrix::identity(c1.ef(), c1.n()));
        const auto c2 = RepContext::build(rp.F, randomized(5));
        const auto sn = skolem_noether(c1, c2);
        CHECK(sn.solution_dim == 1);
        const auto Ninv = *sn.N.inverse();
        for (int it = 0; it < 300; ++it) {
            const auto a = R.random(rng);
            REQUIRE(sn.N * c1.represent(a) * Ninv == c2.represent(a));
        }
    }
}

TEST_CASE("transpose bridge") {
    std::mt19937_64 rng(4);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto pair = build_rep_pair(rp.F, rp.Fhat);
        const auto br = transpose_bridge(pair.F, pair.Fhat);
        const auto Ninv = *br.N.inverse();
        for (std::size_t i = 0; i < R.fp_dim(); ++i) {
            const auto b = R.basis(i);
            REQUIRE(pair.F.represent(b).transpose() == Ninv * pair.Fhat.represent(quot::theta(b, *rp.Fhat)) * br.N);
        }
        for (int it = 0; it < 300; ++it) {
            const auto a = R.random(rng);
            REQUIRE(pair.F.rank(a) == pair.Fhat.rank(quot::theta(a, *rp.Fhat)));
        }
    }
}

TEST_CASE("trace form and the bilinear unit") {
    std::mt19937_64 rng(5);
    for (const auto& spec : testsupport::desk_rings()) {
        auto rp = testsupport::ring_pair(spec);
        const auto& R = *rp.F;
        const auto ctx = RepContext::build(rp.F);
        const std::size_t N = R.fp_dim();
        gf::Matrix G(R.tower().prime(), N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) G(i, j) = matrix_form(ctx.basis_image(i), ctx.basis_image(j));
        CHECK(G.rank() == N);
        const auto u = bilinear_unit(ctx);
        CHECK(ctx.rank(u) == R.tower().n());
        const auto Mu = ctx.represent(u);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                REQUIRE(R.form(R.basis(i), R.basis(j)) ==
                        matrix_trace_p(ctx.basis_image(i) * ctx.basis_image(j) * Mu));
        for (int it = 0; it < 50; ++it) {
            const auto a = R.random(rng), b = R.random(rng);
            REQUIRE(R.form(a, b) == matrix_trace_p(ctx.represent(a) * ctx.represent(b) * Mu));
        }
    }
}

TEST_CASE("matrix text form") {
    auto rp = testsupport::ring_pair({2, 1, 2, 1, 1});
    const auto ctx = RepContext::build(rp.F);
    CHECK(matrix_text(rp.F->tower(), ctx.represent(rp.F->one())) == "ef:1 ef:0 | ef:0 ef:1");
}
