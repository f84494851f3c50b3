#include "skewlab/families.hpp"

#include <cstdlib>
#include <numeric>

namespace skewlab::families {

namespace {

using gf::Level;

const gf::FieldTower& tower_of(const std::shared_ptr<const QuotRing>& ring) {
    if (!ring) throw Error(ErrorCode::InvalidArgument, "family parameters need a ring");
    return ring->tower();
}

void check_k(const gf::FieldTower& t, unsigned k) {
    if (k < 1 || k >= t.n()) throw Error(ErrorCode::InvalidArgument, "need 1 <= k < n");
}

void check_big(const gf::FieldTower& t, Elem a, const char* what) {
    if (a >= t.big().size()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not in F_{q^n}");
}

// (-1)^sign_exp F_0^k in F_q.
Elem signed_f0_power(const QuotRing& R, unsigned k, std::uint64_t sign_exp) {
    const auto& mid = R.tower().mid();
    Elem c = mid.pow(R.F().constant_term(), k);
    if (sign_exp % 2) c = mid.neg(c);
    return c;
}

// F_p-basis of F_{q^{n/2}} ⊆ F_{q^n}: powers of a generator of the subfield.
std::vector<Elem> half_field_basis(const gf::FieldTower& t) {
    const auto& big = t.big();
    const unsigned d = t.e() * t.n() / 2;
    std::uint64_t sub = 1;
    for (unsigned i = 0; i < d; ++i) sub *= t.p();
    const Elem g = big.pow(big.primitive(), static_cast<std::int64_t>((big.size() - 1) / (sub - 1)));
    std::vector<Elem> out;
    Elem w = 1;
    for (unsigned i = 0; i < d; ++i, w = big.mul(w, g)) out.push_back(w);
    return out;
}

std::string big_text(const gf::FieldTower& t, Elem a) { return gf::to_text(gf::Element{&t, Level::big, a}); }

std::shared_ptr<const QuotRing> reciprocal_ring(const std::shared_ptr<const QuotRing>& R) {
    return std::make_shared<const QuotRing>(R->tower_ptr(), quot::reciprocal(R->tower(), R->F()));
}

unsigned gcd_u(long a, long b) { return static_cast<unsigned>(std::gcd(std::labs(a), std::labs(b))); }

}  // namespace

unsigned k_degree(const SParams& P) { return gcd_u(tower_of(P.ring).e(), P.h); }

Elem s_condition_value(const SParams& P) {
    const auto& t = tower_of(P.ring);
    check_big(t, P.eta, "eta");
    const unsigned kd = k_degree(P);
    const std::uint64_t sk = static_cast<std::uint64_t>(t.s()) * P.k;
    const Elem c = signed_f0_power(*P.ring, P.k, sk * (t.n() - 1));
    const Elem Nc = t.mid().norm(c, kd);
    return t.big().mul(t.big().norm(P.eta, kd), t.embed(Level::mid, Level::big, Nc));
}

bool s_valid(const SParams& P) { return P.eta == 0 || s_condition_value(P) != 1; }

Elem d_condition_value(const DParams& P) {
    const auto& t = tower_of(P.ring);
    check_big(t, P.gamma, "gamma");
    const Elem N = t.restrict(Level::big, Level::mid, t.big().norm(P.gamma, t.e()));
    const Elem c = signed_f0_power(*P.ring, P.k, static_cast<std::uint64_t>(t.s()) * P.k);
    return t.mid().mul(c, N);
}

void d_check(const DParams& P) {
    const auto& t = tower_of(P.ring);
    check_k(t, P.k);
    if (t.p() == 2) throw Error(ErrorCode::EvenQ, "D codes need q odd");
    if (t.n() % 2) throw Error(ErrorCode::OddN, "D codes need n even");
    const Elem v = d_condition_value(P);
    if (v == 0 || gf::is_square(gf::Element{&t, Level::mid, v}))
        throw Error(ErrorCode::InvalidGamma, "(-1)^{ks} F_0^k N(gamma) = " +
                                                 gf::to_text(gf::Element{&t, Level::mid, v}) + " is a square in F_q");
}

RankCode build_S(const SParams& P, bool force) {
    const auto& t = tower_of(P.ring);
    check_k(t, P.k);
    check_big(t, P.eta, "eta");
    if (P.h >= t.e() * t.n()) throw Error(ErrorCode::InvalidArgument, "need h < ne");
    if (!force && !s_valid(P))
        throw Error(ErrorCode::InvalidEta, "norm condition gives 1 for eta = " + big_text(t, P.eta));
    const auto& R = *P.ring;
    const auto& big = t.big();
    const std::size_t sk = static_cast<std::size_t>(t.s()) * P.k;
    std::vector<QuotElem> gens;
    for (unsigned m = 0; m < big.degree(); ++m) {
        const Elem b = big.monomial(m);
        gens.push_back(R.add(R.constant(b), R.monomial(big.mul(P.eta, big.frob(b, P.h)), sk)));
    }
    for (std::size_t i = 1; i < sk; ++i)
        for (unsigned m = 0; m < big.degree(); ++m) gens.push_back(R.monomial(big.monomial(m), i));
    return RankCode::from_generators(P.ring, gens, k_degree(P));
}

RankCode build_D(const DParams& P, bool force) {
    const auto& t = tower_of(P.ring);
    if (force) {
        check_k(t, P.k);
        if (t.n() % 2) throw Error(ErrorCode::OddN, "D codes need n even");
        check_big(t, P.gamma, "gamma");
    } else {
        d_check(P);
    }
    const auto& R = *P.ring;
    const auto& big = t.big();
    const std::size_t sk = static_cast<std::size_t>(t.s()) * P.k;
    std::vector<QuotElem> gens;
    for (const Elem b : half_field_basis(t)) {
        gens.push_back(R.constant(b));
        gens.push_back(R.monomial(big.mul(P.gamma, b), sk));
    }
    for (std::size_t i = 1; i < sk; ++i)
        for (unsigned m = 0; m < big.degree(); ++m) gens.push_back(R.monomial(big.monomial(m), i));
    return RankCode::from_generators(P.ring, gens, t.e());
}

RankCode build(const Params& P, bool force) {
    if (const auto* s = std::get_if<SParams>(&P)) return build_S(*s, force);
    return build_D(std::get<DParams>(P), force);
}

std::vector<Twist> scan_eta(const std::shared_ptr<const QuotRing>& ring, unsigned k) {
    const auto& t = tower_of(ring);
    check_k(t, k);
    std::vector<Twist> out;
    const auto order = t.big().lex_order();
    for (unsigned h = 0; h < t.e() * t.n(); ++h)
        for (const Elem eta : order) {
            if (eta == 0) continue;
            const SParams P{ring, k, eta, h};
            const Elem v = s_condition_value(P);
            if (v != 1) out.push_back({eta, h, v});
        }
    return out;
}

std::vector<Twist> scan_gamma(const std::shared_ptr<const QuotRing>& ring, unsigned k) {
    const auto& t = tower_of(ring);
    check_k(t, k);
    if (t.p() == 2) throw Error(ErrorCode::EvenQ, "D codes need q odd");
    if (t.n() % 2) throw Error(ErrorCode::OddN, "D codes need n even");
    std::vector<Twist> out;
    for (const Elem g : t.big().lex_order()) {
        const DParams P{ring, k, g};
        const Elem v = d_condition_value(P);
        if (v != 0 && !gf::is_square(gf::Element{&t, Level::mid, v})) out.push_back({g, 0, v});
    }
    return out;
}

namespace {

void require_same_tower(const QuotRing& a, const QuotRing& b) {
    if (!(a.tower() == b.tower())) throw Error(ErrorCode::RingMismatch, "rings over different towers");
    if (!(quot::reciprocal(a.tower(), a.F()) == b.F()))
        throw Error(ErrorCode::RingMismatch, "target ring is not the reciprocal ring");
}

SParams revalidate(SParams P) {
    if (!s_valid(P)) throw Error(ErrorCode::MismatchFound, "claimed S parameters fail the norm condition");
    return P;
}

DParams revalidate(DParams P) {
    try {
        d_check(P);
    } catch (const Error& e) {
        throw Error(ErrorCode::MismatchFound, std::string("claimed D parameters invalid: ") + e.what());
    }
    return P;
}

}  // namespace

SParams claimed_adjoint(const SParams& P, std::shared_ptr<const QuotRing> ringFhat) {
    const auto& t = tower_of(P.ring);
    require_same_tower(*P.ring, *ringFhat);
    const unsigned ne = t.e() * t.n();
    const Elem eta = P.eta == 0 ? 0 : t.big().frob(t.big().inv(P.eta), -static_cast<std::int64_t>(P.h));
    const unsigned h = (t.sigma_p_exponent(static_cast<std::int64_t>(P.k) * t.s()) + ne - P.h) % ne;
    return revalidate(SParams{std::move(ringFhat), P.k, eta, h});
}

SParams claimed_dual(const SParams& P, std::shared_ptr<const QuotRing> ringFhat) {
    const auto& t = tower_of(P.ring);
    require_same_tower(*P.ring, *ringFhat);
    const unsigned ne = t.e() * t.n();
    const Elem f0 = t.embed(Level::mid, Level::big, P.ring->F().constant_term());
    const Elem eta = t.big().frob(t.big().mul(P.eta, f0), -static_cast<std::int64_t>(P.h));
    return revalidate(SParams{std::move(ringFhat), t.n() - P.k, eta, (ne - P.h) % ne});
}

DParams claimed_adjoint(const DParams& P, std::shared_ptr<const QuotRing> ringFhat) {
    const auto& t = tower_of(P.ring);
    require_same_tower(*P.ring, *ringFhat);
    if (P.gamma == 0) throw Error(ErrorCode::InvalidGamma, "gamma = 0");
    const Elem g = t.sigma(t.big().inv(P.gamma), static_cast<std::int64_t>(t.s()) * (t.n() - P.k));
    return revalidate(DParams{std::move(ringFhat), P.k, g});
}

DParams claimed_dual(const DParams& P, std::shared_ptr<const QuotRing> ringFhat) {
    const auto& t = tower_of(P.ring);
    require_same_tower(*P.ring, *ringFhat);
    const Elem g = t.sigma(P.gamma, static_cast<std::int64_t>(t.s()) * P.k);
    return revalidate(DParams{std::move(ringFhat), t.n() - P.k, g});
}

Params claimed(const Params& P, bool dual, std::shared_ptr<const QuotRing> ringFhat) {
    return std::visit(
        [&](const auto& x) -> Params { return dual ? claimed_dual(x, ringFhat) : claimed_adjoint(x, ringFhat); }, P);
}

// ---------------------------------------------------------------------------

namespace {

const std::shared_ptr<const QuotRing>& ring_of(const Params& P) {
    return std::visit([](const auto& x) -> const std::shared_ptr<const QuotRing>& { return x.ring; }, P);
}

unsigned k_of(const Params& P) {
    return std::visit([](const auto& x) { return x.k; }, P);
}

// First ξ ≠ 0 in lex order with Tr_{q^n/q^{n/2}}(ξ) = 0.
Elem trace_zero_element(const gf::FieldTower& t) {
    for (const Elem a : t.big().lex_order())
        if (a != 0 && t.big().trace(a, t.e() * t.n() / 2) == 0) return a;
    throw Error(ErrorCode::InvalidArgument, "no trace-zero element");
}

}  // namespace

VerificationReport verify_adjoint_dual(const Params& P, Which which, const matrep::RepOptions& opts) {
    const auto& ring = ring_of(P);
    const auto& t = tower_of(ring);
    const auto Rh = reciprocal_ring(ring);
    const bool dual = which == Which::dual;
    const auto C = build(P);
    const auto Q = claimed(P, dual, Rh);
    const auto Cq = build(Q);

    VerificationReport rep;
    rep.which = which;
    rep.code_dim = C.dimension();
    rep.claimed_text = params_text(Q);
    rep.full_dim = ring->fp_dim();

    const std::size_t n = t.n(), s = t.s(), k = k_of(P);
    const auto& z = Rh->central_z();
    QuotElem left = z, right = Rh->one();
    std::optional<code::RankCode> computed;
    if (!dual) {
        computed = code::adjoint_code(C, Rh);
        rep.dim_sum = C.dimension() + code::frobenius_dual(C).dimension();
        if (const auto* sp = std::get_if<SParams>(&P)) {
            right = Rh->monomial(1, s * (n - k) + (sp->eta == 0 ? 1 : 0));
        } else {
            const Elem g = std::get<DParams>(P).gamma;
            left = Rh->mul(z, Rh->constant(t.sigma(g, static_cast<std::int64_t>(s * (n - k)))));
            right = Rh->monomial(1, s * (n - k));
        }
    } else {
        const auto ctx = code::make_dual_context(ring, Rh, opts);
        computed = code::dual_code(C, ctx);
        rep.dim_sum = C.dimension() + computed->dimension();
        const auto tu = quot::theta(ctx.unit, *Rh);
        if (std::holds_alternative<SParams>(P)) {
            left = Rh->mul(tu, z);
            right = Rh->monomial(1, s * k);
        } else {
            const Elem g = std::get<DParams>(P).gamma;
            // x^{-sk} = z·x^{ns-sk}
            left = Rh->mul(Rh->mul(tu, Rh->mul(z, z)), Rh->monomial(t.big().inv(g), n * s - s * k));
            right = Rh->mul(Rh->pow(Rh->x(), 2 * s * k), Rh->constant(trace_zero_element(t)));
        }
    }
    std::vector<QuotElem> moved;
    for (const auto& g : Cq.generators()) moved.push_back(Rh->mul(Rh->mul(left, g), right));
    const auto translated = code::RankCode::from_generators(Rh, moved, Cq.k_degree());

    rep.computed_dim = computed->dimension();
    rep.claimed_dim = translated.dimension();
    rep.computed_in_claimed = true;
    for (const auto& g : computed->generators()) rep.computed_in_claimed &= translated.contains(g);
    rep.claimed_in_computed = true;
    for (const auto& g : translated.generators()) rep.claimed_in_computed &= computed->contains(g);
    rep.equal = rep.computed_in_claimed && rep.claimed_in_computed && rep.computed_dim == rep.claimed_dim;
    if (!rep.equal)
        throw Error(ErrorCode::MismatchFound, std::string(dual ? "dual" : "adjoint") + " of " + params_text(P) +
                                                  " differs from " + rep.claimed_text);
    if (rep.dim_sum != rep.full_dim) throw Error(ErrorCode::MismatchFound, "dimension formula fails");
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

code::NuclearParameters tuple(const gf::FieldTower& t, std::array<std::size_t, 5> e) {
    return code::NuclearParameters{t.p(), e};
}

code::NuclearParameters s_formula(const SParams& P) {
    const auto& t = tower_of(P.ring);
    const long e = t.e(), n = t.n(), s = t.s(), k = P.k, h = P.h;
    const std::size_t card = static_cast<std::size_t>(n * s * k * e);
    if (P.eta == 0) return tuple(t, {card, std::size_t(n * e), std::size_t(n * e), std::size_t(s * e), std::size_t(e)});
    return tuple(t, {card, gcd_u(n * e, h), gcd_u(n * e, s * k * e - h), std::size_t(s * e), gcd_u(e, h)});
}

code::NuclearParameters d_formula(const DParams& P) {
    const auto& t = tower_of(P.ring);
    const std::size_t e = t.e(), n = t.n(), s = t.s(), k = P.k;
    return tuple(t, {n * s * k * e, n * e / 2, n * e / 2, s * e, e});
}

}  // namespace

code::NuclearParameters expected_nuclear(const Params& P) {
    const auto& t = tower_of(ring_of(P));
    const unsigned k = k_of(P);
    check_k(t, k);
    if (const auto* sp = std::get_if<SParams>(&P)) {
        if (t.s() * k <= 1) throw Error(ErrorCode::OutOfTheoremRange, "nuclear parameters need sk > 1");
        return s_formula(*sp);
    }
    if (t.n() % 2) throw Error(ErrorCode::OddN, "D codes need n even");
    if (t.s() * k < 3) throw Error(ErrorCode::OutOfTheoremRange, "nuclear parameters need sk >= 3");
    return d_formula(std::get<DParams>(P));
}

std::string table_row(const Params& P) {
    const bool s1 = tower_of(ring_of(P)).s() == 1;
    if (const auto* sp = std::get_if<SParams>(&P)) {
        if (sp->eta == 0) return s1 ? "I" : "VII";
        return s1 ? "II" : "VI";
    }
    return s1 ? "III" : "VIII";
}

code::NuclearParameters table_formula(const Params& P) {
    if (const auto* sp = std::get_if<SParams>(&P)) return s_formula(*sp);
    return d_formula(std::get<DParams>(P));
}

std::string params_text(const Params& P) {
    const auto& R = *ring_of(P);
    const auto& t = R.tower();
    std::string out;
    if (const auto* sp = std::get_if<SParams>(&P)) {
        out = "S n=" + std::to_string(t.n()) + " s=" + std::to_string(t.s()) + " k=" + std::to_string(sp->k) +
              " eta=" + big_text(t, sp->eta) + " h=" + std::to_string(sp->h);
    } else {
        const auto& dp = std::get<DParams>(P);
        out = "D n=" + std::to_string(t.n()) + " s=" + std::to_string(t.s()) + " k=" + std::to_string(dp.k) +
              " gamma=" + big_text(t, dp.gamma);
    }
    return out + " F=" + R.tag();
}

}  // namespace skewlab::families
