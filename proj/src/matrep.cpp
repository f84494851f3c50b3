#include "skewlab/matrep.hpp"

#include <algorithm>
#include <random>

namespace skewlab::matrep {

namespace {

gf::Vec fp_coords(const gf::Field& k, Elem a) { return k.digits(a); }

}  // namespace

Elem least_center_root(const gf::FieldTower& tower, const skew::CenterPoly& F) {
    const auto& k = tower.ef();
    gf::Poly f;
    for (auto c : F.coeffs()) f.push_back(tower.embed(gf::Level::mid, gf::Level::ef, c));
    for (Elem a : k.lex_order())
        if (gf::poly_eval(k, f, a) == 0) return a;
    throw Error(ErrorCode::NoDivisorFound, "F has no root in F_{q^s}");
}

skew::SkewPoly least_divisor(const QuotRing& ring) {
    const auto& t = ring.tower();
    const auto& k = t.big();
    const std::size_t s = t.s();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s; ++i) {
        total *= k.size();
        if (total > kMaxDivisorScan) throw Error(ErrorCode::ScaleTooLarge, "divisor scan space too large");
    }
    const auto lex = k.lex_order();
    const auto& R = ring.skew_ring();
    std::vector<Elem> c(s + 1, 0);
    c[s] = 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t pos = s; pos-- > 0;) {
            c[pos] = lex[r % k.size()];
            r /= k.size();
        }
        skew::SkewPoly g(c);
        if (R.right_rem(ring.modulus(), g).is_zero()) return g;
    }
    throw Error(ErrorCode::NoDivisorFound, "no monic degree-s right divisor of F(x^n)");
}

skew::SkewPoly random_divisor(const QuotRing& ring, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& R = ring.skew_ring();
    const std::size_t s = ring.tower().s();
    for (int attempt = 0; attempt < 200000; ++attempt) {
        const auto a = ring.random(rng).to_skew();
        if (a.is_zero()) continue;
        const auto d = R.gcrd(a, ring.modulus());
        if (*d.degree() == s) return d;
    }
    throw Error(ErrorCode::NoDivisorFound, "randomized divisor search gave up");
}

// ---------------------------------------------------------------------------

RepContext RepContext::build(std::shared_ptr<const QuotRing> ring, const RepOptions& opts) {
    RepContext ctx;
    ctx.ring_ = std::move(ring);
    const QuotRing& R = *ctx.ring_;
    const auto& t = R.tower();
    const auto& ef = t.ef();
    const auto& big = t.big();
    const std::size_t n = t.n(), s = t.s(), e = t.e(), en = big.degree();
    const bool randomized = opts.search == RepOptions::Search::randomized;

    ctx.g_ = randomized ? random_divisor(R, opts.seed) : least_divisor(R);

    ctx.theta_ = opts.center_root ? *opts.center_root : least_center_root(t, R.F());
    {
        gf::Poly f;
        for (auto c : R.F().coeffs()) f.push_back(t.embed(gf::Level::mid, gf::Level::ef, c));
        if (ctx.theta_ >= ef.size() || gf::poly_eval(ef, f, ctx.theta_) != 0)
            throw Error(ErrorCode::InvalidArgument, "center root is not a root of F");
    }
    ctx.mu_.resize(s * e);
    for (std::size_t l = 0; l < s; ++l)
        for (std::size_t r = 0; r < e; ++r)
            ctx.mu_[l * e + r] = ef.mul(t.embed(gf::Level::mid, gf::Level::ef, t.mid().monomial(static_cast<unsigned>(r))),
                                        ef.pow(ctx.theta_, static_cast<std::int64_t>(l)));

    // E_F generators γ_r x^{nl} acting on V.
    std::vector<QuotElem> center_gens;
    for (std::size_t l = 0; l < s; ++l)
        for (std::size_t r = 0; r < e; ++r)
            center_gens.push_back(
                R.monomial(t.embed(gf::Level::mid, gf::Level::big, t.mid().monomial(static_cast<unsigned>(r))), n * l));

    std::vector<std::vector<Elem>> candidates;
    for (std::size_t i = 0; i < s; ++i)
        for (unsigned m = 0; m < en; ++m) {
            std::vector<Elem> v(s, 0);
            v[i] = big.monomial(m);
            candidates.push_back(std::move(v));
        }
    if (randomized) {
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }

    const std::size_t vdim = s * en;
    gf::Subspace span(t.prime(), vdim);
    std::vector<gf::Vec> columns;
    for (const auto& w : candidates) {
        if (ctx.vbasis_.size() == n) break;
        if (span.contains(ctx.module_coords(w))) continue;
        ctx.vbasis_.push_back(w);
        for (const auto& c : center_gens) {
            auto col = ctx.module_coords(ctx.act(c, w));
            span.insert(col);
            columns.push_back(std::move(col));
        }
    }
    if (ctx.vbasis_.size() != n || span.dimension() != vdim)
        throw Error(ErrorCode::NoDivisorFound, "module basis extraction failed");
    gf::Matrix B(t.prime(), vdim, vdim);
    for (std::size_t c = 0; c < vdim; ++c)
        for (std::size_t r = 0; r < vdim; ++r) B(r, c) = columns[c][r];
    auto Binv = B.inverse();
    if (!Binv) throw Error(ErrorCode::NoDivisorFound, "module basis is dependent");
    ctx.change_ = std::move(*Binv);

    const std::size_t fp = R.fp_dim();
    ctx.images_.reserve(fp);
    for (std::size_t idx = 0; idx < fp; ++idx) ctx.images_.push_back(ctx.matrix_of_action(R.basis(idx)));

    const std::size_t es = ef.degree();
    gf::Matrix P(t.prime(), fp, fp);
    for (std::size_t idx = 0; idx < fp; ++idx) {
        const auto& M = ctx.images_[idx];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto d = fp_coords(ef, M(i, j));
                for (std::size_t m = 0; m < es; ++m) P((i * n + j) * es + m, idx) = d[m];
            }
    }
    auto Pinv = P.inverse();
    if (!Pinv) throw Error(ErrorCode::NoDivisorFound, "representation is not bijective");
    ctx.preimage_map_ = std::move(*Pinv);
    return ctx;
}

gf::Vec RepContext::module_coords(const std::vector<Elem>& v) const {
    const auto& big = ring_->tower().big();
    gf::Vec out;
    out.reserve(v.size() * big.degree());
    for (auto c : v) {
        const auto d = big.digits(c);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

std::vector<Elem> RepContext::act(const QuotElem& a, const std::vector<Elem>& v) const {
    const auto& R = ring_->skew_ring();
    auto w = R.right_rem(R.mul(a.to_skew(), skew::SkewPoly(v)), g_).coeffs;
    w.resize(ring_->tower().s(), 0);
    return w;
}

Matrix RepContext::matrix_of_action(const QuotElem& a) const {
    const auto& t = ring_->tower();
    const auto& k = t.ef();
    const std::size_t n = t.n(), s = t.s(), e = t.e();
    Matrix M(k, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto d = change_ * module_coords(act(a, vbasis_[j]));
        for (std::size_t i = 0; i < n; ++i) {
            Elem acc = 0;
            for (std::size_t le = 0; le < s * e; ++le) {
                const auto c = d[i * s * e + le];
                if (c) acc = k.add(acc, k.mul(k.scalar(c), mu_[le]));
            }
            M(i, j) = acc;
        }
    }
    return M;
}

Matrix RepContext::represent(const QuotElem& a) const {
    const auto c = ring_->coords(a);
    const auto& k = ef();
    Matrix M(k, n(), n());
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
        if (c[idx] == 0) continue;
        if (c[idx] == 1) M.add_in_place(images_[idx]);
        else M.add_in_place(images_[idx].scaled(k.scalar(c[idx])));
    }
    return M;
}

QuotElem RepContext::preimage(const Matrix& A) const {
    const auto& k = ef();
    if (&A.field() != &k || A.rows() != n() || A.cols() != n())
        throw Error(ErrorCode::InvalidArgument, "matrix is not an n×n matrix over F_{q^s}");
    gf::Vec flat;
    flat.reserve(ring_->fp_dim());
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) {
            const auto d = fp_coords(k, A(i, j));
            flat.insert(flat.end(), d.begin(), d.end());
        }
    return ring_->from_coords(preimage_map_ * flat);
}

// ---------------------------------------------------------------------------

RepPair build_rep_pair(std::shared_ptr<const QuotRing> ringF, std::shared_ptr<const QuotRing> ringFhat,
                       const RepOptions& opts) {
    RepContext F = RepContext::build(std::move(ringF), opts);
    RepOptions o = opts;
    o.center_root = F.ef().inv(F.center_root());
    RepContext Fh = RepContext::build(std::move(ringFhat), o);
    return {std::move(F), std::move(Fh)};
}

Intertwiner intertwiner(const std::vector<Matrix>& A, const std::vector<Matrix>& B) {
    if (A.empty() || A.size() != B.size()) throw Error(ErrorCode::InvalidArgument, "need matched generator lists");
    const auto& k = A.front().field();
    const std::size_t n = A.front().rows();
    Matrix sys(k, A.size() * n * n, n * n);
    for (std::size_t g = 0; g < A.size(); ++g)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = (g * n + i) * n + c;
                for (std::size_t l = 0; l < n; ++l) {
                    sys(row, i * n + l) = k.add(sys(row, i * n + l), A[g](l, c));
                    sys(row, l * n + c) = k.sub(sys(row, l * n + c), B[g](i, l));
                }
            }
    const Matrix ker = sys.kernel();
    if (ker.rows() == 0) throw Error(ErrorCode::NoInvertibleSolution, "intertwining system has only the zero solution");
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Matrix N(k, n, n);
        Elem lead = 0;
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            N(idx / n, idx % n) = ker(r, idx);
            if (!lead && ker(r, idx)) lead = ker(r, idx);
        }
        N = N.scaled(k.inv(lead));
        if (N.inverse()) return {std::move(N), ker.rows()};
    }
    throw Error(ErrorCode::NoInvertibleSolution, "no invertible intertwiner among kernel basis vectors");
}

Intertwiner skolem_noether(const RepContext& ctx1, const RepContext& ctx2) {
    if (!(ctx1.ring() == ctx2.ring())) throw Error(ErrorCode::RingMismatch, "contexts over different rings");
    const auto& R = ctx1.ring();
    const auto& t = R.tower();
    std::vector<Matrix> A, B;
    std::vector<QuotElem> gens;
    for (unsigned m = 0; m < t.big().degree(); ++m) gens.push_back(R.constant(t.big().monomial(m)));
    gens.push_back(R.x());
    for (const auto& a : gens) {
        A.push_back(ctx1.represent(a));
        B.push_back(ctx2.represent(a));
    }
    return intertwiner(A, B);
}

Intertwiner transpose_bridge(const RepContext& ctxF, const RepContext& ctxFhat) {
    const auto& R = ctxF.ring();
    const auto& t = R.tower();
    std::vector<Matrix> A, B;
    std::vector<QuotElem> gens;
    for (unsigned m = 0; m < t.big().degree(); ++m) gens.push_back(R.constant(t.big().monomial(m)));
    gens.push_back(R.x());
    for (const auto& a : gens) {
        A.push_back(ctxF.represent(a).transpose());
        B.push_back(ctxFhat.represent(quot::theta(a, ctxFhat.ring())));
    }
    return intertwiner(A, B);
}

std::uint32_t matrix_trace_p(const Matrix& A) { return A.field().absolute_trace(A.trace()); }

std::uint32_t matrix_form(const Matrix& A, const Matrix& B) {
    const auto& k = A.field();
    Elem tr = 0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) tr = k.add(tr, k.mul(A(i, l), B(l, i)));
    return k.absolute_trace(tr);
}

QuotElem bilinear_unit(const RepContext& ctx) {
    const auto& R = ctx.ring();
    const auto& fp = R.tower().prime();
    const std::size_t d = R.fp_dim();
    Matrix T(fp, d, d);
    gf::Vec rhs(d);
    for (std::size_t c = 0; c < d; ++c) {
        rhs[c] = R.epsilon(R.basis(c));
        for (std::size_t m = 0; m < d; ++m) T(c, m) = matrix_form(ctx.basis_image(c), ctx.basis_image(m));
    }
    const auto sol = gf::solve(T, rhs);
    if (!sol) throw Error(ErrorCode::NoUnitSolution, "trace-form system is inconsistent");
    QuotElem u = R.from_coords(*sol);
    if (!R.is_unit(u)) throw Error(ErrorCode::NoUnitSolution, "solution is not a unit");
    return u;
}

std::string matrix_text(const gf::FieldTower& tower, const Matrix& A) {
    const gf::Level lvl = &A.field() == &tower.ef() ? gf::Level::ef : gf::Level::big;
    std::string out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i) out += " | ";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) out += ' ';
            out += gf::to_text(gf::Element{&tower, lvl, A(i, j)});
        }
    }
    return out;
}

}  // namespace skewlab::matrep
