#include "skewlab/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

namespace skewlab::code {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SKEWLAB_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

std::string power_text(std::uint32_t p, std::size_t e) {
    unsigned __int128 v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= p;
        if (v > static_cast<unsigned __int128>(UINT64_MAX)) return std::to_string(p) + "^" + std::to_string(e);
    }
    return std::to_string(static_cast<std::uint64_t>(v));
}

namespace {

std::uint64_t checked_power(std::uint32_t p, std::size_t e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (v > limit / p) throw Error(ErrorCode::TooLarge, "code has more than " + std::to_string(limit) +
                                                                 " codewords (raise SKEWLAB_BUDGET)");
        v *= p;
    }
    if (v > limit) throw Error(ErrorCode::TooLarge, "code has more than " + std::to_string(limit) + " codewords");
    return v;
}

// Gray-code digits g_i = (k_i - k_{i+1}) mod p of the index k.
std::vector<std::uint32_t> gray_digits(std::uint64_t k, std::uint32_t p, std::size_t dim) {
    std::vector<std::uint32_t> d(dim + 1, 0), g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        d[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
    }
    for (std::size_t i = 0; i < dim; ++i) g[i] = (d[i] + p - d[i + 1]) % p;
    return g;
}

// Generator added when stepping from index t-1 to t.
std::size_t gray_step(std::uint64_t t, std::uint32_t p) {
    std::uint64_t k = t - 1;
    std::size_t c = 0;
    while (k % p == p - 1) {
        k /= p;
        ++c;
    }
    return c;
}

gf::Matrix fp_operator(const QuotRing& R, const QuotElem& c, bool left) {
    const std::size_t N = R.fp_dim();
    gf::Matrix M(R.tower().prime(), N, N);
    for (std::size_t m = 0; m < N; ++m) {
        const auto b = R.basis(m);
        const auto col = R.coords(left ? R.mul(c, b) : R.mul(b, c));
        for (std::size_t r = 0; r < N; ++r) M(r, m) = col[r];
    }
    return M;
}

gf::Matrix stack(const gf::Field& k, const std::vector<gf::Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    gf::Matrix out(k, rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
        r0 += b.rows();
    }
    return out;
}

std::vector<QuotElem> kernel_elements(const QuotRing& R, const gf::Matrix& sys) {
    const gf::Matrix K = sys.kernel();
    std::vector<QuotElem> out;
    for (std::size_t r = 0; r < K.rows(); ++r) out.push_back(R.from_coords(gf::Vec(K.row(r).begin(), K.row(r).end())));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

RankCode::RankCode(std::shared_ptr<const QuotRing> ring, unsigned k_degree)
    : ring_(std::move(ring)), k_degree_(k_degree), space_(ring_->tower().prime(), ring_->fp_dim()) {
    if (k_degree_ == 0 || ring_->tower().e() % k_degree_ != 0)
        throw Error(ErrorCode::InvalidArgument, "K must be a subfield of F_q");
}

RankCode RankCode::from_generators(std::shared_ptr<const QuotRing> ring, const std::vector<QuotElem>& gens,
                                   unsigned k_degree) {
    RankCode C(std::move(ring), k_degree);
    for (const auto& g : gens) {
        C.ring_->require(g);
        if (C.space_.insert(C.ring_->coords(g))) C.gens_.push_back(QuotElem{C.ring_.get(), g.rep});
    }
    return C;
}

RankCode RankCode::full(std::shared_ptr<const QuotRing> ring) {
    std::vector<QuotElem> gens;
    for (std::size_t i = 0; i < ring->fp_dim(); ++i) gens.push_back(ring->basis(i));
    return from_generators(ring, gens, ring->tower().e());
}

RankCode RankCode::zero(std::shared_ptr<const QuotRing> ring) { return from_generators(ring, {}, ring->tower().e()); }

std::string RankCode::cardinality() const { return power_text(ring_->tower().p(), dimension()); }

bool RankCode::contains(const QuotElem& a) const { return space_.contains(ring_->coords(a)); }

bool RankCode::equals(const RankCode& o) const { return *ring_ == *o.ring_ && space_.basis() == o.space_.basis(); }

bool RankCode::is_k_linear() const {
    const auto& t = ring_->tower();
    const auto& mid = t.mid();
    // F_p-basis of K = F_{p^k} inside F_q: powers of a generator of K.
    std::uint32_t pk = 1;
    for (unsigned i = 0; i < k_degree_; ++i) pk *= t.p();
    const Elem w = mid.pow(mid.primitive(), static_cast<std::int64_t>((mid.size() - 1) / (pk - 1)));
    Elem kappa = 1;
    for (unsigned i = 0; i < k_degree_; ++i, kappa = mid.mul(kappa, w)) {
        const Elem kb = t.embed(gf::Level::mid, gf::Level::big, kappa);
        for (const auto& g : gens_)
            if (!contains(ring_->scale_left(kb, g))) return false;
    }
    return true;
}

namespace {

void walk_span(const QuotRing& R, const std::vector<QuotElem>& gens, const std::function<bool(const QuotElem&)>& f) {
    const std::uint32_t p = R.tower().p();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total *= p;
    QuotElem cur = R.zero();
    if (!f(cur)) return;
    for (std::uint64_t t = 1; t < total; ++t) {
        cur = R.add(cur, gens[gray_step(t, p)]);
        if (!f(cur)) return;
    }
}

}  // namespace

void RankCode::for_each(const std::function<bool(const QuotElem&)>& f) const { walk_span(*ring_, gens_, f); }

// ---------------------------------------------------------------------------

DistanceReport rank_distribution(const RankCode& C, const DistanceOptions& opts) {
    const auto& R = C.ring();
    const std::uint32_t p = R.tower().p();
    const std::size_t dim = C.dimension(), n = R.tower().n();
    const std::uint64_t total = checked_power(p, dim, opts.budget);
    const auto ctx = matrep::RepContext::build(C.ring_ptr());
    std::vector<gf::Matrix> M;
    for (const auto& g : C.generators()) M.push_back(ctx.represent(g));

    auto run = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& counts) {
        if (lo >= hi) return;
        const auto& ef = ctx.ef();
        gf::Matrix S(ef, n, n);
        const auto g = gray_digits(lo, p, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::uint32_t r = 0; r < g[i]; ++r) S.add_in_place(M[i]);
        ++counts[S.rank()];
        for (std::uint64_t t = lo + 1; t < hi; ++t) {
            S.add_in_place(M[gray_step(t, p)]);
            ++counts[S.rank()];
        }
    };

    const unsigned W = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::vector<std::uint64_t>> partial(W, std::vector<std::uint64_t>(n + 1, 0));
    if (W == 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < W; ++w) {
            const std::uint64_t lo = total * w / W, hi = total * (w + 1) / W;
            threads.emplace_back(run, lo, hi, std::ref(partial[w]));
        }
        for (auto& th : threads) th.join();
    }
    DistanceReport rep;
    rep.rank_counts.assign(n + 1, 0);
    for (const auto& part : partial)
        for (std::size_t r = 0; r <= n; ++r) rep.rank_counts[r] += part[r];
    for (std::size_t r = 1; r <= n; ++r)
        if (rep.rank_counts[r]) {
            rep.d = r;
            break;
        }
    return rep;
}

std::size_t min_distance(const RankCode& C, const DistanceOptions& opts) {
    const auto rep = rank_distribution(C, opts);
    if (!rep.d) throw Error(ErrorCode::InvalidArgument, "the zero code has no minimum distance");
    return *rep.d;
}

MrdReport is_mrd(const RankCode& C, const DistanceOptions& opts) {
    const auto& t = C.ring().tower();
    MrdReport r;
    r.d = min_distance(C, opts);
    r.card_exp = C.dimension();
    r.bound_exp = static_cast<std::size_t>(t.e()) * t.s() * t.n() * (t.n() - r.d + 1);
    r.mrd = r.card_exp == r.bound_exp;
    return r;
}

// ---------------------------------------------------------------------------

RankCode adjoint_code(const RankCode& C, std::shared_ptr<const QuotRing> ringFhat) {
    std::vector<QuotElem> gens;
    for (const auto& g : C.generators()) gens.push_back(quot::theta(g, *ringFhat));
    return RankCode::from_generators(std::move(ringFhat), gens, C.k_degree());
}

RankCode frobenius_dual(const RankCode& C) {
    const auto& R = C.ring();
    const std::size_t N = R.fp_dim();
    gf::Matrix sys(R.tower().prime(), C.dimension(), N);
    for (std::size_t i = 0; i < C.dimension(); ++i)
        for (std::size_t m = 0; m < N; ++m) sys(i, m) = R.form(C.generators()[i], R.basis(m));
    return RankCode::from_generators(C.ring_ptr(), kernel_elements(R, sys), C.k_degree());
}

gf::Matrix DualContext::bridged(const QuotElem& b) const { return bridge_inv * reps.Fhat.represent(b) * bridge; }

DualContext make_dual_context(std::shared_ptr<const QuotRing> ringF, std::shared_ptr<const QuotRing> ringFhat,
                              const matrep::RepOptions& opts) {
    auto reps = matrep::build_rep_pair(std::move(ringF), std::move(ringFhat), opts);
    auto br = matrep::transpose_bridge(reps.F, reps.Fhat);
    auto inv = *br.N.inverse();
    auto u = matrep::bilinear_unit(reps.F);
    return DualContext{std::move(reps), std::move(br.N), std::move(inv), std::move(u)};
}

RankCode dual_code(const RankCode& C, const DualContext& ctx) {
    if (!(C.ring() == ctx.reps.F.ring())) throw Error(ErrorCode::RingMismatch, "dual context built for another ring");
    const auto perp = frobenius_dual(C);
    const auto& Rh = ctx.reps.Fhat.ring_ptr();
    std::vector<QuotElem> gens;
    for (const auto& d : perp.generators()) gens.push_back(quot::theta(C.ring().mul(d, ctx.unit), *Rh));
    return RankCode::from_generators(Rh, gens, C.k_degree());
}

bool dual_is_orthogonal(const RankCode& C, const RankCode& D, const DualContext& ctx) {
    std::vector<gf::Matrix> dm;
    for (const auto& d : D.generators()) dm.push_back(ctx.bridged(d).transpose());
    for (const auto& c : C.generators()) {
        const auto Mc = ctx.reps.F.represent(c);
        for (const auto& Md : dm)
            if (matrep::matrix_form(Mc, Md) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

RankCode apply_equivalence(const RankCode& C, const matrep::RepContext& ctx, const gf::Matrix& U,
                           const gf::Matrix& V, unsigned rho_exp) {
    if (!U.inverse() || !V.inverse()) throw Error(ErrorCode::NotInvertible, "equivalence needs invertible U and V");
    std::vector<QuotElem> gens;
    for (const auto& g : C.generators())
        gens.push_back(ctx.preimage(U * ctx.represent(g).frobenius(rho_exp) * V));
    return RankCode::from_generators(C.ring_ptr(), gens, C.k_degree());
}

RankCode apply_equivalence(const RankCode& C, const QuotElem& u, const QuotElem& v) {
    const auto& R = C.ring();
    if (!R.is_unit(u) || !R.is_unit(v)) throw Error(ErrorCode::NotInvertible, "equivalence needs units");
    std::vector<QuotElem> gens;
    for (const auto& g : C.generators()) gens.push_back(R.mul(R.mul(u, g), v));
    return RankCode::from_generators(C.ring_ptr(), gens, C.k_degree());
}

// ---------------------------------------------------------------------------

std::array<std::string, 5> NuclearParameters::values() const {
    std::array<std::string, 5> v;
    for (std::size_t i = 0; i < 5; ++i) v[i] = power_text(p, exps[i]);
    return v;
}

std::string NuclearParameters::text() const {
    const auto v = values();
    return "(" + v[0] + "," + v[1] + "," + v[2] + "," + v[3] + "," + v[4] + ")";
}

QuotElem first_invertible(const RankCode& C, const DistanceOptions& opts) {
    const auto& R = C.ring();
    if (C.contains(R.one())) return R.one();
    checked_power(R.tower().p(), C.dimension(), opts.budget);
    std::optional<QuotElem> found;
    C.for_each([&](const QuotElem& c) {
        if (!c.is_zero() && R.is_unit(c)) {
            found = c;
            return false;
        }
        return true;
    });
    if (!found) throw Error(ErrorCode::NoInvertibleCodeword, "code contains no invertible element");
    return *found;
}

InvariantReport invariants(const RankCode& C, bool normalize_identity, const DistanceOptions& opts) {
    const auto& R = C.ring();
    const auto& fp = R.tower().prime();
    const std::size_t N = R.fp_dim();
    bool normalized = false;
    RankCode M = C;
    if (normalize_identity) {
        const auto c0 = first_invertible(C, opts);
        if (!(c0 == R.one())) {
            const auto c0inv = R.inverse(c0);
            std::vector<QuotElem> gens;
            for (const auto& g : C.generators()) gens.push_back(R.mul(c0inv, g));
            M = RankCode::from_generators(C.ring_ptr(), gens, C.k_degree());
        }
        normalized = true;
    }
    const gf::Matrix H = M.space().equations();
    std::vector<gf::Matrix> left_sys, right_sys, cen_sys;
    for (const auto& c : M.generators()) {
        const auto L = fp_operator(R, c, true), Rc = fp_operator(R, c, false);
        left_sys.push_back(H * Rc);
        right_sys.push_back(H * L);
        cen_sys.push_back(Rc - L);
    }
    auto both = left_sys;
    both.insert(both.end(), cen_sys.begin(), cen_sys.end());

    InvariantReport rep{NuclearParameters{}, M, normalized, {}, {}, {}, {}};
    rep.left = kernel_elements(R, stack(fp, left_sys, N));
    rep.right = kernel_elements(R, stack(fp, right_sys, N));
    rep.centraliser = kernel_elements(R, stack(fp, cen_sys, N));
    rep.centre = kernel_elements(R, stack(fp, both, N));
    rep.params.p = R.tower().p();
    rep.params.exps = {M.dimension(), rep.left.size(), rep.right.size(), rep.centraliser.size(), rep.centre.size()};
    return rep;
}

bool field_certificate(const QuotRing& ring, const std::vector<QuotElem>& basis, std::uint64_t budget) {
    if (basis.empty()) return false;
    gf::Subspace S(ring.tower().prime(), ring.fp_dim());
    for (const auto& b : basis) S.insert(ring.coords(b));
    if (!S.contains(ring.coords(ring.one()))) return false;
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!S.contains(ring.coords(ring.mul(a, b)))) return false;
    checked_power(ring.tower().p(), S.dimension(), budget);
    std::vector<QuotElem> independent;
    for (const auto& row : S.basis()) independent.push_back(ring.from_coords(row));
    bool ok = true;
    walk_span(ring, independent, [&](const QuotElem& c) {
        if (!c.is_zero() && !ring.is_unit(c)) ok = false;
        return ok;
    });
    return ok;
}

// ---------------------------------------------------------------------------

void write_code(std::ostream& os, const RankCode& C) {
    const auto& R = C.ring();
    const auto& t = R.tower();
    os << "skewlab-code v1\n";
    os << "tower: " << t.header() << "\n";
    os << "moduli: " << t.moduli_line() << "\n";
    os << "F: " << R.F().to_text(t) << "\n";
    os << "K: " << C.k_degree() << "\n";
    for (const auto& g : C.generators()) os << R.to_text(g) << "\n";
}

RankCode read_code(std::istream& is) {
    std::string line;
    auto next = [&](const std::string& key) {
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) break;
        }
        if (!is && line.empty()) throw Error(ErrorCode::ParseError, "unexpected end of code file");
        if (key.empty()) return line;
        if (line.rfind(key, 0) != 0) throw Error(ErrorCode::ParseError, "expected '" + key + "' line, got: " + line);
        return line.substr(key.size());
    };
    if (next("") != "skewlab-code v1") throw Error(ErrorCode::ParseError, "not a skewlab code file");
    const auto hdr = gf::parse_digits(next("tower: "));
    if (hdr.size() != 5) throw Error(ErrorCode::ParseError, "tower line needs p,e,n,s,j");
    auto tower = std::make_shared<const gf::FieldTower>(hdr[0], hdr[1], hdr[2], hdr[3], hdr[4]);
    if (next("moduli: ") != tower->moduli_line()) throw Error(ErrorCode::ParseError, "moduli do not match this build");
    const auto F = skew::parse_center_poly(*tower, next("F: "));
    const auto K = gf::parse_digits(next("K: "));
    if (K.size() != 1) throw Error(ErrorCode::ParseError, "bad K line");
    auto ring = std::make_shared<const QuotRing>(tower, F);
    std::vector<QuotElem> gens;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        gens.push_back(ring->parse(line));
    }
    return RankCode::from_generators(ring, gens, K[0]);
}

}  // namespace skewlab::code
