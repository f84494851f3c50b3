#include "skewlab/quot.hpp"

#include <algorithm>

namespace skewlab::quot {

bool QuotElem::is_zero() const {
    return std::all_of(rep.begin(), rep.end(), [](Elem c) { return c == 0; });
}

bool operator==(const QuotElem& a, const QuotElem& b) {
    if (a.ring != b.ring && !(a.ring && b.ring && *a.ring == *b.ring)) return false;
    return a.rep == b.rep;
}

QuotElem operator+(const QuotElem& a, const QuotElem& b) { return a.ring->add(a, b); }
QuotElem operator-(const QuotElem& a, const QuotElem& b) { return a.ring->sub(a, b); }
QuotElem operator*(const QuotElem& a, const QuotElem& b) { return a.ring->mul(a, b); }

QuotRing::QuotRing(std::shared_ptr<const gf::FieldTower> tower, CenterPoly F)
    : tower_(std::move(tower)), F_(std::move(F)), ring_(tower_) {
    const auto& t = *tower_;
    if (F_.degree() != t.s())
        throw Error(ErrorCode::InvalidArgument, "deg F must equal the tower's s");
    modulus_ = skew::center_eval(ring_, F_);
    dim_ = t.n() * t.s();
    for (std::size_t i = 0; i < t.s(); ++i)
        tail_.push_back(t.big().neg(t.embed(gf::Level::mid, gf::Level::big, F_.coeffs()[i])));

    // z = y^{-s} in F_q[y]/(F): y^{-1} = -F_0^{-1}(F_1 + F_2 y + ... + y^{s-1}).
    const auto& k = t.mid();
    const auto& f = F_.coeffs();
    const Elem c = k.neg(k.inv(f[0]));
    gf::Poly yinv(f.begin() + 1, f.end());
    for (auto& v : yinv) v = k.mul(c, v);
    gf::Poly zpoly{1};
    for (std::size_t i = 0; i < t.s(); ++i) zpoly = gf::poly_divmod(k, gf::poly_mul(k, zpoly, yinv), f).second;
    z_ = center_element(zpoly);
}

void QuotRing::require(const QuotElem& a) const {
    if (a.ring != this && !(a.ring && *a.ring == *this))
        throw Error(ErrorCode::RingMismatch, "element belongs to a different quotient ring");
    if (a.rep.size() != dim_) throw Error(ErrorCode::RingMismatch, "malformed representative");
}

void QuotRing::reduce_in_place(std::vector<Elem>& c) const {
    const auto& k = coeff_field();
    const std::size_t n = tower_->n();
    for (std::size_t d = c.size(); d-- > dim_;) {
        const Elem a = c[d];
        if (a == 0) continue;
        c[d] = 0;
        const std::size_t base = d - dim_;
        for (std::size_t i = 0; i < tail_.size(); ++i)
            if (tail_[i] != 0) c[base + n * i] = k.add(c[base + n * i], k.mul(a, tail_[i]));
    }
    c.resize(dim_, 0);
}

QuotElem QuotRing::reduce(const SkewPoly& f) const {
    std::vector<Elem> c = f.coeffs;
    reduce_in_place(c);
    return {this, std::move(c)};
}

QuotElem QuotRing::monomial(Elem c, std::size_t i) const {
    std::vector<Elem> v(std::max(i + 1, dim_), 0);
    v[i] = c;
    reduce_in_place(v);
    return {this, std::move(v)};
}

QuotElem QuotRing::center_element(const std::vector<Elem>& c) const {
    const auto& t = *tower_;
    std::vector<Elem> v(std::max(t.n() * c.size(), dim_), 0);
    for (std::size_t m = 0; m < c.size(); ++m) v[t.n() * m] = t.embed(gf::Level::mid, gf::Level::big, c[m]);
    reduce_in_place(v);
    return {this, std::move(v)};
}

QuotElem QuotRing::add(const QuotElem& a, const QuotElem& b) const {
    require(a);
    require(b);
    const auto& k = coeff_field();
    QuotElem r{this, a.rep};
    for (std::size_t i = 0; i < dim_; ++i) r.rep[i] = k.add(r.rep[i], b.rep[i]);
    return r;
}

QuotElem QuotRing::neg(const QuotElem& a) const {
    require(a);
    const auto& k = coeff_field();
    QuotElem r{this, a.rep};
    for (auto& c : r.rep) c = k.neg(c);
    return r;
}

QuotElem QuotRing::sub(const QuotElem& a, const QuotElem& b) const { return add(a, neg(b)); }

QuotElem QuotRing::mul(const QuotElem& a, const QuotElem& b) const {
    require(a);
    require(b);
    const auto& k = coeff_field();
    const auto& t = *tower_;
    std::vector<Elem> r(2 * dim_ - 1, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        const Elem ai = a.rep[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const Elem bj = b.rep[j];
            if (bj == 0) continue;
            r[i + j] = k.add(r[i + j], k.mul(ai, t.sigma(bj, static_cast<std::int64_t>(i))));
        }
    }
    reduce_in_place(r);
    return {this, std::move(r)};
}

QuotElem QuotRing::scale_left(Elem c, const QuotElem& a) const {
    require(a);
    const auto& k = coeff_field();
    QuotElem r{this, a.rep};
    for (auto& v : r.rep) v = k.mul(c, v);
    return r;
}

QuotElem QuotRing::pow(const QuotElem& a, std::uint64_t e) const {
    QuotElem result = one(), base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

QuotElem QuotRing::inverse(const QuotElem& a) const {
    require(a);
    if (a.is_zero()) throw Error(ErrorCode::ZeroDivisor, "zero has no inverse");
    const auto bz = ring_.gcrd_bezout(a.to_skew(), modulus_);
    if (bz.d != ring_.constant(1)) throw Error(ErrorCode::ZeroDivisor, "element is a zero divisor");
    return reduce(bz.u);
}

bool QuotRing::is_unit(const QuotElem& a) const {
    require(a);
    if (a.is_zero()) return false;
    return ring_.gcrd(a.to_skew(), modulus_) == ring_.constant(1);
}

bool QuotRing::is_central(const QuotElem& a) const {
    const QuotElem w = constant(coeff_field().primitive());
    return mul(a, x()) == mul(x(), a) && mul(a, w) == mul(w, a);
}

std::uint32_t QuotRing::epsilon(const QuotElem& a) const {
    require(a);
    return coeff_field().absolute_trace(a.rep[0]);
}

std::uint32_t QuotRing::form(const QuotElem& a, const QuotElem& b) const { return epsilon(mul(a, b)); }

gf::Vec QuotRing::coords(const QuotElem& a) const {
    require(a);
    const auto& k = coeff_field();
    const unsigned en = k.degree();
    gf::Vec v(fp_dim(), 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        Elem c = a.rep[i];
        for (unsigned m = 0; m < en; ++m) {
            v[i * en + m] = c % k.characteristic();
            c /= k.characteristic();
        }
    }
    return v;
}

QuotElem QuotRing::from_coords(const gf::Vec& v) const {
    if (v.size() != fp_dim()) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
    const auto& k = coeff_field();
    const unsigned en = k.degree();
    QuotElem r = zero();
    for (std::size_t i = 0; i < dim_; ++i)
        r.rep[i] = k.from_digits(std::span<const std::uint32_t>(v.data() + i * en, en));
    return r;
}

QuotElem QuotRing::basis(std::size_t idx) const {
    const unsigned en = coeff_field().degree();
    if (idx >= fp_dim()) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    QuotElem r = zero();
    r.rep[idx / en] = coeff_field().monomial(static_cast<unsigned>(idx % en));
    return r;
}

QuotElem QuotRing::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<Elem> dist(0, coeff_field().size() - 1);
    QuotElem r = zero();
    for (auto& c : r.rep) c = dist(rng);
    return r;
}

std::string QuotRing::to_text(const QuotElem& a) const {
    require(a);
    std::string out = "quot[" + tag() + "]: ";
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) out += "; ";
        out += gf::to_text(gf::Element{tower_.get(), gf::Level::big, a.rep[i]});
    }
    return out;
}

QuotElem QuotRing::parse(std::string_view text) const {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    const std::string head = "quot[" + tag() + "]:";
    if (text.substr(0, head.size()) != head)
        throw Error(ErrorCode::ParseError, "expected '" + head + "'");
    text.remove_prefix(head.size());
    QuotElem r = zero();
    std::size_t i = 0;
    while (true) {
        const auto pos = text.find(';');
        const auto tok = text.substr(0, pos);
        const auto e = gf::parse_element(*tower_, tok);
        if (e.level != gf::Level::big) throw Error(ErrorCode::LevelMismatch, "quot coefficients must be at level big");
        if (i >= dim_) throw Error(ErrorCode::ParseError, "too many coefficients");
        r.rep[i++] = e.value;
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return r;
}

// ---------------------------------------------------------------------------

CenterPoly reciprocal(const gf::FieldTower& tower, const CenterPoly& F) {
    const auto& k = tower.mid();
    const auto& f = F.coeffs();
    const std::size_t s = F.degree();
    const Elem c = k.inv(f[0]);
    std::vector<Elem> h(s + 1);
    for (std::size_t i = 0; i <= s; ++i) h[i] = k.mul(c, f[s - i]);
    return CenterPoly(tower, std::move(h));
}

ReciprocalPair reciprocal_pair(const gf::FieldTower& tower, const CenterPoly& F) {
    return {F, reciprocal(tower, F)};
}

QuotElem theta(const QuotElem& a, const QuotRing& target) {
    const QuotRing& src = *a.ring;
    src.require(a);
    if (!(src.tower() == target.tower()) || !(target.F() == reciprocal(src.tower(), src.F())))
        throw Error(ErrorCode::RingMismatch, "target ring is not the reciprocal ring");
    const auto& t = target.tower();
    const std::size_t d = target.dim();
    QuotElem tail = target.zero();
    for (std::size_t i = 1; i < d; ++i)
        tail.rep[d - i] = t.sigma(a.rep[i], -static_cast<std::int64_t>(i));
    QuotElem r = target.mul(target.central_z(), tail);
    r.rep[0] = t.big().add(r.rep[0], a.rep[0]);
    return r;
}

QuotElem theta_inv(const QuotElem& b, const QuotRing& target) { return theta(b, target); }

}  // namespace skewlab::quot
