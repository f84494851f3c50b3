#include "skewlab/skew.hpp"

#include <algorithm>

namespace skewlab::skew {

namespace {

std::string_view trim_ws(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim_ws(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

SkewPoly SkewRing::monomial(Elem c, std::size_t i) const {
    std::vector<Elem> v(i + 1, 0);
    v[i] = c;
    return SkewPoly(std::move(v));
}

SkewPoly SkewRing::add(const SkewPoly& f, const SkewPoly& g) const {
    const auto& k = coeff_field();
    std::vector<Elem> r(std::max(f.coeffs.size(), g.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.add(f.coeff(i), g.coeff(i));
    return SkewPoly(std::move(r));
}

SkewPoly SkewRing::neg(const SkewPoly& f) const {
    const auto& k = coeff_field();
    SkewPoly r = f;
    for (auto& c : r.coeffs) c = k.neg(c);
    return r;
}

SkewPoly SkewRing::sub(const SkewPoly& f, const SkewPoly& g) const { return add(f, neg(g)); }

SkewPoly SkewRing::mul(const SkewPoly& f, const SkewPoly& g) const {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& k = coeff_field();
    std::vector<Elem> r(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const Elem a = f.coeffs[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            const Elem b = g.coeffs[j];
            if (b == 0) continue;
            r[i + j] = k.add(r[i + j], k.mul(a, tower_->sigma(b, static_cast<std::int64_t>(i))));
        }
    }
    return SkewPoly(std::move(r));
}

SkewPoly SkewRing::scale_left(Elem c, const SkewPoly& f) const {
    const auto& k = coeff_field();
    SkewPoly r = f;
    for (auto& a : r.coeffs) a = k.mul(c, a);
    r.trim();
    return r;
}

SkewPoly SkewRing::make_monic(const SkewPoly& f) const {
    if (f.is_zero()) return f;
    return scale_left(coeff_field().inv(f.lead()), f);
}

DivResult SkewRing::right_divide(const SkewPoly& f, const SkewPoly& g) const {
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by the zero polynomial");
    const auto& k = coeff_field();
    const std::size_t dg = *g.degree();
    std::vector<Elem> r = f.coeffs;
    if (r.size() <= dg) return {SkewPoly{}, f};
    std::vector<Elem> quo(r.size() - dg, 0);
    for (std::size_t top = r.size(); top-- > dg;) {
        if (r[top] == 0) continue;
        const std::size_t i = top - dg;
        const Elem c = k.div(r[top], tower_->sigma(g.lead(), static_cast<std::int64_t>(i)));
        quo[i] = c;
        for (std::size_t l = 0; l <= dg; ++l)
            r[i + l] = k.sub(r[i + l], k.mul(c, tower_->sigma(g.coeffs[l], static_cast<std::int64_t>(i))));
    }
    r.resize(dg);
    return {SkewPoly(std::move(quo)), SkewPoly(std::move(r))};
}

DivResult SkewRing::left_divide(const SkewPoly& f, const SkewPoly& g) const {
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "left division by the zero polynomial");
    const auto& k = coeff_field();
    const std::size_t dg = *g.degree();
    const auto sdg = static_cast<std::int64_t>(dg);
    std::vector<Elem> r = f.coeffs;
    if (r.size() <= dg) return {SkewPoly{}, f};
    std::vector<Elem> quo(r.size() - dg, 0);
    for (std::size_t top = r.size(); top-- > dg;) {
        if (r[top] == 0) continue;
        const std::size_t i = top - dg;
        const Elem c = tower_->sigma(k.div(r[top], g.lead()), -sdg);
        quo[i] = c;
        for (std::size_t l = 0; l <= dg; ++l)
            r[i + l] = k.sub(r[i + l], k.mul(g.coeffs[l], tower_->sigma(c, static_cast<std::int64_t>(l))));
    }
    r.resize(dg);
    return {SkewPoly(std::move(quo)), SkewPoly(std::move(r))};
}

Bezout SkewRing::gcrd_bezout(const SkewPoly& f, const SkewPoly& g) const {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcrd of two zero polynomials");
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = constant(1), v0{}, u1{}, v1 = constant(1);
    while (!r1.is_zero()) {
        auto [quo, rem] = right_divide(r0, r1);
        SkewPoly u2 = sub(u0, mul(quo, u1));
        SkewPoly v2 = sub(v0, mul(quo, v1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const Elem c = coeff_field().inv(r0.lead());
    return {scale_left(c, r0), scale_left(c, u0), scale_left(c, v0)};
}

SkewPoly SkewRing::lclm(const SkewPoly& f, const SkewPoly& g) const {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "lclm needs nonzero inputs");
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = constant(1), u1{};
    while (!r1.is_zero()) {
        auto [quo, rem] = right_divide(r0, r1);
        SkewPoly u2 = sub(u0, mul(quo, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // u1·f + v1·g = 0, and u1·f generates Rf ∩ Rg.
    return make_monic(mul(u1, f));
}

bool SkewRing::is_central(const SkewPoly& f) const {
    const SkewPoly w = constant(coeff_field().primitive());
    return mul(f, x()) == mul(x(), f) && mul(f, w) == mul(w, f);
}

// ---------------------------------------------------------------------------

CenterPoly::CenterPoly(const gf::FieldTower& tower, std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
    const auto& k = tower.mid();
    for (auto c : coeffs_)
        if (c >= k.size()) throw Error(ErrorCode::InvalidArgument, "coefficient outside F_q");
    if (coeffs_.size() < 2 || coeffs_.back() != 1)
        throw Error(ErrorCode::InvalidArgument, "F must be monic of degree >= 1");
    if (coeffs_[0] == 0) throw Error(ErrorCode::InvalidArgument, "F must have nonzero constant term");
    if (!gf::poly_is_irreducible(k, coeffs_)) throw Error(ErrorCode::InvalidArgument, "F must be irreducible over F_q");
}

CenterPoly CenterPoly::standard(const gf::FieldTower& tower) {
    const auto& k = tower.mid();
    if (tower.s() == 1) return CenterPoly(tower, {k.neg(1), 1});
    return CenterPoly(tower, gf::lex_least_irreducible(k, tower.s(), true));
}

std::string CenterPoly::tag(const gf::FieldTower& tower) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += '/';
        out += tower.mid().to_string(coeffs_[i]);
    }
    return out;
}

std::string CenterPoly::to_text(const gf::FieldTower& tower) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += "; ";
        out += gf::to_text(gf::Element{&tower, gf::Level::mid, coeffs_[i]});
    }
    return out;
}

SkewPoly center_eval(const SkewRing& ring, const CenterPoly& F) {
    const auto& t = ring.tower();
    std::vector<Elem> c(t.n() * F.degree() + 1, 0);
    for (std::size_t i = 0; i <= F.degree(); ++i) c[t.n() * i] = t.embed(gf::Level::mid, gf::Level::big, F.coeffs()[i]);
    return SkewPoly(std::move(c));
}

std::string to_text(const gf::FieldTower& tower, const SkewPoly& f) {
    std::string out = "skew: ";
    if (f.is_zero()) return out + gf::to_text(gf::Element{&tower, gf::Level::big, 0});
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) out += "; ";
        out += gf::to_text(gf::Element{&tower, gf::Level::big, f.coeffs[i]});
    }
    return out;
}

SkewPoly parse_skew(const gf::FieldTower& tower, std::string_view text) {
    text = trim_ws(text);
    constexpr std::string_view prefix = "skew:";
    if (text.substr(0, prefix.size()) != prefix) throw Error(ErrorCode::ParseError, "expected 'skew:' prefix");
    std::vector<Elem> c;
    for (auto tok : split(text.substr(prefix.size()), ';')) {
        const auto e = gf::parse_element(tower, tok);
        if (e.level != gf::Level::big) throw Error(ErrorCode::LevelMismatch, "skew coefficients must be at level big");
        c.push_back(e.value);
    }
    return SkewPoly(std::move(c));
}

CenterPoly parse_center_poly(const gf::FieldTower& tower, std::string_view text) {
    text = trim_ws(text);
    std::vector<Elem> c;
    if (text.find(':') == std::string_view::npos) {
        if (tower.e() != 1) throw Error(ErrorCode::ParseError, "bare digit lists for F need e = 1");
        for (auto d : gf::parse_digits(text)) {
            if (d >= tower.p()) throw Error(ErrorCode::ParseError, "digit out of range in F");
            c.push_back(d);
        }
    } else {
        for (auto tok : split(text, ';')) {
            const auto e = gf::parse_element(tower, tok);
            if (e.level != gf::Level::mid) throw Error(ErrorCode::LevelMismatch, "F coefficients must be at level mid");
            c.push_back(e.value);
        }
    }
    return CenterPoly(tower, std::move(c));
}

}  // namespace skewlab::skew
