#include "skewlab/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewlab {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::NotASubfield: return "NotASubfield";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::NoDivisorFound: return "NoDivisorFound";
        case ErrorCode::ScaleTooLarge: return "ScaleTooLarge";
        case ErrorCode::NoInvertibleSolution: return "NoInvertibleSolution";
        case ErrorCode::NoUnitSolution: return "NoUnitSolution";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NoInvertibleCodeword: return "NoInvertibleCodeword";
        case ErrorCode::InvalidEta: return "InvalidEta";
        case ErrorCode::InvalidGamma: return "InvalidGamma";
        case ErrorCode::EvenQ: return "EvenQ";
        case ErrorCode::OddN: return "OddN";
        case ErrorCode::MismatchFound: return "MismatchFound";
        case ErrorCode::OutOfTheoremRange: return "OutOfTheoremRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace skewlab

namespace skewlab::gf {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t m) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

Field::Field(std::uint32_t p, Digits modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw Error(ErrorCode::InvalidArgument, "characteristic must be prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
    std::uint64_t sz = 1;
    pow_p_.assign(degree_ + 1, 1);
    for (unsigned i = 0; i < degree_; ++i) {
        sz *= p_;
        pow_p_[i + 1] = static_cast<std::uint32_t>(std::min<std::uint64_t>(sz, UINT32_MAX));
        if (sz > kMaxFieldSize)
            throw Error(ErrorCode::ScaleTooLarge, "field of size > " + std::to_string(kMaxFieldSize));
    }
    size_ = static_cast<std::uint32_t>(sz);

    if (p_ != 2 && size_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(size_) * size_);
        for (Elem a = 0; a < size_; ++a) {
            for (Elem b = 0; b < size_; ++b) {
                Elem r = 0;
                for (unsigned i = 0; i < degree_; ++i)
                    r += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
                add_table_[static_cast<std::size_t>(a) * size_ + b] = static_cast<std::uint16_t>(r);
            }
        }
    }

    // Primitive element by order test, then log/exp tables.
    const std::uint32_t order = size_ - 1;
    if (order > 1) {
        const auto factors = prime_factors(order);
        auto slow_pow = [&](Elem a, std::uint64_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        primitive_ = 0;
        for (Elem g = 2; g < size_ && primitive_ == 0; ++g) {
            bool ok = slow_pow(g, order) == 1;
            for (auto r : factors) ok = ok && slow_pow(g, order / r) != 1;
            if (ok) primitive_ = g;
        }
        if (primitive_ == 0) throw Error(ErrorCode::InvalidArgument, "modulus is not irreducible");
    }
    exp_.assign(2 * static_cast<std::size_t>(std::max<std::uint32_t>(order, 1)), 1);
    log_.assign(size_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, primitive_);
    }
    if (order > 0 && cur != 1) throw Error(ErrorCode::InvalidArgument, "modulus is not irreducible");
    for (std::uint32_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - std::max<std::uint32_t>(order, 1)];

    frob_.resize(degree_);
    frob_[0].resize(size_);
    std::iota(frob_[0].begin(), frob_[0].end(), 0u);
    for (unsigned k = 1; k < degree_; ++k) {
        frob_[k].resize(size_);
        for (Elem a = 0; a < size_; ++a) frob_[k][a] = pow(frob_[k - 1][a], p_);
    }
}

std::uint32_t Field::digit(Elem a, unsigned i) const {
    return (a / pow_p_[i]) % p_;
}

Digits Field::digits(Elem a) const {
    Digits d(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() > degree_) throw Error(ErrorCode::LevelMismatch, "too many digits for field");
    Elem r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) r += (d[i] % p_) * pow_p_[i];
    return r;
}

Elem Field::monomial(unsigned i) const {
    if (i >= degree_) throw Error(ErrorCode::InvalidArgument, "monomial index out of range");
    return pow_p_[i];
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    Elem r = 0;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((p_ - a % p_) % p_) * pow_p_[i];
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = size_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (static_cast<std::uint64_t>(e) % order)) % order];
}

Elem Field::frob(Elem a, std::int64_t k) const {
    const auto d = static_cast<std::int64_t>(degree_);
    return frob_[static_cast<std::size_t>(((k % d) + d) % d)][a];
}

Elem Field::slow_mul(Elem a, Elem b) const {
    const Digits da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * degree_, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned k = 0; k < degree_; ++k) prod[i + k] = (prod[i + k] + da[i] * db[k]) % p_;
    for (unsigned top = 2 * degree_ - 1; top >= degree_; --top) {
        const std::uint32_t c = prod[top];
        if (c == 0) continue;
        prod[top] = 0;
        for (unsigned i = 0; i < degree_; ++i)
            prod[top - degree_ + i] = (prod[top - degree_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Elem r = 0;
    for (unsigned i = 0; i < degree_; ++i) r += prod[i] * pow_p_[i];
    return r;
}

Elem Field::trace(Elem a, unsigned sub) const {
    if (sub == 0 || degree_ % sub != 0) throw Error(ErrorCode::NotASubfield, "subfield degree must divide field degree");
    Elem r = 0;
    for (unsigned i = 0; i < degree_ / sub; ++i) r = add(r, frob(a, static_cast<std::int64_t>(sub) * i));
    return r;
}

Elem Field::norm(Elem a, unsigned sub) const {
    if (sub == 0 || degree_ % sub != 0) throw Error(ErrorCode::NotASubfield, "subfield degree must divide field degree");
    Elem r = 1;
    for (unsigned i = 0; i < degree_ / sub; ++i) r = mul(r, frob(a, static_cast<std::int64_t>(sub) * i));
    return r;
}

bool Field::lex_less(Elem a, Elem b) const {
    for (unsigned i = 0; i < degree_; ++i) {
        const auto da = digit(a, i), db = digit(b, i);
        if (da != db) return da < db;
    }
    return false;
}

std::vector<Elem> Field::lex_order() const {
    std::vector<Elem> out(size_);
    std::iota(out.begin(), out.end(), 0u);
    std::sort(out.begin(), out.end(), [this](Elem a, Elem b) { return lex_less(a, b); });
    return out;
}

std::string Field::to_string(Elem a) const { return digits_text(digits(a)); }

// ---------------------------------------------------------------------------

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Field& k, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& k, const Poly& f, const Poly& g) {
    Poly gg = g;
    poly_trim(gg);
    if (gg.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Poly r = f;
    poly_trim(r);
    if (r.size() < gg.size()) return {Poly{}, r};
    Poly quo(r.size() - gg.size() + 1, 0);
    const Elem lead_inv = k.inv(gg.back());
    while (r.size() >= gg.size()) {
        const std::size_t shift = r.size() - gg.size();
        const Elem c = k.mul(r.back(), lead_inv);
        quo[shift] = c;
        for (std::size_t i = 0; i < gg.size(); ++i) r[shift + i] = k.sub(r[shift + i], k.mul(c, gg[i]));
        poly_trim(r);
    }
    poly_trim(quo);
    return {quo, r};
}

Elem poly_eval(const Field& k, const Poly& f, Elem x) {
    Elem r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
    return r;
}

bool poly_is_irreducible(const Field& k, const Poly& f_in) {
    Poly f = f_in;
    poly_trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    const std::uint64_t q = k.size();
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(v % q);
                v /= q;
            }
            g[d] = 1;
            if (poly_divmod(k, f, g).second.empty()) return false;
        }
    }
    return true;
}

Poly lex_least_irreducible(const Field& k, unsigned d, bool nonzero_constant) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    const auto order = k.lex_order();
    const std::uint64_t q = k.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    // idx enumerates (c_0, ..., c_{d-1}) with c_0 most significant.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(d + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = d; i-- > 0;) {
            f[i] = order[v % q];
            v /= q;
        }
        f[d] = 1;
        if (nonzero_constant && f[0] == 0) continue;
        if (poly_is_irreducible(k, f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

std::string_view level_name(Level l) {
    switch (l) {
        case Level::prime: return "prime";
        case Level::mid: return "mid";
        case Level::big: return "big";
        case Level::ef: return "ef";
    }
    return "?";
}

Level parse_level(std::string_view s) {
    if (s == "prime") return Level::prime;
    if (s == "mid") return Level::mid;
    if (s == "big") return Level::big;
    if (s == "ef") return Level::ef;
    throw Error(ErrorCode::ParseError, "unknown level tag '" + std::string(s) + "'");
}

namespace {

Elem least_root(const Field& target, const Digits& modulus) {
    Poly f(modulus.begin(), modulus.end());
    for (auto& c : f) c = target.scalar(c);
    for (Elem r : target.lex_order())
        if (poly_eval(target, f, r) == 0) return r;
    throw Error(ErrorCode::NotASubfield, "modulus has no root in target field");
}

std::vector<Elem> embedding_table(const Field& from, const Field& to) {
    const Elem root = least_root(to, from.modulus());
    std::vector<Elem> table(from.size());
    for (Elem a = 0; a < from.size(); ++a) {
        const Digits d = from.digits(a);
        Elem r = 0, pw = 1;
        for (unsigned i = 0; i < from.degree(); ++i) {
            r = to.add(r, to.mul(to.scalar(d[i]), pw));
            pw = to.mul(pw, root);
        }
        table[a] = r;
    }
    return table;
}

}  // namespace

FieldTower::FieldTower(std::uint32_t p, unsigned e, unsigned n, unsigned s, unsigned j)
    : p_(p), e_(e), n_(n), s_(s), j_(j) {
    if (e == 0 || n == 0 || s == 0) throw Error(ErrorCode::InvalidArgument, "e, n, s must be positive");
    if (j == 0 || std::gcd(j, n) != 1) throw Error(ErrorCode::InvalidArgument, "need gcd(j, n) = 1");
    prime_ = std::make_unique<Field>(p, Digits{0, 1});
    auto modulus_of = [&](unsigned d) {
        const Poly m = lex_least_irreducible(*prime_, d);
        return Digits(m.begin(), m.end());
    };
    mid_ = std::make_unique<Field>(p, modulus_of(e));
    big_ = std::make_unique<Field>(p, modulus_of(e * n));
    ef_ = std::make_unique<Field>(p, modulus_of(e * s));
    mid_to_big_ = embedding_table(*mid_, *big_);
    mid_to_ef_ = embedding_table(*mid_, *ef_);
}

std::uint64_t FieldTower::q() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e_; ++i) q *= p_;
    return q;
}

const Field& FieldTower::field(Level l) const {
    switch (l) {
        case Level::prime: return *prime_;
        case Level::mid: return *mid_;
        case Level::big: return *big_;
        case Level::ef: return *ef_;
    }
    return *big_;
}

bool FieldTower::is_subfield(Level sub, Level sup) const {
    if (sub == sup || sub == Level::prime) return true;
    return sub == Level::mid && (sup == Level::big || sup == Level::ef);
}

Elem FieldTower::embed(Level from, Level to, Elem a) const {
    if (!is_subfield(from, to)) throw Error(ErrorCode::NotASubfield, "no embedding between these levels");
    if (from == to) return a;
    if (from == Level::prime) return field(to).scalar(a);
    return to == Level::big ? mid_to_big_[a] : mid_to_ef_[a];
}

Elem FieldTower::restrict(Level from, Level to, Elem a) const {
    if (!is_subfield(to, from)) throw Error(ErrorCode::NotASubfield, "target is not a subfield");
    if (from == to) return a;
    if (to == Level::prime) {
        if (a >= p_) throw Error(ErrorCode::NotASubfield, "element is not in the prime field");
        return a;
    }
    const auto& table = from == Level::big ? mid_to_big_ : mid_to_ef_;
    const auto it = std::find(table.begin(), table.end(), a);
    if (it == table.end()) throw Error(ErrorCode::NotASubfield, "element is not in F_q");
    return static_cast<Elem>(it - table.begin());
}

unsigned FieldTower::sigma_p_exponent(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(n_);
    const std::int64_t r = ((static_cast<std::int64_t>(j_) * (i % n)) % n + n) % n;
    return static_cast<unsigned>(r) * e_;
}

Elem FieldTower::sigma(Elem a, std::int64_t i) const { return big_->frob(a, sigma_p_exponent(i)); }

std::string FieldTower::header() const {
    std::ostringstream os;
    os << p_ << ',' << e_ << ',' << n_ << ',' << s_ << ',' << j_;
    return os.str();
}

std::string FieldTower::moduli_line() const {
    return digits_text(big_->modulus()) + " | " + digits_text(mid_->modulus()) + " | " +
           digits_text(ef_->modulus());
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const Element& a, const Element& b) {
    if (a.tower != b.tower || a.level != b.level)
        throw Error(ErrorCode::LevelMismatch, "operands live in different fields");
}

}  // namespace

Element field_arith(const Element& a, const Element& b, ArithOp op, std::int64_t exponent) {
    const Field& k = a.field();
    Element r = a;
    switch (op) {
        case ArithOp::add: require_same(a, b); r.value = k.add(a.value, b.value); break;
        case ArithOp::sub: require_same(a, b); r.value = k.sub(a.value, b.value); break;
        case ArithOp::mul: require_same(a, b); r.value = k.mul(a.value, b.value); break;
        case ArithOp::div: require_same(a, b); r.value = k.div(a.value, b.value); break;
        case ArithOp::inv: r.value = k.inv(a.value); break;
        case ArithOp::pow:
            if (a.value == 0 && exponent < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
            r.value = k.pow(a.value, exponent);
            break;
    }
    return r;
}

Element operator+(const Element& a, const Element& b) { return field_arith(a, b, ArithOp::add); }
Element operator-(const Element& a, const Element& b) { return field_arith(a, b, ArithOp::sub); }
Element operator*(const Element& a, const Element& b) { return field_arith(a, b, ArithOp::mul); }
Element operator/(const Element& a, const Element& b) { return field_arith(a, b, ArithOp::div); }
Element inverse(const Element& a) { return field_arith(a, a, ArithOp::inv); }
Element pow(const Element& a, std::int64_t e) { return field_arith(a, a, ArithOp::pow, e); }

Element frobenius(const Element& a, std::int64_t i) {
    if (a.level != Level::big) throw Error(ErrorCode::LevelMismatch, "frobenius acts on F_{q^n}");
    return Element{a.tower, a.level, a.tower->sigma(a.value, i)};
}

Element trace_norm(const Element& a, Level to, TraceKind kind) {
    const FieldTower& t = *a.tower;
    if (!t.is_subfield(to, a.level)) throw Error(ErrorCode::NotASubfield, "target is not a subfield");
    const Field& k = a.field();
    const unsigned sub = t.degree(to);
    const Elem v = kind == TraceKind::trace ? k.trace(a.value, sub) : k.norm(a.value, sub);
    return Element{a.tower, to, t.restrict(a.level, to, v)};
}

bool is_square(const Element& a) {
    if (a.level != Level::mid) throw Error(ErrorCode::LevelMismatch, "square test is over F_q");
    const Field& k = a.field();
    if (k.characteristic() == 2 || a.value == 0) return true;
    return k.pow(a.value, (static_cast<std::int64_t>(k.size()) - 1) / 2) == 1;
}

std::string digits_text(const Digits& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

Digits parse_digits(std::string_view text) {
    Digits d;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error(ErrorCode::ParseError, "empty digit in '" + std::string(text) + "'");
        for (char c : cur)
            if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad digit '" + cur + "'");
        d.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
        cur.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return d;
}

std::string to_text(const Element& a) {
    return std::string(level_name(a.level)) + ":" + digits_text(a.digits());
}

Element parse_element(const FieldTower& tower, std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "element needs a level tag: " + std::string(text));
    const Level l = parse_level(text.substr(0, colon));
    const Digits d = parse_digits(text.substr(colon + 1));
    const Field& k = tower.field(l);
    for (auto v : d)
        if (v >= k.characteristic()) throw Error(ErrorCode::ParseError, "digit out of range in " + std::string(text));
    return Element{&tower, l, k.from_digits(d)};
}

}  // namespace skewlab::gf
