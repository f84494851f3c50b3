#pragma once

/*
 * Finite field arithmetic for the tower F_p ⊆ F_q ⊆ F_{q^n} together with the
 * side field F_{q^s}.
 *
 * Every field is F_p[t]/(m(t)) for a monic irreducible m of degree d. An
 * element is stored as a packed index: the coefficient vector (c_0, ..., c_{d-1})
 * read as base-p digits, c_0 least significant. Multiplication goes through
 * log/exp tables, so fields are limited to kMaxFieldSize elements.
 *
 * Moduli are the lexicographically least monic irreducible polynomials, where
 * coefficient tuples (c_0, c_1, ...) are compared as integer tuples starting at
 * c_0. Subfield embeddings send the generator t to the least root (same order)
 * of its modulus in the larger field.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skewlab/error.hpp"

namespace skewlab::gf {

using Elem = std::uint32_t;
using Digits = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

class Field {
public:
    /// `modulus` is low-degree-first, monic, irreducible over F_p.
    Field(std::uint32_t p, Digits modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint32_t size() const { return size_; }
    const Digits& modulus() const { return modulus_; }

    static constexpr Elem zero() { return 0; }
    static constexpr Elem one() { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;

    /// a^{p^k}; k may be any integer, taken modulo the degree.
    Elem frob(Elem a, std::int64_t k) const;

    /// The prime-field scalar c·1.
    Elem scalar(std::uint32_t c) const { return c % p_; }
    /// The class of t^i, i < degree.
    Elem monomial(unsigned i) const;

    Digits digits(Elem a) const;
    std::uint32_t digit(Elem a, unsigned i) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;

    /// Relative trace / norm down to the subfield of F_p-degree `sub` (sub | degree).
    /// The result is returned as an element of this field lying in the subfield.
    Elem trace(Elem a, unsigned sub) const;
    Elem norm(Elem a, unsigned sub) const;
    bool in_subfield(Elem a, unsigned sub) const { return frob(a, sub) == a; }

    /// Absolute trace to F_p as an integer in [0, p).
    std::uint32_t absolute_trace(Elem a) const { return trace(a, 1); }

    /// True iff a precedes b when coefficient tuples are compared from c_0 up.
    bool lex_less(Elem a, Elem b) const;
    /// All elements in lex order.
    std::vector<Elem> lex_order() const;

    Elem primitive() const { return primitive_; }

    std::string to_string(Elem a) const;

private:
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_;
    unsigned degree_;
    std::uint32_t size_;
    Digits modulus_;
    Elem primitive_ = 1;
    std::vector<std::uint32_t> pow_p_;         // p^i
    std::vector<Elem> exp_;                    // 2(size-1) entries
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;     // size*size, small odd p only
    std::vector<std::vector<Elem>> frob_;      // frob_[k][a] = a^{p^k}
};

// ---------------------------------------------------------------------------
// Dense commutative polynomials over a Field (low degree first).

using Poly = std::vector<Elem>;

void poly_trim(Poly& f);
Poly poly_mul(const Field& k, const Poly& f, const Poly& g);
/// Remainder and quotient of f by a nonzero g.
std::pair<Poly, Poly> poly_divmod(const Field& k, const Poly& f, const Poly& g);
Elem poly_eval(const Field& k, const Poly& f, Elem x);
/// Exhaustive trial division by monic polynomials of degree ≤ deg/2.
bool poly_is_irreducible(const Field& k, const Poly& f);
/// Lexicographically least monic irreducible polynomial of degree d over k,
/// optionally requiring a nonzero constant term.
Poly lex_least_irreducible(const Field& k, unsigned d, bool nonzero_constant = false);

// ---------------------------------------------------------------------------

enum class Level { prime, mid, big, ef };

std::string_view level_name(Level l);
Level parse_level(std::string_view s);

class FieldTower {
public:
    /// q = p^e; F_{q^n} carries σ = y ↦ y^{q^j}; F_{q^s} is the side field.
    FieldTower(std::uint32_t p, unsigned e, unsigned n, unsigned s, unsigned j = 1);

    std::uint32_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned n() const { return n_; }
    unsigned s() const { return s_; }
    unsigned j() const { return j_; }
    std::uint64_t q() const;

    const Field& field(Level l) const;
    const Field& prime() const { return *prime_; }
    const Field& mid() const { return *mid_; }
    const Field& big() const { return *big_; }
    const Field& ef() const { return *ef_; }

    unsigned degree(Level l) const { return field(l).degree(); }
    bool is_subfield(Level sub, Level sup) const;

    /// Embedding along prime ⊆ mid ⊆ big and mid ⊆ ef (identity when equal).
    Elem embed(Level from, Level to, Elem a) const;
    /// Inverse of embed; throws NotASubfield when a is outside the image.
    Elem restrict(Level from, Level to, Elem a) const;

    /// σ^i(a) = a^{q^{j·i mod n}} on F_{q^n}.
    Elem sigma(Elem a, std::int64_t i) const;
    /// Exponent k with σ^i = (y ↦ y^{p^k}), 0 ≤ k < e·n.
    unsigned sigma_p_exponent(std::int64_t i) const;

    bool operator==(const FieldTower& o) const {
        return p_ == o.p_ && e_ == o.e_ && n_ == o.n_ && s_ == o.s_ && j_ == o.j_;
    }

    /// `p,e,n,s,j`
    std::string header() const;
    /// Moduli of big, mid and ef in digit form.
    std::string moduli_line() const;

private:
    std::uint32_t p_;
    unsigned e_, n_, s_, j_;
    std::unique_ptr<Field> prime_, mid_, big_, ef_;
    std::vector<Elem> mid_to_big_, mid_to_ef_;
};

/// An element tagged with its field level, used at API boundaries.
struct Element {
    const FieldTower* tower = nullptr;
    Level level = Level::big;
    Elem value = 0;

    const Field& field() const { return tower->field(level); }
    Digits digits() const { return field().digits(value); }
    bool is_zero() const { return value == 0; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.tower == b.tower && a.level == b.level && a.value == b.value;
    }
};

enum class ArithOp { add, sub, mul, div, inv, pow };

/// `b` is ignored for inv; for pow the exponent is `exponent`.
Element field_arith(const Element& a, const Element& b, ArithOp op, std::int64_t exponent = 0);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator/(const Element& a, const Element& b);
Element inverse(const Element& a);
Element pow(const Element& a, std::int64_t e);

/// σ^i(a) for a at level big.
Element frobenius(const Element& a, std::int64_t i);

enum class TraceKind { trace, norm };
/// Relative trace or norm from a's level down to `to`, returned at level `to`.
Element trace_norm(const Element& a, Level to, TraceKind kind);

/// Square test in F_q. Always true in characteristic 2.
bool is_square(const Element& a);

/// Text form `level:d0,d1,...` (digits low first).
std::string to_text(const Element& a);
Element parse_element(const FieldTower& tower, std::string_view text);
std::string digits_text(const Digits& d);
Digits parse_digits(std::string_view text);

}  // namespace skewlab::gf
