#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/gf.hpp"

namespace skewlab::skew {

using gf::Elem;

/// Element of R = F_{q^n}[x; σ], coefficients on the left, low degree first.
/// Never carries trailing zeros, so the zero polynomial has no coefficients.
struct SkewPoly {
    std::vector<Elem> coeffs;

    SkewPoly() = default;
    explicit SkewPoly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(); }

    bool is_zero() const { return coeffs.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.size() - 1;
    }
    Elem lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
    Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

struct DivResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// d = u·f + v·g with d monic.
struct Bezout {
    SkewPoly d;
    SkewPoly u;
    SkewPoly v;
};

class SkewRing {
public:
    explicit SkewRing(std::shared_ptr<const gf::FieldTower> tower) : tower_(std::move(tower)) {}

    const gf::FieldTower& tower() const { return *tower_; }
    const std::shared_ptr<const gf::FieldTower>& tower_ptr() const { return tower_; }
    const gf::Field& coeff_field() const { return tower_->big(); }

    SkewPoly monomial(Elem c, std::size_t i) const;
    SkewPoly constant(Elem c) const { return monomial(c, 0); }
    SkewPoly x() const { return monomial(1, 1); }

    SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly neg(const SkewPoly& f) const;
    SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
    /// c·f, i.e. left multiplication by a constant.
    SkewPoly scale_left(Elem c, const SkewPoly& f) const;

    /// f = q·g + r, deg r < deg g.
    DivResult right_divide(const SkewPoly& f, const SkewPoly& g) const;
    /// f = g·q + r, deg r < deg g.
    DivResult left_divide(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly right_rem(const SkewPoly& f, const SkewPoly& g) const { return right_divide(f, g).remainder; }

    /// Monic generator d of Rf + Rg with Bezout coefficients.
    Bezout gcrd_bezout(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) const { return gcrd_bezout(f, g).d; }
    /// Monic generator of Rf ∩ Rg.
    SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) const;

    /// Left-multiplies by lc^{-1}.
    SkewPoly make_monic(const SkewPoly& f) const;

    /// Commutes with x and with a primitive element of F_{q^n}.
    bool is_central(const SkewPoly& f) const;

private:
    std::shared_ptr<const gf::FieldTower> tower_;
};

/// Monic irreducible F ∈ F_q[y] of degree s with F_0 ≠ 0 (coefficients at level mid).
class CenterPoly {
public:
    /// Validates monicity, F_0 ≠ 0, and irreducibility over F_q.
    CenterPoly(const gf::FieldTower& tower, std::vector<Elem> coeffs);

    /// Default choice for degree s: y − 1 when s = 1, otherwise the
    /// lexicographically least monic irreducible with nonzero constant term.
    static CenterPoly standard(const gf::FieldTower& tower);

    const std::vector<Elem>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    Elem constant_term() const { return coeffs_[0]; }

    /// Coefficients' digits joined by '/': the ring tag used in text forms.
    std::string tag(const gf::FieldTower& tower) const;
    std::string to_text(const gf::FieldTower& tower) const;

    friend bool operator==(const CenterPoly&, const CenterPoly&) = default;

private:
    std::vector<Elem> coeffs_;
};

/// Σ F_i x^{ni} as an element of R.
SkewPoly center_eval(const SkewRing& ring, const CenterPoly& F);

/// `skew: c0; c1; ...` with big-level element text forms.
std::string to_text(const gf::FieldTower& tower, const SkewPoly& f);
SkewPoly parse_skew(const gf::FieldTower& tower, std::string_view text);

/// Parses `mid:..; mid:..; ...` or, when e = 1, a bare digit list `c0,c1,...`.
CenterPoly parse_center_poly(const gf::FieldTower& tower, std::string_view text);

}  // namespace skewlab::skew
