#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "skewlab/linalg.hpp"
#include "skewlab/skew.hpp"

namespace skewlab::quot {

using gf::Elem;
using skew::CenterPoly;
using skew::SkewPoly;

class QuotRing;

/// A class in R_F, stored as its representative of degree < ns
/// (always exactly ns coefficients, zeros included).
struct QuotElem {
    const QuotRing* ring = nullptr;
    std::vector<Elem> rep;

    bool is_zero() const;
    SkewPoly to_skew() const { return SkewPoly(rep); }
};

bool operator==(const QuotElem& a, const QuotElem& b);
QuotElem operator+(const QuotElem& a, const QuotElem& b);
QuotElem operator-(const QuotElem& a, const QuotElem& b);
QuotElem operator*(const QuotElem& a, const QuotElem& b);

/// R_F = F_{q^n}[x;σ] / R F(x^n).
class QuotRing {
public:
    QuotRing(std::shared_ptr<const gf::FieldTower> tower, CenterPoly F);
    // Elements point back at their ring, so rings stay put.
    QuotRing(const QuotRing&) = delete;
    QuotRing& operator=(const QuotRing&) = delete;

    const gf::FieldTower& tower() const { return *tower_; }
    const std::shared_ptr<const gf::FieldTower>& tower_ptr() const { return tower_; }
    const skew::SkewRing& skew_ring() const { return ring_; }
    const CenterPoly& F() const { return F_; }
    /// F(x^n) in R.
    const SkewPoly& modulus() const { return modulus_; }
    const gf::Field& coeff_field() const { return tower_->big(); }

    /// ns
    std::size_t dim() const { return dim_; }
    /// ns·en, the F_p-dimension.
    std::size_t fp_dim() const { return dim_ * tower_->big().degree(); }
    std::string tag() const { return F_.tag(*tower_); }

    QuotElem zero() const { return {this, std::vector<Elem>(dim_, 0)}; }
    QuotElem one() const { return constant(1); }
    QuotElem constant(Elem c) const { return monomial(c, 0); }
    /// c·x^i reduced (any i).
    QuotElem monomial(Elem c, std::size_t i) const;
    QuotElem x() const { return monomial(1, 1); }
    QuotElem reduce(const SkewPoly& f) const;
    /// Σ c_m x^{nm} for c ∈ F_q[y] (coefficients at level mid): the image of E_F.
    QuotElem center_element(const std::vector<Elem>& c) const;

    QuotElem add(const QuotElem& a, const QuotElem& b) const;
    QuotElem sub(const QuotElem& a, const QuotElem& b) const;
    QuotElem neg(const QuotElem& a) const;
    QuotElem mul(const QuotElem& a, const QuotElem& b) const;
    QuotElem scale_left(Elem c, const QuotElem& a) const;
    QuotElem pow(const QuotElem& a, std::uint64_t k) const;
    /// Throws ZeroDivisor if gcrd(a, F(x^n)) ≠ 1.
    QuotElem inverse(const QuotElem& a) const;
    bool is_unit(const QuotElem& a) const;
    bool is_central(const QuotElem& a) const;

    /// The central element z(x^n) with z(x^n)·x^{ns} = 1.
    const QuotElem& central_z() const { return z_; }

    /// ε_F(a) = Tr_{q^n/p}(a_0).
    std::uint32_t epsilon(const QuotElem& a) const;
    /// ⟨a,b⟩_F = ε_F(ab).
    std::uint32_t form(const QuotElem& a, const QuotElem& b) const;

    /// Coordinates over F_p: index i·en + m is digit m of the x^i coefficient.
    gf::Vec coords(const QuotElem& a) const;
    QuotElem from_coords(const gf::Vec& v) const;
    /// The F_p-basis element t^m x^i with idx = i·en + m.
    QuotElem basis(std::size_t idx) const;

    QuotElem random(std::mt19937_64& rng) const;

    std::string to_text(const QuotElem& a) const;
    QuotElem parse(std::string_view text) const;

    void require(const QuotElem& a) const;

    bool operator==(const QuotRing& o) const { return *tower_ == *o.tower_ && F_ == o.F_; }

private:
    void reduce_in_place(std::vector<Elem>& c) const;

    std::shared_ptr<const gf::FieldTower> tower_;
    CenterPoly F_;
    skew::SkewRing ring_;
    SkewPoly modulus_;
    std::size_t dim_;
    std::vector<Elem> tail_;  // -F_i embedded in F_{q^n}, i < s
    QuotElem z_;
};

/// F̂ = F_0^{-1} y^s F(1/y).
CenterPoly reciprocal(const gf::FieldTower& tower, const CenterPoly& F);

struct ReciprocalPair {
    CenterPoly F;
    CenterPoly Fhat;
};
ReciprocalPair reciprocal_pair(const gf::FieldTower& tower, const CenterPoly& F);

/// Θ: R_F → R_F̂, Σ a_i x^i ↦ a_0 + z(x^n)·Σ_{i≥1} σ^{-i}(a_i) x^{ns-i}, with z taken in `target`.
/// `target` must be the ring of the reciprocal polynomial.
QuotElem theta(const QuotElem& a, const QuotRing& target);
/// Θ^{-1}: R_F̂ → R_F, given by the same formula with the roles of F and F̂ exchanged.
QuotElem theta_inv(const QuotElem& b, const QuotRing& target);

}  // namespace skewlab::quot
