#pragma once

// Explicit algebra isomorphisms R_F ≅ M_n(F_{q^s}).
//
// V = R/Rg for a monic degree-s right divisor g of F(x^n) is a simple left
// R_F-module of dimension n over the centre E_F = F_q[x^n] + RF(x^n). A chosen
// E_F-basis v_1..v_n of V and a root θ of F in F_{q^s} (the image of x^n) give
// the matrix of a: a·v_j = Σ_i M_ij v_i.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/linalg.hpp"
#include "skewlab/quot.hpp"

namespace skewlab::matrep {

using gf::Elem;
using gf::Matrix;
using quot::QuotElem;
using quot::QuotRing;

struct RepOptions {
    enum class Search { deterministic, randomized };
    Search search = Search::deterministic;
    std::uint64_t seed = 1;
    /// Image of x^n in F_{q^s}; defaults to the lexicographically least root of F.
    std::optional<Elem> center_root;
};

/// Largest divisor scan the deterministic search will attempt.
inline constexpr std::uint64_t kMaxDivisorScan = 1ull << 24;

class RepContext {
public:
    static RepContext build(std::shared_ptr<const QuotRing> ring, const RepOptions& opts = {});

    const QuotRing& ring() const { return *ring_; }
    const std::shared_ptr<const QuotRing>& ring_ptr() const { return ring_; }
    const gf::Field& ef() const { return ring_->tower().ef(); }
    std::size_t n() const { return ring_->tower().n(); }

    const skew::SkewPoly& divisor() const { return g_; }
    Elem center_root() const { return theta_; }
    /// Module basis of V, each given by its s coefficients (representative mod Rg).
    const std::vector<std::vector<Elem>>& module_basis() const { return vbasis_; }

    Matrix represent(const QuotElem& a) const;
    /// M of the F_p-basis element with index idx (see QuotRing::basis).
    const Matrix& basis_image(std::size_t idx) const { return images_.at(idx); }
    std::size_t rank(const QuotElem& a) const { return represent(a).rank(); }
    /// The unique a with M(a) = A.
    QuotElem preimage(const Matrix& A) const;

    /// a·v in V for v given by its s coefficients.
    std::vector<Elem> act(const QuotElem& a, const std::vector<Elem>& v) const;

private:
    RepContext() = default;

    gf::Vec module_coords(const std::vector<Elem>& v) const;
    Matrix matrix_of_action(const QuotElem& a) const;

    std::shared_ptr<const QuotRing> ring_;
    skew::SkewPoly g_;
    Elem theta_ = 0;
    std::vector<std::vector<Elem>> vbasis_;
    Matrix change_;           // F_p coordinates of V ↦ (i, l, r) coordinates
    std::vector<Elem> mu_;    // ι(t^r) θ^l indexed l·e + r
    std::vector<Matrix> images_;
    Matrix preimage_map_;     // F_p: flattened matrix coordinates ↦ ring coordinates
};

/// Lexicographically least root of F in F_{q^s}.
Elem least_center_root(const gf::FieldTower& tower, const skew::CenterPoly& F);

/// Monic degree-s right divisors of F(x^n).
skew::SkewPoly least_divisor(const QuotRing& ring);
skew::SkewPoly random_divisor(const QuotRing& ring, std::uint64_t seed);

/// Contexts for R_F and R_F̂ whose centre identifications are compatible with Θ
/// (x^n ↦ θ in R_F and x^n ↦ θ^{-1} in R_F̂).
struct RepPair {
    RepContext F;
    RepContext Fhat;
};
RepPair build_rep_pair(std::shared_ptr<const QuotRing> ringF, std::shared_ptr<const QuotRing> ringFhat,
                       const RepOptions& opts = {});

struct Intertwiner {
    Matrix N;
    /// Dimension over F_{q^s} of the solution space.
    std::size_t solution_dim = 0;
};

/// Invertible N with N·A_i = B_i·N for all i; first nonzero entry normalized to 1.
Intertwiner intertwiner(const std::vector<Matrix>& A, const std::vector<Matrix>& B);

/// N with N·M_1(a)·N^{-1} = M_2(a) for all a.
Intertwiner skolem_noether(const RepContext& ctx1, const RepContext& ctx2);

/// N with M_F(a)^T = N^{-1}·M_F̂(Θ(a))·N for all a.
Intertwiner transpose_bridge(const RepContext& ctxF, const RepContext& ctxFhat);

/// Tr_{q^s/p}(Tr(A·B)).
std::uint32_t matrix_form(const Matrix& A, const Matrix& B);
std::uint32_t matrix_trace_p(const Matrix& A);

/// Unit u with ⟨a,b⟩_F = Tr_{q^s/p}(Tr(M(a)M(b)M(u))) for all a, b.
QuotElem bilinear_unit(const RepContext& ctx);

/// Rows separated by " | ", entries by spaces, in ef text form.
std::string matrix_text(const gf::FieldTower& tower, const Matrix& A);

}  // namespace skewlab::matrep
