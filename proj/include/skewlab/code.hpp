#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/linalg.hpp"
#include "skewlab/matrep.hpp"
#include "skewlab/quot.hpp"

namespace skewlab::code {

using gf::Elem;
using quot::QuotElem;
using quot::QuotRing;

inline constexpr std::uint64_t kDefaultBudget = 1ull << 24;

/// kDefaultBudget unless SKEWLAB_BUDGET holds a positive integer.
std::uint64_t default_budget();

/// p^e as decimal text (falls back to "p^e" beyond 64 bits).
std::string power_text(std::uint32_t p, std::size_t e);

/// An additive code in R_F, stored as an F_p-subspace of the coordinate space.
class RankCode {
public:
    /// Spans the generators over F_p; dependent generators are dropped.
    /// `k_degree` is the F_p-degree of the declared linearity field K.
    static RankCode from_generators(std::shared_ptr<const QuotRing> ring, const std::vector<QuotElem>& gens,
                                    unsigned k_degree = 1);
    static RankCode full(std::shared_ptr<const QuotRing> ring);
    static RankCode zero(std::shared_ptr<const QuotRing> ring);

    const QuotRing& ring() const { return *ring_; }
    const std::shared_ptr<const QuotRing>& ring_ptr() const { return ring_; }
    unsigned k_degree() const { return k_degree_; }

    /// Independent generators in insertion order.
    const std::vector<QuotElem>& generators() const { return gens_; }
    const gf::Subspace& space() const { return space_; }
    std::size_t dimension() const { return gens_.size(); }
    std::string cardinality() const;

    bool contains(const QuotElem& a) const;
    /// Same ring and same set of elements.
    bool equals(const RankCode& o) const;
    /// κ·g ∈ C for every generator g and every κ in an F_p-basis of K.
    bool is_k_linear() const;
    /// Visits every codeword (including 0); stops early if f returns false.
    void for_each(const std::function<bool(const QuotElem&)>& f) const;

private:
    RankCode(std::shared_ptr<const QuotRing> ring, unsigned k_degree);

    std::shared_ptr<const QuotRing> ring_;
    unsigned k_degree_ = 1;
    gf::Subspace space_;
    std::vector<QuotElem> gens_;
};

struct DistanceOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct DistanceReport {
    /// Unset for the zero code.
    std::optional<std::size_t> d;
    /// rank_counts[r] = number of codewords of rank r (including the zero word).
    std::vector<std::uint64_t> rank_counts;
};

/// Exhaustive rank distribution in Gray-code order. Throws TooLarge beyond the budget.
DistanceReport rank_distribution(const RankCode& C, const DistanceOptions& opts = {});
std::size_t min_distance(const RankCode& C, const DistanceOptions& opts = {});

struct MrdReport {
    bool mrd = false;
    std::size_t d = 0;
    /// log_p of |C| and of the Singleton bound (q^s)^{n(n-d+1)}.
    std::size_t card_exp = 0, bound_exp = 0;
};
MrdReport is_mrd(const RankCode& C, const DistanceOptions& opts = {});

/// {Θ(c)} in R_F̂.
RankCode adjoint_code(const RankCode& C, std::shared_ptr<const QuotRing> ringFhat);

/// {b ∈ R_F : ⟨c, b⟩_F = 0 for all c ∈ C}.
RankCode frobenius_dual(const RankCode& C);

/// Data that realizes the dual of C ⊆ R_F skew-side inside R_F̂.
struct DualContext {
    matrep::RepPair reps;
    gf::Matrix bridge;      // M_F(a)^T = bridge^{-1} M_F̂(Θ(a)) bridge
    gf::Matrix bridge_inv;
    QuotElem unit;          // bilinear unit of R_F
    /// Matrix of b ∈ R_F̂ in the coordinates of M_F: bridge^{-1} M_F̂(b) bridge.
    gf::Matrix bridged(const QuotElem& b) const;
};
DualContext make_dual_context(std::shared_ptr<const QuotRing> ringF, std::shared_ptr<const QuotRing> ringFhat,
                              const matrep::RepOptions& opts = {});

/// Θ(C^{⊥_F}·u) ⊆ R_F̂; its bridged matrices form M_F(C)^⊥ for the trace form.
RankCode dual_code(const RankCode& C, const DualContext& ctx);

/// Checks Tr(Tr(M_F(c)·bridged(d)^T)) = 0 on generator pairs.
bool dual_is_orthogonal(const RankCode& C, const RankCode& D, const DualContext& ctx);

/// {U·M(c)^ρ·V}, ρ = entrywise y ↦ y^{p^rho_exp}, pulled back through ctx.
RankCode apply_equivalence(const RankCode& C, const matrep::RepContext& ctx, const gf::Matrix& U,
                           const gf::Matrix& V, unsigned rho_exp);
/// {u·c·v} for units u, v of R_F.
RankCode apply_equivalence(const RankCode& C, const QuotElem& u, const QuotElem& v);

enum class Nucleus { left_idealiser, right_idealiser, centraliser, centre };

struct NuclearParameters {
    std::uint32_t p = 2;
    /// log_p of |C|, |I_l|, |I_r|, |Cen|, |Z|
    std::array<std::size_t, 5> exps{};

    std::array<std::string, 5> values() const;
    /// "(a,b,c,d,e)"
    std::string text() const;
    bool operator==(const NuclearParameters& o) const { return p == o.p && exps == o.exps; }
};

struct InvariantReport {
    NuclearParameters params;
    /// The code actually measured (c0^{-1}·C after normalization).
    RankCode measured;
    bool normalized = false;
    std::vector<QuotElem> left, right, centraliser, centre;  // F_p-bases
};

/// Idealisers, centraliser and centre as F_p-solution spaces.
InvariantReport invariants(const RankCode& C, bool normalize_identity, const DistanceOptions& opts = {});

/// c0 = 1 when 1 ∈ C, otherwise the first invertible codeword in Gray order.
QuotElem first_invertible(const RankCode& C, const DistanceOptions& opts = {});

/// The F_p-span of `basis` is a field: it contains 1, is closed under products,
/// and all its nonzero elements are units.
bool field_certificate(const QuotRing& ring, const std::vector<QuotElem>& basis,
                       std::uint64_t budget = kDefaultBudget);

// Code files.
void write_code(std::ostream& os, const RankCode& C);
RankCode read_code(std::istream& is);

}  // namespace skewlab::code
