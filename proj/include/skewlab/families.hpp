#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewlab/code.hpp"

namespace skewlab::families {

using code::RankCode;
using gf::Elem;
using quot::QuotElem;
using quot::QuotRing;

/// S_{n,s,k}(η, ρ, F) with ρ = y ↦ y^{p^h}; n, s and F come from the ring.
struct SParams {
    std::shared_ptr<const QuotRing> ring;
    unsigned k = 1;
    Elem eta = 0;
    unsigned h = 0;
};

/// D_{n,s,k}(γ, F).
struct DParams {
    std::shared_ptr<const QuotRing> ring;
    unsigned k = 1;
    Elem gamma = 0;
};

using Params = std::variant<SParams, DParams>;

/// F_p-degree of K = Fix(ρ) ∩ F_q, i.e. gcd(e, h).
unsigned k_degree(const SParams& P);

/// N_{F_{q^n}/K}(η)·N_{F_q/K}((-1)^{sk(n-1)} F_0^k), as an element of F_{q^n}.
Elem s_condition_value(const SParams& P);
bool s_valid(const SParams& P);

/// (-1)^{ks} F_0^k N_{F_{q^n}/F_q}(γ) in F_q.
Elem d_condition_value(const DParams& P);
/// Throws EvenQ, OddN or InvalidGamma.
void d_check(const DParams& P);

/// Throws InvalidEta unless the condition holds or `force` is set.
RankCode build_S(const SParams& P, bool force = false);
RankCode build_D(const DParams& P, bool force = false);
RankCode build(const Params& P, bool force = false);

struct Twist {
    Elem value = 0;      // η or γ
    unsigned h = 0;      // S only
    Elem condition = 0;  // s_condition_value / d_condition_value
};
/// Every valid η ≠ 0 and every h < ne.
std::vector<Twist> scan_eta(const std::shared_ptr<const QuotRing>& ring, unsigned k);
/// Every valid γ.
std::vector<Twist> scan_gamma(const std::shared_ptr<const QuotRing>& ring, unsigned k);

/// Family parameters of the adjoint and of the dual, over `ringFhat`.
/// For S with η = 0 the convention η^{-1} = 0 is used.
SParams claimed_adjoint(const SParams& P, std::shared_ptr<const QuotRing> ringFhat);
SParams claimed_dual(const SParams& P, std::shared_ptr<const QuotRing> ringFhat);
DParams claimed_adjoint(const DParams& P, std::shared_ptr<const QuotRing> ringFhat);
DParams claimed_dual(const DParams& P, std::shared_ptr<const QuotRing> ringFhat);
Params claimed(const Params& P, bool dual, std::shared_ptr<const QuotRing> ringFhat);

enum class Which { adjoint, dual };

struct VerificationReport {
    Which which = Which::adjoint;
    std::size_t code_dim = 0, computed_dim = 0, claimed_dim = 0;
    /// dim C + dim C^⊥ and n²se.
    std::size_t dim_sum = 0, full_dim = 0;
    bool computed_in_claimed = false, claimed_in_computed = false;
    bool equal = false;
    /// Claimed family parameters (over F̂) in text form.
    std::string claimed_text;
};

/// Computes C^⊤ or C^⊥ and compares it with the unit-translated claimed family code.
/// Throws MismatchFound when the two sets differ.
VerificationReport verify_adjoint_dual(const Params& P, Which which, const matrep::RepOptions& opts = {});

/// Nuclear parameters predicted by the theorems; throws OutOfTheoremRange.
code::NuclearParameters expected_nuclear(const Params& P);

/// Row of the table of known MRD families: I, II, III (s = 1) or VI, VII, VIII.
std::string table_row(const Params& P);
/// The row's tuple, without the theorems' range conditions.
code::NuclearParameters table_formula(const Params& P);

std::string params_text(const Params& P);

}  // namespace skewlab::families
