#pragma once

#include <memory>
#include <random>
#include <vector>

#include "skewlab/gf.hpp"
#include "skewlab/quot.hpp"

namespace testsupport {

using namespace skewlab;

struct RingSpec {
    std::uint32_t p;
    unsigned e, n, s, j;
};

inline std::shared_ptr<const gf::FieldTower> tower(const RingSpec& r) {
    return std::make_shared<const gf::FieldTower>(r.p, r.e, r.n, r.s, r.j);
}

/// F and F̂ rings over the standard F of the tower.
struct RingPair {
    std::shared_ptr<const gf::FieldTower> tower;
    std::shared_ptr<const quot::QuotRing> F, Fhat;
};

inline RingPair ring_pair(const RingSpec& r) {
    auto t = tower(r);
    auto F = skew::CenterPoly::standard(*t);
    auto ringF = std::make_shared<const quot::QuotRing>(t, F);
    auto ringFh = std::make_shared<const quot::QuotRing>(t, quot::reciprocal(*t, F));
    return {t, ringF, ringFh};
}

/// Rings behind every code in the certification grid, plus a few extra shapes.
inline std::vector<RingSpec> desk_rings() {
    return {
        {2, 1, 2, 1, 1}, {2, 1, 2, 2, 1}, {2, 1, 3, 1, 1}, {2, 1, 3, 2, 1}, {3, 1, 2, 1, 1}, {3, 1, 2, 2, 1},
        {2, 1, 4, 1, 1}, {3, 1, 2, 3, 1}, {3, 1, 4, 1, 1}, {2, 2, 2, 1, 1}, {2, 1, 3, 1, 2}, {5, 1, 2, 1, 1},
    };
}

inline gf::Elem random_elem(const gf::Field& k, std::mt19937_64& rng) {
    return std::uniform_int_distribution<gf::Elem>(0, k.size() - 1)(rng);
}

}  // namespace testsupport
