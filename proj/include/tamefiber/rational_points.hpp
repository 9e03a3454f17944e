#pragma once

// Degrees d of tame extensions K(d) over which the curve acquires a point,
// read off from the multiplicities of the special fiber.

#include "tamefiber/fiber_config.hpp"

#include <set>

namespace tamefiber {

struct DegreeSet {
    Int bound = 0;
    std::set<Int> members;
};

/// d <= bound prime to p lies in the set iff d = a N_i (a >= 1) for some i, or
/// d = a N_i + b N_j (a, b >= 1) for meeting components i != j.
inline DegreeSet point_degrees(const FiberConfiguration& config, Int bound) {
    require_valid_sncd(config, "point_degrees");
    if (bound < 1) fail(ErrorKind::InvalidParameter, "point_degrees: bound must be >= 1");
    const Int p = config.residue_char();
    DegreeSet out;
    out.bound = bound;
    std::vector<bool> reachable(static_cast<std::size_t>(bound) + 1, false);
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Int ni = config.component(i).multiplicity;
        for (Int d = ni; d <= bound; d += ni) reachable[static_cast<std::size_t>(d)] = true;
        for (std::size_t j = i + 1; j < config.size(); ++j) {
            if (config.pair_count(i, j) == 0) continue;
            const Int nj = config.component(j).multiplicity;
            for (Int a = ni; a + nj <= bound; a += ni)
                for (Int d = a + nj; d <= bound; d += nj) reachable[static_cast<std::size_t>(d)] = true;
        }
    }
    for (Int d = 1; d <= bound; ++d)
        if (reachable[static_cast<std::size_t>(d)] && coprime_to_char(d, p)) out.members.insert(d);
    return out;
}

/// C(K) is non-empty iff some component has multiplicity one.
inline bool has_rational_point(const FiberConfiguration& config) {
    require_valid_sncd(config, "has_rational_point");
    for (const Component& c : config.components())
        if (c.multiplicity == 1) return true;
    return false;
}

/// C(K^t) is non-empty iff some multiplicity is prime to p.
inline bool has_tame_point(const FiberConfiguration& config) {
    require_valid_sncd(config, "has_tame_point");
    for (const Component& c : config.components())
        if (coprime_to_char(c.multiplicity, config.residue_char())) return true;
    return false;
}

} // namespace tamefiber
