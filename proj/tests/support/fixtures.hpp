#pragma once

// Shared fixture library and random surgery generators for the test suites.

#include "tamefiber/tamefiber.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tamefiber::testing {

struct Fixture {
    std::string name;
    FiberConfiguration config;
    /// Reduction type of the Jacobian, where the fixture is a genus-one curve.
    std::optional<KodairaType> jacobian;
};

inline FiberConfiguration with_residue_char(const FiberConfiguration& c, Int p) {
    return FiberConfiguration::make(p, c.mode(), c.components(), c.pairings());
}

inline FiberConfiguration single_component(Int multiplicity, Int genus, Int p = 0) {
    return derive_self_intersections(
        FiberConfiguration::make(p, Mode::sncd, {{"E", multiplicity, genus, {}}}, {}));
}

inline FiberConfiguration nodal_rational_fiber(Int p = 0) {
    return FiberConfiguration::make(p, Mode::ncd, {{"A", 1, 0, 0}}, {{"A", "A", 1}});
}

inline std::vector<KodairaType> kodaira_library() {
    using K = KodairaKind;
    return {{K::I, 0},     {K::I, 1},     {K::I, 2},      {K::I, 3},       {K::I, 5},
            {K::II, 0},    {K::III, 0},   {K::IV, 0},     {K::Istar, 0},   {K::Istar, 1},
            {K::Istar, 3}, {K::IVstar, 0}, {K::IIIstar, 0}, {K::IIstar, 0}};
}

/// Relatively minimal sncd fixtures: the Kodaira table, multiple elliptic
/// fibers (torsors of good-reduction curves), and a few higher-genus fibers.
inline std::vector<Fixture> fixture_library(Int p = 0) {
    std::vector<Fixture> out;
    for (const KodairaType& t : kodaira_library()) out.push_back({to_string(t), kodaira_config(t, p), t});
    const KodairaType good{KodairaKind::I, 0};
    out.push_back({"2I0", single_component(2, 1, p), good});
    out.push_back({"3I0", single_component(3, 1, p), good});
    out.push_back({"4I0", single_component(4, 1, p), good});
    out.push_back({"genus0", single_component(1, 0, p), std::nullopt});
    out.push_back({"genus2", single_component(1, 2, p), std::nullopt});
    out.push_back({"two_elliptic",
                   derive_self_intersections(FiberConfiguration::make(
                       p, Mode::sncd, {{"E1", 1, 1, {}}, {"E2", 1, 1, {}}}, {{"E1", "E2", 1}})),
                   std::nullopt});
    return out;
}

/// Uniformly chosen blow-up site of the configuration.
inline BlowUpSite random_site(const FiberConfiguration& c, std::mt19937_64& rng) {
    std::vector<BlowUpSite> sites;
    for (std::size_t i = 0; i < c.size(); ++i) {
        sites.push_back(BlowUpSite::interior(c.component(i).id));
        if (c.loops(i) > 0) sites.push_back(BlowUpSite::node(c.component(i).id));
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c.pair_count(i, j) > 0)
                sites.push_back(BlowUpSite::intersection(c.component(i).id, c.component(j).id));
    }
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    return sites[pick(rng)];
}

inline FiberConfiguration random_blow_ups(FiberConfiguration c, int depth, std::mt19937_64& rng) {
    for (int k = 0; k < depth; ++k) c = blow_up(c, random_site(c, rng));
    return c;
}

/// Random mix of blow-ups and contractions that keep the fiber in its class.
inline FiberConfiguration random_surgery(FiberConfiguration c, int depth, std::mt19937_64& rng) {
    std::bernoulli_distribution contract_now(0.3);
    for (int k = 0; k < depth; ++k) {
        const MinimalityReport m = is_relatively_minimal(c, c.mode());
        if (!m.witnesses.empty() && contract_now(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, m.witnesses.size() - 1);
            c = contract(c, m.witnesses[pick(rng)]).configuration;
        } else {
            c = blow_up(c, random_site(c, rng));
        }
    }
    return c;
}

} // namespace tamefiber::testing
