#pragma once

// Blow-up / contraction calculus on dual graphs, resolution of nodes, relative
// minimality, and the built-in Kodaira-Neron fibers.
//
// Bookkeeping (classical intersection theory on a regular surface):
//   blow-up at a point of E_i^o        E0 = N_i,        E_i^2 -= 1
//   blow-up at E_i meet E_j            E0 = N_i + N_j,  E_i^2 -= 1, E_j^2 -= 1
//   blow-up at a node of E_i           E0 = 2 N_i,      E_i^2 -= 4, (E0.E_i) = 2
//   contraction of a (-1)-curve meeting neighbour A in a branches:
//       A^2 += a^2, (A.B) += a b, nodes(A) += a(a-1)/2

#include "tamefiber/fiber_config.hpp"
#include "tamefiber/kodaira_type.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamefiber {

struct BlowUpSite {
    enum class Kind { Interior, Intersection, Node };

    Kind kind = Kind::Interior;
    ComponentId first;
    ComponentId second;  // Intersection only

    static BlowUpSite interior(ComponentId i) { return {Kind::Interior, std::move(i), {}}; }
    static BlowUpSite intersection(ComponentId i, ComponentId j) {
        return {Kind::Intersection, std::move(i), std::move(j)};
    }
    static BlowUpSite node(ComponentId i) { return {Kind::Node, std::move(i), {}}; }
};

enum class ContractionClass { StaysSncd, StaysNcdOnly, NotNormalCrossings };

constexpr std::string_view to_string(ContractionClass c) noexcept {
    switch (c) {
    case ContractionClass::StaysSncd: return "StaysSncd";
    case ContractionClass::StaysNcdOnly: return "StaysNcdOnly";
    case ContractionClass::NotNormalCrossings: return "NotNormalCrossings";
    }
    return "?";
}

/// NotNormalCrossings still carries the would-be configuration (in ncd mode)
/// for diagnostics; it must not be fed to the analytic operations.
struct ContractionOutcome {
    ContractionClass cls;
    FiberConfiguration configuration;

    [[nodiscard]] bool usable() const noexcept { return cls != ContractionClass::NotNormalCrossings; }
};

struct MinimalityReport {
    bool minimal = true;
    std::vector<ComponentId> witnesses;
};

namespace detail {

inline ComponentId fresh_id(const FiberConfiguration& config) {
    for (Int k = 1;; ++k) {
        ComponentId id = "e" + std::to_string(k);
        if (!config.find(id)) return id;
    }
}

/// Mutable copy of a configuration used while rewriting it.
struct Draft {
    std::vector<Component> components;
    std::vector<std::vector<Int>> counts;

    explicit Draft(const FiberConfiguration& c) : components(c.components()) {
        counts.assign(c.size(), std::vector<Int>(c.size(), 0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) counts[i][j] = c.pair_count(i, j);
    }

    std::size_t add(Component comp) {
        components.push_back(std::move(comp));
        for (auto& row : counts) row.push_back(0);
        counts.emplace_back(components.size(), 0);
        return components.size() - 1;
    }

    void set_pair(std::size_t i, std::size_t j, Int v) {
        counts[i][j] = v;
        counts[j][i] = v;
    }

    void remove(std::size_t i) {
        components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
        counts.erase(counts.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& row : counts) row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
    }

    FiberConfiguration build(Int residue_char, Mode mode) const {
        std::vector<Pairing> pairs;
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i; j < components.size(); ++j)
                if (counts[i][j] > 0) pairs.push_back({components[i].id, components[j].id, counts[i][j]});
        return FiberConfiguration::make(residue_char, mode, components, pairs);
    }
};

inline void require_self_intersections(const FiberConfiguration& config, std::string_view op) {
    if (!config.has_all_self_intersections())
        fail(ErrorKind::InvalidConfiguration,
             std::string(op) + " needs every self-intersection; derive them first");
}

/// A valid input must give a valid output of the same genus.
inline void check_surgery_result(const FiberConfiguration& before, const FiberConfiguration& after,
                                 std::string_view op) {
    const ValidationReport in = validate(before);
    if (!in.ok) return;
    const ValidationReport out = validate(after);
    if (!out.ok || out.derived_genus != in.derived_genus)
        fail(ErrorKind::InternalInconsistency, std::string(op) + " broke the fiber identities");
}

/// Classification of the contraction of E_i from its branch counts.
inline ContractionClass classify_contraction(const FiberConfiguration& config, std::size_t i) {
    Int branches = 0;
    Int touched = 0;
    for (std::size_t j = 0; j < config.size(); ++j) {
        if (j == i || config.pair_count(i, j) == 0) continue;
        branches += config.pair_count(i, j);
        ++touched;
    }
    if (branches <= 1) return ContractionClass::StaysSncd;
    if (branches == 2) return touched == 2 ? ContractionClass::StaysSncd : ContractionClass::StaysNcdOnly;
    return ContractionClass::NotNormalCrossings;
}

inline bool is_exceptional_curve(const FiberConfiguration& config, std::size_t i) {
    const Component& c = config.component(i);
    return c.genus == 0 && config.loops(i) == 0 && c.self_intersection == -1 && config.size() > 1;
}

} // namespace detail

inline FiberConfiguration blow_up(const FiberConfiguration& config, const BlowUpSite& site) {
    detail::require_self_intersections(config, "blow_up");
    const auto i = config.find(site.first);
    if (!i) fail(ErrorKind::InvalidSite, "no component '" + site.first + "'");

    detail::Draft draft(config);
    const Component& ci = config.component(*i);
    const ComponentId id = detail::fresh_id(config);
    std::size_t e0 = 0;

    switch (site.kind) {
    case BlowUpSite::Kind::Interior:
        draft.components[*i].self_intersection = *ci.self_intersection - 1;
        e0 = draft.add({id, ci.multiplicity, 0, -1});
        draft.set_pair(*i, e0, 1);
        break;
    case BlowUpSite::Kind::Intersection: {
        const auto j = config.find(site.second);
        if (!j || *j == *i || config.pair_count(*i, *j) < 1)
            fail(ErrorKind::InvalidSite,
                 "'" + site.first + "' and '" + site.second + "' do not meet");
        const Component& cj = config.component(*j);
        draft.components[*i].self_intersection = *ci.self_intersection - 1;
        draft.components[*j].self_intersection = *cj.self_intersection - 1;
        draft.set_pair(*i, *j, config.pair_count(*i, *j) - 1);
        e0 = draft.add({id, ci.multiplicity + cj.multiplicity, 0, -1});
        draft.set_pair(*i, e0, 1);
        draft.set_pair(*j, e0, 1);
        break;
    }
    case BlowUpSite::Kind::Node:
        if (config.loops(*i) < 1) fail(ErrorKind::InvalidSite, "'" + site.first + "' has no node");
        draft.components[*i].self_intersection = *ci.self_intersection - 4;
        draft.set_pair(*i, *i, config.loops(*i) - 1);
        e0 = draft.add({id, 2 * ci.multiplicity, 0, -1});
        draft.set_pair(*i, e0, 2);
        break;
    }
    FiberConfiguration out = draft.build(config.residue_char(), config.mode());
    detail::check_surgery_result(config, out, "blow_up");
    return out;
}

inline ContractionOutcome contract(const FiberConfiguration& config, const ComponentId& id) {
    const std::size_t i = config.index_of(id);
    if (!detail::is_exceptional_curve(config, i))
        fail(ErrorKind::NotContractible,
             "'" + id + "' is not a smooth rational (-1)-curve in a fiber with other components");

    const ContractionClass cls = detail::classify_contraction(config, i);
    detail::Draft draft(config);
    for (std::size_t a = 0; a < config.size(); ++a) {
        if (a == i) continue;
        const Int ba = config.pair_count(i, a);
        if (ba == 0) continue;
        draft.components[a].self_intersection = *config.component(a).self_intersection + ba * ba;
        draft.set_pair(a, a, config.loops(a) + ba * (ba - 1) / 2);
        for (std::size_t b = a + 1; b < config.size(); ++b)
            if (b != i && config.pair_count(i, b) > 0)
                draft.set_pair(a, b, config.pair_count(a, b) + ba * config.pair_count(i, b));
    }
    draft.remove(i);
    const Mode mode = cls == ContractionClass::StaysSncd ? config.mode() : Mode::ncd;
    FiberConfiguration out = draft.build(config.residue_char(), mode);
    if (cls != ContractionClass::NotNormalCrossings) detail::check_surgery_result(config, out, "contract");
    return {cls, std::move(out)};
}

/// Blows up every node; the result is in sncd mode.
inline FiberConfiguration resolve_to_sncd(const FiberConfiguration& config) {
    FiberConfiguration current = config;
    for (;;) {
        std::optional<std::size_t> looped;
        for (std::size_t i = 0; i < current.size() && !looped; ++i)
            if (current.loops(i) > 0) looped = i;
        if (!looped) break;
        current = blow_up(current, BlowUpSite::node(current.component(*looped).id));
    }
    return FiberConfiguration::make(current.residue_char(), Mode::sncd, current.components(),
                                    current.pairings());
}

/// Minimal within `cls` iff no smooth rational (-1)-curve contracts to a fiber
/// still of that class.
inline MinimalityReport is_relatively_minimal(const FiberConfiguration& config, Mode cls) {
    detail::require_self_intersections(config, "is_relatively_minimal");
    MinimalityReport report;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (!detail::is_exceptional_curve(config, i)) continue;
        const ContractionClass c = detail::classify_contraction(config, i);
        const bool stays = c == ContractionClass::StaysSncd ||
                           (cls == Mode::ncd && c == ContractionClass::StaysNcdOnly);
        if (stays) report.witnesses.push_back(config.component(i).id);
    }
    report.minimal = report.witnesses.empty();
    return report;
}

/// Minimal sncd model of the given Kodaira-Neron type, self-intersections derived.
inline FiberConfiguration kodaira_config(const KodairaType& type, Int residue_char = 0) {
    std::vector<Component> comps;
    std::vector<Pairing> pairs;
    auto add = [&](ComponentId id, Int n, Int genus = 0) { comps.push_back({std::move(id), n, genus, {}}); };
    auto join = [&](const ComponentId& a, const ComponentId& b, Int count = 1) { pairs.push_back({a, b, count}); };
    // Central component C of multiplicity `centre` with arms listed outward.
    auto star = [&](Int centre, const std::vector<std::vector<Int>>& arms) {
        add("C", centre);
        for (std::size_t a = 0; a < arms.size(); ++a) {
            ComponentId prev = "C";
            for (std::size_t k = 0; k < arms[a].size(); ++k) {
                ComponentId id = "A" + std::to_string(a + 1) + (arms[a].size() > 1 ? "_" + std::to_string(k + 1) : "");
                add(id, arms[a][k]);
                join(prev, id);
                prev = id;
            }
        }
    };

    if (type.has_parameter() && type.n < 0)
        fail(ErrorKind::InvalidParameter, "Kodaira parameter n must be >= 0");

    switch (type.kind) {
    case KodairaKind::I:
        if (type.n == 0) {
            add("E", 1, 1);
        } else if (type.n == 1) {
            add("A", 1);
            add("E", 2);
            join("A", "E", 2);
        } else if (type.n == 2) {
            add("C0", 1);
            add("C1", 1);
            join("C0", "C1", 2);
        } else {
            for (Int k = 0; k < type.n; ++k) add("C" + std::to_string(k), 1);
            for (Int k = 0; k < type.n; ++k)
                join("C" + std::to_string(k), "C" + std::to_string((k + 1) % type.n));
        }
        break;
    case KodairaKind::II: star(6, {{1}, {2}, {3}}); break;
    case KodairaKind::III: star(4, {{1}, {1}, {2}}); break;
    case KodairaKind::IV: star(3, {{1}, {1}, {1}}); break;
    case KodairaKind::Istar: {
        for (Int k = 0; k <= type.n; ++k) add("C" + std::to_string(k), 2);
        for (Int k = 0; k < type.n; ++k) join("C" + std::to_string(k), "C" + std::to_string(k + 1));
        const ComponentId last = "C" + std::to_string(type.n);
        for (int t = 1; t <= 4; ++t) {
            add("T" + std::to_string(t), 1);
            join(t <= 2 ? "C0" : last, "T" + std::to_string(t));
        }
        break;
    }
    case KodairaKind::IVstar: star(3, {{2, 1}, {2, 1}, {2, 1}}); break;
    case KodairaKind::IIIstar: star(4, {{3, 2, 1}, {3, 2, 1}, {2}}); break;
    case KodairaKind::IIstar: star(6, {{5, 4, 3, 2, 1}, {4, 2}, {3}}); break;
    }
    return derive_self_intersections(FiberConfiguration::make(residue_char, Mode::sncd, std::move(comps), pairs));
}

} // namespace tamefiber
