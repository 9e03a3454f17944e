#pragma once

// Combinatorial model of the special fiber of a regular model of a curve:
// the weighted dual graph sum_i N_i E_i together with genera, self-intersections
// and intersection counts.

#include "tamefiber/arith.hpp"
#include "tamefiber/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamefiber {

using ComponentId = std::string;

enum class Mode { sncd, ncd };

constexpr std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::sncd ? "sncd" : "ncd";
}

struct Component {
    ComponentId id;
    Int multiplicity = 1;
    Int genus = 0;
    std::optional<Int> self_intersection;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Unordered intersection record. a == b encodes `count` nodes of component a.
struct Pairing {
    ComponentId a;
    ComponentId b;
    Int count = 1;

    [[nodiscard]] bool is_loop() const noexcept { return a == b; }
    friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Dimension-agnostic input of the A'Campo type formulas: one entry per
/// stratum E_i^o with its multiplicity and Euler characteristic.
struct Stratum {
    Int multiplicity = 1;
    Int chi_open = 0;
    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct StratumData {
    std::vector<Stratum> strata;
    Int residue_char = 0;
    std::optional<Int> total_chi;

    friend bool operator==(const StratumData&, const StratumData&) = default;
};

inline void check_strata(const StratumData& data) {
    if (!is_valid_residue_char(data.residue_char))
        fail(ErrorKind::InvariantError,
             "residue_char must be 0 or prime, got " + std::to_string(data.residue_char));
    for (std::size_t k = 0; k < data.strata.size(); ++k)
        if (data.strata[k].multiplicity < 1)
            fail(ErrorKind::InvariantError,
                 "strata[" + std::to_string(k) + "].multiplicity must be >= 1");
}

/// Immutable weighted dual graph. Construct through make(), which enforces the
/// structural invariants (ids, counts, connectivity, loops only in ncd mode).
class FiberConfiguration {
public:
    static FiberConfiguration make(Int residue_char, Mode mode,
                                   std::vector<Component> components,
                                   const std::vector<Pairing>& pairings) {
        FiberConfiguration out;
        if (!is_valid_residue_char(residue_char))
            fail(ErrorKind::InvariantError,
                 "residue_char must be 0 or prime, got " + std::to_string(residue_char));
        if (components.empty())
            fail(ErrorKind::InvariantError, "a configuration needs at least one component");
        out.residue_char_ = residue_char;
        out.mode_ = mode;
        out.components_ = std::move(components);
        for (std::size_t k = 0; k < out.components_.size(); ++k) {
            const Component& c = out.components_[k];
            if (c.id.empty()) fail(ErrorKind::InvariantError, "component id must be non-empty");
            if (c.multiplicity < 1)
                fail(ErrorKind::InvariantError, "component '" + c.id + "': multiplicity must be >= 1");
            if (c.genus < 0)
                fail(ErrorKind::InvariantError, "component '" + c.id + "': genus must be >= 0");
            if (!out.index_.emplace(c.id, k).second)
                fail(ErrorKind::InvariantError, "duplicate component id '" + c.id + "'");
        }
        const std::size_t n = out.components_.size();
        out.counts_.assign(n, std::vector<Int>(n, 0));
        for (const Pairing& p : pairings) {
            const auto ia = out.index_.find(p.a);
            const auto ib = out.index_.find(p.b);
            if (ia == out.index_.end() || ib == out.index_.end())
                fail(ErrorKind::InvariantError,
                     "intersection references unknown component ('" + p.a + "', '" + p.b + "')");
            if (p.count < 1)
                fail(ErrorKind::InvariantError,
                     "intersection ('" + p.a + "', '" + p.b + "') must have count >= 1");
            if (p.is_loop() && mode == Mode::sncd)
                fail(ErrorKind::InvariantError,
                     "self-intersection points on '" + p.a + "' are not allowed in sncd mode");
            Int& slot = out.counts_[ia->second][ib->second];
            if (slot != 0)
                fail(ErrorKind::InvariantError,
                     "duplicate intersection record for ('" + p.a + "', '" + p.b + "')");
            slot = p.count;
            out.counts_[ib->second][ia->second] = p.count;
        }
        if (!out.is_connected())
            fail(ErrorKind::InvariantError, "the dual graph is not connected");
        return out;
    }

    [[nodiscard]] Int residue_char() const noexcept { return residue_char_; }
    [[nodiscard]] Mode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t size() const noexcept { return components_.size(); }
    [[nodiscard]] const std::vector<Component>& components() const noexcept { return components_; }
    [[nodiscard]] const Component& component(std::size_t i) const { return components_.at(i); }
    [[nodiscard]] const Component& component(const ComponentId& id) const { return components_[index_of(id)]; }

    [[nodiscard]] std::optional<std::size_t> find(const ComponentId& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t index_of(const ComponentId& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) fail(ErrorKind::UnknownComponent, "no component '" + id + "'");
        return it->second;
    }

    /// Intersection count between distinct components, node count when i == j.
    [[nodiscard]] Int pair_count(std::size_t i, std::size_t j) const { return counts_.at(i).at(j); }
    [[nodiscard]] Int loops(std::size_t i) const { return counts_.at(i).at(i); }

    /// Number of points of E_i lying on other components.
    [[nodiscard]] Int boundary_points(std::size_t i) const {
        Int total = 0;
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i) total += counts_[i][j];
        return total;
    }

    [[nodiscard]] Int total_loops() const {
        Int total = 0;
        for (std::size_t i = 0; i < size(); ++i) total += loops(i);
        return total;
    }

    [[nodiscard]] bool has_all_self_intersections() const {
        return std::all_of(components_.begin(), components_.end(),
                           [](const Component& c) { return c.self_intersection.has_value(); });
    }

    /// Canonical pairing list: a <= b by id, sorted.
    [[nodiscard]] std::vector<Pairing> pairings() const {
        std::vector<Pairing> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i; j < size(); ++j) {
                if (counts_[i][j] == 0) continue;
                const auto& a = components_[i].id;
                const auto& b = components_[j].id;
                out.push_back(a <= b ? Pairing{a, b, counts_[i][j]} : Pairing{b, a, counts_[i][j]});
            }
        std::sort(out.begin(), out.end(), [](const Pairing& x, const Pairing& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
        return out;
    }

    [[nodiscard]] bool is_connected() const {
        if (components_.empty()) return false;
        std::vector<bool> seen(size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < size(); ++j)
                if (j != i && counts_[i][j] > 0 && !seen[j]) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
        }
        return reached == size();
    }

    /// Same fiber up to the order in which components were listed.
    friend bool operator==(const FiberConfiguration& x, const FiberConfiguration& y) {
        if (x.residue_char_ != y.residue_char_ || x.mode_ != y.mode_ || x.size() != y.size())
            return false;
        auto sorted = [](std::vector<Component> v) {
            std::sort(v.begin(), v.end(),
                      [](const Component& a, const Component& b) { return a.id < b.id; });
            return v;
        };
        return sorted(x.components_) == sorted(y.components_) && x.pairings() == y.pairings();
    }

private:
    FiberConfiguration() = default;

    Int residue_char_ = 0;
    Mode mode_ = Mode::sncd;
    std::vector<Component> components_;
    std::map<ComponentId, std::size_t> index_;
    std::vector<std::vector<Int>> counts_;
};

/// Fills in every missing E_j.E_j from sum_i N_i (E_i.E_j) = 0.
inline FiberConfiguration derive_self_intersections(const FiberConfiguration& config) {
    std::vector<Component> comps = config.components();
    for (std::size_t j = 0; j < config.size(); ++j) {
        if (comps[j].self_intersection) continue;
        Int sum = 0;
        for (std::size_t i = 0; i < config.size(); ++i)
            if (i != j) sum += config.component(i).multiplicity * config.pair_count(i, j);
        const Int nj = comps[j].multiplicity;
        if (sum % nj != 0)
            fail(ErrorKind::NonIntegralSelfIntersection,
                 "component '" + comps[j].id + "': multiplicity " + std::to_string(nj) +
                     " does not divide the neighbour sum " + std::to_string(sum));
        comps[j].self_intersection = -sum / nj;
    }
    return FiberConfiguration::make(config.residue_char(), config.mode(), std::move(comps),
                                    config.pairings());
}

/// chi(E_i^o): Euler characteristic of E_i minus its nodes and its points on
/// other components. Each node identifies two points of the normalization.
inline Int chi_open(const FiberConfiguration& config, std::size_t i) {
    const Component& c = config.component(i);
    return 2 - 2 * c.genus - 2 * config.loops(i) - config.boundary_points(i);
}

inline Int chi_open(const FiberConfiguration& config, const ComponentId& id) {
    return chi_open(config, config.index_of(id));
}

enum class Identity {
    SelfIntersectionMissing,
    FiberBalance,     // sum_i N_i (E_i.E_j) = 0
    CanonicalParity,  // sum_i N_i nu_i even
    EulerCharacteristic,
    NegativeGenus,
    Disconnected,
    LoopInSncd,
};

constexpr std::string_view to_string(Identity identity) noexcept {
    switch (identity) {
    case Identity::SelfIntersectionMissing: return "self_intersection_missing";
    case Identity::FiberBalance: return "fiber_intersection_balance";
    case Identity::CanonicalParity: return "canonical_degree_parity";
    case Identity::EulerCharacteristic: return "euler_characteristic";
    case Identity::NegativeGenus: return "negative_genus";
    case Identity::Disconnected: return "disconnected";
    case Identity::LoopInSncd: return "loop_in_sncd";
    }
    return "unknown";
}

struct Violation {
    Identity identity;
    std::optional<ComponentId> component;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    Int derived_genus = 0;
    std::map<ComponentId, Int> nu;
    std::vector<Violation> violations;
};

/// Checks the fiber identities and reports every violation; never throws.
/// nu_i = E_i.K uses the arithmetic genus g_i + loops_i so that nodal
/// components of ncd fibers satisfy the same adjunction bookkeeping.
inline ValidationReport validate(const FiberConfiguration& config) {
    ValidationReport report;
    auto violate = [&](Identity id, std::optional<ComponentId> comp, std::string detail) {
        report.violations.push_back({id, std::move(comp), std::move(detail)});
    };

    if (!config.is_connected()) violate(Identity::Disconnected, std::nullopt, "dual graph is not connected");
    if (config.mode() == Mode::sncd)
        for (std::size_t i = 0; i < config.size(); ++i)
            if (config.loops(i) > 0)
                violate(Identity::LoopInSncd, config.component(i).id, "node on a component in sncd mode");

    bool complete = true;
    for (const Component& c : config.components())
        if (!c.self_intersection) {
            complete = false;
            violate(Identity::SelfIntersectionMissing, c.id, "self_intersection not set");
        }

    if (complete) {
        for (std::size_t j = 0; j < config.size(); ++j) {
            Int balance = config.component(j).multiplicity * *config.component(j).self_intersection;
            for (std::size_t i = 0; i < config.size(); ++i)
                if (i != j) balance += config.component(i).multiplicity * config.pair_count(i, j);
            if (balance != 0)
                violate(Identity::FiberBalance, config.component(j).id,
                        "sum_i N_i (E_i.E_j) = " + std::to_string(balance));
        }

        Int weighted_nu = 0;
        for (std::size_t i = 0; i < config.size(); ++i) {
            const Component& c = config.component(i);
            const Int kappa = -*c.self_intersection;
            const Int nu = 2 * (c.genus + config.loops(i)) - 2 + kappa;
            report.nu[c.id] = nu;
            weighted_nu += c.multiplicity * nu;
        }
        if (weighted_nu % 2 != 0)
            violate(Identity::CanonicalParity, std::nullopt,
                    "sum_i N_i nu_i = " + std::to_string(weighted_nu) + " is odd");
        report.derived_genus = (weighted_nu + 2) / 2;

        Int euler = 0;
        for (std::size_t i = 0; i < config.size(); ++i)
            euler += config.component(i).multiplicity * chi_open(config, i);
        if (euler != 2 - 2 * report.derived_genus)
            violate(Identity::EulerCharacteristic, std::nullopt,
                    "sum_i N_i chi(E_i^o) = " + std::to_string(euler) + " but 2 - 2g = " +
                        std::to_string(2 - 2 * report.derived_genus));
        if (report.derived_genus < 0)
            violate(Identity::NegativeGenus, std::nullopt,
                    "derived genus " + std::to_string(report.derived_genus));
    }
    report.ok = report.violations.empty();
    return report;
}

/// Precondition guard for the analytic operations: a validated sncd fiber.
inline void require_valid_sncd(const FiberConfiguration& config, std::string_view operation) {
    if (config.mode() != Mode::sncd)
        fail(ErrorKind::InvalidConfiguration,
             std::string(operation) + " requires an sncd configuration; resolve nodes first");
    const ValidationReport report = validate(config);
    if (!report.ok)
        fail(ErrorKind::InvalidConfiguration,
             std::string(operation) + ": configuration fails validation (" +
                 std::string(to_string(report.violations.front().identity)) + ")");
}

inline Int total_genus(const FiberConfiguration& config) {
    const ValidationReport report = validate(config);
    if (!report.ok)
        fail(ErrorKind::InvalidConfiguration,
             "total_genus: configuration fails validation (" +
                 std::string(to_string(report.violations.front().identity)) + ")");
    return report.derived_genus;
}

inline StratumData as_strata(const FiberConfiguration& config) {
    StratumData data;
    data.residue_char = config.residue_char();
    for (std::size_t i = 0; i < config.size(); ++i)
        data.strata.push_back({config.component(i).multiplicity, chi_open(config, i)});
    data.total_chi = 2 - 2 * total_genus(config);
    return data;
}

/// Connected components of the subgraph induced by the components accepted
/// by `pred`. Each set lists ids in configuration order.
template <class Predicate>
std::vector<std::vector<ComponentId>> connected_components_of_index_set(
    const FiberConfiguration& config, Predicate pred) {
    const std::size_t n = config.size();
    std::vector<bool> selected(n), seen(n, false);
    for (std::size_t i = 0; i < n; ++i) selected[i] = pred(config.component(i));

    std::vector<std::vector<ComponentId>> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (!selected[start] || seen[start]) continue;
        std::vector<std::size_t> members, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && selected[j] && !seen[j] && config.pair_count(i, j) > 0) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<ComponentId> ids;
        for (std::size_t i : members) ids.push_back(config.component(i).id);
        out.push_back(std::move(ids));
    }
    return out;
}

/// Optional diagnostic: the intersection form is negative semi-definite with
/// kernel spanned by the multiplicity vector. Checked by Sylvester's criterion
/// on minus the form with one component removed (fraction-free elimination).
inline bool intersection_form_negative_semidefinite(const FiberConfiguration& config) {
    using boost::multiprecision::cpp_int;
    if (!config.has_all_self_intersections()) return false;
    const std::size_t n = config.size();
    if (n == 1) return *config.component(0).self_intersection == 0;
    const std::size_t m = n - 1;
    std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = i == j ? cpp_int(-*config.component(i).self_intersection)
                             : cpp_int(-config.pair_count(i, j));
    // Bareiss: after step k, a[k][k] is the (k+1)-th leading principal minor.
    cpp_int prev = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

} // namespace tamefiber
