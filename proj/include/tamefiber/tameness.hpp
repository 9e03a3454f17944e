#pragma once

// Tameness criteria for curves from an sncd fiber: the numerical criterion,
// d-tameness of the model (definition and structural form), the root-order
// criterion, Saito's criterion with pseudo-wild torsors, and the degree of the
// minimal extension giving semi-stable reduction.

#include "tamefiber/monodromy_zeta.hpp"
#include "tamefiber/rational_points.hpp"
#include "tamefiber/surgery.hpp"

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tamefiber {

enum class ApplicabilityNote {
    GenusZeroFiber,
    GenusOneWithoutRationalPoint,
};

constexpr std::string_view to_string(ApplicabilityNote note) noexcept {
    switch (note) {
    case ApplicabilityNote::GenusZeroFiber: return "genus_zero_fiber";
    case ApplicabilityNote::GenusOneWithoutRationalPoint: return "genus_one_without_rational_point";
    }
    return "?";
}

struct TamenessReport {
    bool tame_numeric = false;
    Int sum_N_chi = 0;
    Int sum_Nprime_chi = 0;
    bool p_tame = false;
    std::map<Int, bool> d_tame_witnesses;
    std::vector<ApplicabilityNote> applicability_notes;
};

struct SaitoReport {
    bool tame = false;
    bool p_tame = false;
    bool pseudo_wild = false;
    std::optional<KodairaType> jacobian_type_used;
    bool consistent = false;
};

struct PrimedCheck {
    bool q_root_order_free = false;
    bool d_tame = false;
    bool equivalent = false;
    /// I = I_d: the root-order condition then only forces genus one.
    bool index_set_is_full = false;
    bool genus_one_escape = false;
};

struct UnipotenceReport {
    bool h1_unipotent = false;
    bool tame = false;
};

namespace detail {

inline bool index_set_is_full(const FiberConfiguration& config, Int d) {
    for (const Component& c : config.components())
        if (c.multiplicity % d != 0) return false;
    return true;
}

inline void require_relatively_minimal(const FiberConfiguration& config, std::string_view op) {
    const MinimalityReport m = is_relatively_minimal(config, Mode::sncd);
    if (!m.minimal)
        fail(ErrorKind::NotRelativelyMinimal,
             std::string(op) + " needs a relatively minimal sncd model; '" + m.witnesses.front() +
                 "' is contractible");
}

} // namespace detail

/// Literal definition: I != I_d and chi(E_i^o) = 0 whenever d | N_i. 0-tame always.
inline bool is_d_tame(const FiberConfiguration& config, Int d) {
    require_valid_sncd(config, "is_d_tame");
    if (d < 0) fail(ErrorKind::InvalidParameter, "is_d_tame: d must be >= 0");
    if (d == 0) return true;
    if (detail::index_set_is_full(config, d)) return false;
    for (std::size_t i = 0; i < config.size(); ++i)
        if (config.component(i).multiplicity % d == 0 && chi_open(config, i) != 0) return false;
    return true;
}

/// Structural form: each component with d | N_i is rational, has exactly two
/// boundary points, and meets only components with d not dividing N_j.
inline bool d_tame_structural(const FiberConfiguration& config, Int d) {
    require_valid_sncd(config, "d_tame_structural");
    if (d < 2) fail(ErrorKind::InvalidParameter, "d_tame_structural: d must be > 1");
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Component& c = config.component(i);
        if (c.multiplicity % d != 0) continue;
        if (c.genus != 0 || config.boundary_points(i) != 2) return false;
        for (std::size_t j = 0; j < config.size(); ++j)
            if (j != i && config.pair_count(i, j) > 0 && config.component(j).multiplicity % d == 0)
                return false;
    }
    return true;
}

inline TamenessReport is_cohomologically_tame(const FiberConfiguration& config,
                                              std::span<const Int> requested_d = {}) {
    require_valid_sncd(config, "is_cohomologically_tame");
    const Int p = config.residue_char();
    TamenessReport r;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Int n = config.component(i).multiplicity;
        const Int chi = chi_open(config, i);
        r.sum_N_chi += n * chi;
        r.sum_Nprime_chi += prime_to_p_part(n, p) * chi;
    }
    r.tame_numeric = r.sum_N_chi == r.sum_Nprime_chi;

    // The polynomial and degree forms of the criterion must agree with the sums.
    const CyclotomicProduct p_c = char_poly_h1_factored(config);
    const CyclotomicProduct q_c = q_poly_factored(config);
    const bool same_degree = degree(p_c) == degree(q_c);
    const bool same_poly = expand(p_c) == expand(q_c);
    if (same_degree != r.tame_numeric || same_poly != r.tame_numeric)
        fail(ErrorKind::InternalInconsistency, "numeric, degree and polynomial tameness criteria disagree");

    r.p_tame = p == 0 || is_d_tame(config, p);
    for (Int d : requested_d) r.d_tame_witnesses[d] = is_d_tame(config, d);

    const Int g = total_genus(config);
    if (g == 0) r.applicability_notes.push_back(ApplicabilityNote::GenusZeroFiber);
    if (g == 1 && !has_rational_point(config))
        r.applicability_notes.push_back(ApplicabilityNote::GenusOneWithoutRationalPoint);
    return r;
}

/// Compares "Q_C has no root of order divisible by d" with d-tameness on a
/// relatively minimal model.
inline PrimedCheck theorem_primed_check(const FiberConfiguration& config, Int d) {
    require_valid_sncd(config, "theorem_primed_check");
    if (d < 2) fail(ErrorKind::InvalidParameter, "theorem_primed_check: d must be > 1");
    detail::require_relatively_minimal(config, "theorem_primed_check");

    PrimedCheck out;
    out.q_root_order_free = true;
    for (Int order : root_orders(q_poly_factored(config)))
        if (order % d == 0) out.q_root_order_free = false;
    out.d_tame = is_d_tame(config, d);
    out.equivalent = out.q_root_order_free == out.d_tame;
    out.index_set_is_full = detail::index_set_is_full(config, d);
    if (out.index_set_is_full && out.q_root_order_free) {
        out.genus_one_escape = true;
        if (total_genus(config) != 1)
            fail(ErrorKind::InternalInconsistency, "root-order condition with I = I_d but genus != 1");
    }
    return out;
}

/// Genus one, no point over K^t, and the Jacobian type in the list for p.
inline bool is_pseudo_wild(const FiberConfiguration& config,
                           const std::optional<KodairaType>& jacobian_type = std::nullopt) {
    require_valid_sncd(config, "is_pseudo_wild");
    if (total_genus(config) != 1 || has_tame_point(config)) return false;
    const Int p = config.residue_char();
    if (p > 3) return true;
    if (!jacobian_type)
        fail(ErrorKind::JacobianTypeRequired,
             "genus one curve without tame point at p = " + std::to_string(p) +
                 ": the reduction type of the Jacobian is needed");
    switch (jacobian_type->kind) {
    case KodairaKind::I: return true;
    case KodairaKind::IV:
    case KodairaKind::IVstar: return p == 2;
    case KodairaKind::Istar:
    case KodairaKind::III:
    case KodairaKind::IIIstar: return p == 3;
    default: return false;
    }
}

inline SaitoReport saito_criterion(const FiberConfiguration& config,
                                   const std::optional<KodairaType>& jacobian_type = std::nullopt) {
    require_valid_sncd(config, "saito_criterion");
    detail::require_relatively_minimal(config, "saito_criterion");
    SaitoReport r;
    r.tame = is_cohomologically_tame(config).tame_numeric;
    r.p_tame = config.residue_char() == 0 || is_d_tame(config, config.residue_char());
    r.pseudo_wild = is_pseudo_wild(config, jacobian_type);
    if (r.p_tame && r.pseudo_wild)
        fail(ErrorKind::InternalInconsistency, "model is both p-tame and pseudo-wild");
    r.jacobian_type_used = jacobian_type;
    r.consistent = r.tame == (r.p_tame || r.pseudo_wild);
    return r;
}

/// Principal: positive genus or at least three boundary points.
inline bool is_principal(const FiberConfiguration& config, const ComponentId& id) {
    const std::size_t i = config.index_of(id);
    if (config.mode() != Mode::sncd)
        fail(ErrorKind::InvalidConfiguration, "is_principal requires an sncd configuration");
    return config.component(i).genus > 0 || config.boundary_points(i) >= 3;
}

inline bool is_semistable(const FiberConfiguration& config) {
    for (const Component& c : config.components())
        if (c.multiplicity != 1) return false;
    return true;
}

/// Degree of the minimal extension over which C acquires semi-stable reduction,
/// as lcm of N_i over principal components. Two alternative formulas are
/// evaluated alongside and must agree.
inline Int semistable_reduction_degree(const FiberConfiguration& config) {
    require_valid_sncd(config, "semistable_reduction_degree");
    detail::require_relatively_minimal(config, "semistable_reduction_degree");
    if (!is_cohomologically_tame(config).tame_numeric)
        fail(ErrorKind::NotTame, "the curve is not cohomologically tame");
    if (total_genus(config) == 1 && !has_rational_point(config))
        fail(ErrorKind::HypothesisViolated, "genus one curve without rational point");

    std::vector<Int> principal, nonzero_or_full, negative;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Component& c = config.component(i);
        const Int chi = chi_open(config, i);
        if (is_principal(config, c.id)) principal.push_back(c.multiplicity);
        if (chi != 0 || detail::index_set_is_full(config, c.multiplicity))
            nonzero_or_full.push_back(c.multiplicity);
        if (chi < 0) negative.push_back(c.multiplicity);
    }
    const Int e = lcm_of(principal);
    if (lcm_of(nonzero_or_full) != e || lcm_of(negative) != e)
        fail(ErrorKind::InternalInconsistency, "semi-stable reduction degree formulas disagree");
    return e;
}

inline UnipotenceReport unipotence_check(const FiberConfiguration& config) {
    require_valid_sncd(config, "unipotence_check");
    UnipotenceReport r;
    r.tame = is_cohomologically_tame(config).tame_numeric;
    bool only_order_one = true;
    for (Int order : root_orders(char_poly_h1_factored(config)))
        if (order != 1) only_order_one = false;
    r.h1_unipotent = only_order_one && r.tame;
    return r;
}

} // namespace tamefiber
