#pragma once

// Rational volume s(X), the trace-formula error term eps(X), and the check that
// eps vanishes for tame varieties with a tame point.

#include "tamefiber/monodromy_zeta.hpp"
#include "tamefiber/rational_points.hpp"
#include "tamefiber/tameness.hpp"

#include <cstddef>
#include <vector>

namespace tamefiber {

struct TraceReport {
    Int lefschetz_trace = 0;
    Int rational_volume = 0;
    Int error_term = 0;
    bool holds = false;
    std::vector<std::size_t> wild_index_set;  // strata with N_i a positive power of p
};

/// s(X): Euler characteristic of the smooth locus, i.e. strata with N_i = 1.
inline Int rational_volume(const StratumData& s) {
    check_strata(s);
    Int total = 0;
    for (const Stratum& st : s.strata)
        if (st.multiplicity == 1) total += st.chi_open;
    return total;
}

inline std::vector<std::size_t> wild_index_set(const StratumData& s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < s.strata.size(); ++k)
        if (is_positive_power_of(s.strata[k].multiplicity, s.residue_char)) out.push_back(k);
    return out;
}

/// eps(X) = sum of chi(E_i^o) over i with N_i = p^a, a > 0. Zero when p = 0.
inline Int error_term(const StratumData& s) {
    check_strata(s);
    Int total = 0;
    for (std::size_t k : wild_index_set(s)) total += s.strata[k].chi_open;
    return total;
}

inline TraceReport trace_report(const StratumData& s) {
    TraceReport r;
    r.lefschetz_trace = trace_of_power(s, 1);
    r.rational_volume = rational_volume(s);
    r.error_term = error_term(s);
    r.wild_index_set = wild_index_set(s);
    r.holds = r.error_term == 0;
    if (r.lefschetz_trace != r.rational_volume + r.error_term)
        fail(ErrorKind::InternalInconsistency, "trace differs from rational volume plus error term");
    return r;
}

struct SaitoQuestionCheck {
    bool applicable = false;
    bool vanishes = false;
};

/// For curves the vanishing is known whenever the check applies, so a
/// failure there is reported as an internal inconsistency.
inline SaitoQuestionCheck saito_question_check(const FiberConfiguration& config) {
    require_valid_sncd(config, "saito_question_check");
    SaitoQuestionCheck r;
    r.applicable = is_cohomologically_tame(config).tame_numeric && has_tame_point(config);
    r.vanishes = error_term(as_strata(config)) == 0;
    if (r.applicable && !r.vanishes)
        fail(ErrorKind::InternalInconsistency, "tame curve with a tame point has nonzero error term");
    return r;
}

} // namespace tamefiber
