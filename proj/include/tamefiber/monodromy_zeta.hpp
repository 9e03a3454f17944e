#pragma once

// Tame monodromy zeta function, traces of powers of the tame generator, and the
// characteristic polynomials P_C (tame action on H^1) and Q_C (same product
// taken with the full multiplicities).

#include "tamefiber/cyclotomic.hpp"
#include "tamefiber/fiber_config.hpp"

#include <optional>

namespace tamefiber {

namespace detail {

/// prod_i (t^{m_i} - 1)^{-chi_i} with m_i chosen by `mult`.
template <class Multiplicity>
CyclotomicProduct binomial_product(const StratumData& s, Multiplicity mult) {
    CyclotomicProduct out;
    for (const Stratum& st : s.strata)
        if (st.chi_open != 0) out = cp_mul(out, cp_pow(binomial_factorization(mult(st)), -st.chi_open));
    return out;
}

inline const CyclotomicProduct& unipotent_h0_h2() {
    static const CyclotomicProduct t_minus_one_squared(CyclotomicProduct::ExponentMap{{1, 2}});
    return t_minus_one_squared;
}

} // namespace detail

/// zeta_X(t) = prod_i (t^{N'_i} - 1)^{-chi(E_i^o)}, in any dimension.
inline CyclotomicProduct zeta_function(const StratumData& s) {
    check_strata(s);
    return detail::binomial_product(
        s, [p = s.residue_char](const Stratum& st) { return prime_to_p_part(st.multiplicity, p); });
}

/// Alternating trace of phi^d on tame cohomology: sum over N'_i | d of N'_i chi_i.
inline Int trace_of_power(const StratumData& s, Int d) {
    check_strata(s);
    if (d < 1) fail(ErrorKind::InvalidParameter, "trace_of_power: d must be >= 1");
    Int total = 0;
    for (const Stratum& st : s.strata) {
        const Int np = prime_to_p_part(st.multiplicity, s.residue_char);
        if (d % np == 0) total += np * st.chi_open;
    }
    return total;
}

inline Int tame_euler_char(const StratumData& s) {
    check_strata(s);
    Int total = 0;
    for (const Stratum& st : s.strata) total += prime_to_p_part(st.multiplicity, s.residue_char) * st.chi_open;
    return total;
}

/// P_C in factored form: (t - 1)^2 zeta_C(t).
inline CyclotomicProduct char_poly_h1_factored(const FiberConfiguration& config) {
    require_valid_sncd(config, "char_poly_h1");
    return cp_mul(detail::unipotent_h0_h2(), zeta_function(as_strata(config)));
}

/// Q_C in factored form: (t - 1)^2 prod_i (t^{N_i} - 1)^{-chi(E_i^o)}; independent of p.
inline CyclotomicProduct q_poly_factored(const FiberConfiguration& config) {
    require_valid_sncd(config, "q_poly");
    return cp_mul(detail::unipotent_h0_h2(),
                  detail::binomial_product(as_strata(config),
                                           [](const Stratum& st) { return st.multiplicity; }));
}

inline IntegerPolynomial char_poly_h1(const FiberConfiguration& config) {
    return expand(char_poly_h1_factored(config));
}

inline IntegerPolynomial q_poly(const FiberConfiguration& config) {
    return expand(q_poly_factored(config));
}

struct ZetaReport {
    CyclotomicProduct zeta;
    Int tame_euler_char = 0;
    // Curve inputs only.
    std::optional<CyclotomicProduct> char_poly_h1;
    std::optional<CyclotomicProduct> q_poly;
    std::optional<CyclotomicProduct> quotient_q_over_p;
};

inline ZetaReport zeta_report(const StratumData& s) {
    ZetaReport r;
    r.zeta = zeta_function(s);
    r.tame_euler_char = tame_euler_char(s);
    if (r.tame_euler_char != -degree(r.zeta))
        fail(ErrorKind::InternalInconsistency, "tame Euler characteristic differs from -deg(zeta)");
    return r;
}

/// Full report for a curve; P_C, Q_C and Q_C / P_C must all be polynomials.
inline ZetaReport zeta_report(const FiberConfiguration& config) {
    require_valid_sncd(config, "zeta_report");
    ZetaReport r = zeta_report(as_strata(config));
    r.char_poly_h1 = char_poly_h1_factored(config);
    r.q_poly = q_poly_factored(config);
    r.quotient_q_over_p = cp_div(*r.q_poly, *r.char_poly_h1);
    for (const CyclotomicProduct* f : {&*r.char_poly_h1, &*r.q_poly, &*r.quotient_q_over_p})
        if (!is_polynomial(*f))
            fail(ErrorKind::NotAPolynomial,
                 "characteristic data is not polynomial; not a plausible full special fiber");
    if (degree(*r.char_poly_h1) != 2 - r.tame_euler_char)
        fail(ErrorKind::InternalInconsistency, "deg P_C differs from 2 - tame Euler characteristic");
    return r;
}

} // namespace tamefiber
