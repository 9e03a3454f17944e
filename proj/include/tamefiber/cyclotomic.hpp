#pragma once

// Exact integer polynomials and formal products of cyclotomic polynomials.
// Every zeta function and characteristic polynomial in this library is a
// product of powers of Phi_d, so rational functions are only ever held in that
// factored form.

#include "tamefiber/arith.hpp"
#include "tamefiber/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tamefiber {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in Z[t], coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
        normalize();
    }
    IntegerPolynomial(std::initializer_list<long long> coefficients) {
        for (long long c : coefficients) coeffs_.emplace_back(c);
        normalize();
    }

    static IntegerPolynomial constant(BigInt c) { return IntegerPolynomial(std::vector<BigInt>{std::move(c)}); }

    /// t^n - 1
    static IntegerPolynomial binomial(Int n) {
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
        c.front() = -1;
        c.back() = 1;
        return IntegerPolynomial(std::move(c));
    }

    [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] Int degree() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
    [[nodiscard]] const BigInt& leading() const { return coeffs_.back(); }
    [[nodiscard]] bool is_monic() const { return !is_zero() && leading() == 1; }

    friend IntegerPolynomial operator*(const IntegerPolynomial& x, const IntegerPolynomial& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<BigInt> out(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return IntegerPolynomial(std::move(out));
    }

    friend IntegerPolynomial operator-(const IntegerPolynomial& x, const IntegerPolynomial& y) {
        std::vector<BigInt> out(std::max(x.coeffs_.size(), y.coeffs_.size()), 0);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) out[i] += x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) out[i] -= y.coeffs_[i];
        return IntegerPolynomial(std::move(out));
    }

    /// Exact division by a monic divisor. A nonzero remainder is an internal
    /// error: callers only divide where divisibility is a theorem.
    [[nodiscard]] IntegerPolynomial exact_div(const IntegerPolynomial& divisor) const {
        if (!divisor.is_monic())
            fail(ErrorKind::InternalInconsistency, "exact_div: divisor must be monic");
        if (is_zero()) return {};
        if (degree() < divisor.degree())
            fail(ErrorKind::InternalInconsistency, "exact_div: nonzero remainder");
        std::vector<BigInt> rem = coeffs_;
        const std::size_t dd = divisor.coeffs_.size() - 1;
        std::vector<BigInt> quot(rem.size() - dd, 0);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const BigInt q = rem[k + dd];
            quot[k] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
        }
        for (std::size_t k = 0; k < dd; ++k)
            if (rem[k] != 0) fail(ErrorKind::InternalInconsistency, "exact_div: nonzero remainder");
        return IntegerPolynomial(std::move(quot));
    }

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// e.g. "t^2 - t + 1"
    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const BigInt& c = coeffs_[k];
            if (c == 0) continue;
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (first) os << (negative ? "-" : "");
            else os << (negative ? " - " : " + ");
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << 't';
            if (k >= 2) os << '^' << k;
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

namespace detail {

struct CyclotomicMemo {
    std::mutex mutex;
    std::map<Int, IntegerPolynomial> table;
};

inline CyclotomicMemo& cyclotomic_memo() {
    static CyclotomicMemo memo;
    return memo;
}

} // namespace detail

/// Phi_d, via Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e. Memoized per process.
inline IntegerPolynomial cyclotomic_poly(Int d) {
    if (d < 1) fail(ErrorKind::InvalidParameter, "cyclotomic_poly: d must be >= 1");
    auto& memo = detail::cyclotomic_memo();
    {
        std::lock_guard lock(memo.mutex);
        if (auto it = memo.table.find(d); it != memo.table.end()) return it->second;
    }
    IntegerPolynomial result = IntegerPolynomial::binomial(d);
    for (Int e : divisors(d))
        if (e < d) result = result.exact_div(cyclotomic_poly(e));
    std::lock_guard lock(memo.mutex);
    return memo.table.emplace(d, std::move(result)).first->second;
}

/// prod_d Phi_d(t)^{e_d}; zero exponents are never stored.
class CyclotomicProduct {
public:
    using ExponentMap = std::map<Int, Int>;

    CyclotomicProduct() = default;
    explicit CyclotomicProduct(const ExponentMap& exponents) {
        for (const auto& [d, e] : exponents) {
            if (d < 1) fail(ErrorKind::InvalidParameter, "cyclotomic index must be >= 1");
            if (e != 0) exps_.emplace(d, e);
        }
    }
    CyclotomicProduct(std::initializer_list<std::pair<const Int, Int>> exponents)
        : CyclotomicProduct(ExponentMap(exponents)) {}

    [[nodiscard]] const ExponentMap& exponents() const noexcept { return exps_; }
    [[nodiscard]] bool is_one() const noexcept { return exps_.empty(); }

    [[nodiscard]] Int exponent(Int d) const {
        const auto it = exps_.find(d);
        return it == exps_.end() ? 0 : it->second;
    }

    friend bool operator==(const CyclotomicProduct&, const CyclotomicProduct&) = default;

private:
    ExponentMap exps_;
};

/// t^n - 1 = prod_{d | n} Phi_d
inline CyclotomicProduct binomial_factorization(Int n) {
    if (n < 1) fail(ErrorKind::InvalidParameter, "binomial_factorization: n must be >= 1");
    CyclotomicProduct::ExponentMap m;
    for (Int d : divisors(n)) m[d] = 1;
    return CyclotomicProduct(m);
}

inline CyclotomicProduct cp_mul(const CyclotomicProduct& a, const CyclotomicProduct& b) {
    CyclotomicProduct::ExponentMap m = a.exponents();
    for (const auto& [d, e] : b.exponents()) m[d] += e;
    return CyclotomicProduct(m);
}

inline CyclotomicProduct cp_pow(const CyclotomicProduct& a, Int k) {
    CyclotomicProduct::ExponentMap m;
    for (const auto& [d, e] : a.exponents()) m[d] = e * k;
    return CyclotomicProduct(m);
}

inline CyclotomicProduct cp_div(const CyclotomicProduct& a, const CyclotomicProduct& b) {
    return cp_mul(a, cp_pow(b, -1));
}

inline bool is_polynomial(const CyclotomicProduct& a) {
    for (const auto& [d, e] : a.exponents())
        if (e < 0) return false;
    return true;
}

/// Degree of the rational function: numerator minus denominator.
inline Int degree(const CyclotomicProduct& a) {
    Int total = 0;
    for (const auto& [d, e] : a.exponents()) total += e * euler_phi(d);
    return total;
}

inline IntegerPolynomial expand(const CyclotomicProduct& a) {
    if (!is_polynomial(a))
        fail(ErrorKind::NotAPolynomial, "product has a negative cyclotomic exponent");
    IntegerPolynomial out = IntegerPolynomial::constant(1);
    for (const auto& [d, e] : a.exponents()) {
        const IntegerPolynomial phi = cyclotomic_poly(d);
        for (Int k = 0; k < e; ++k) out = out * phi;
    }
    return out;
}

/// Orders, as roots of unity, of the roots of a polynomial-valued product.
inline std::set<Int> root_orders(const CyclotomicProduct& a) {
    if (!is_polynomial(a))
        fail(ErrorKind::NotAPolynomial, "root_orders needs a polynomial-valued product");
    std::set<Int> out;
    for (const auto& [d, e] : a.exponents()) out.insert(d);
    return out;
}

/// Exponent-wise domination: a divides b as polynomials.
inline bool divides(const CyclotomicProduct& a, const CyclotomicProduct& b) {
    return is_polynomial(cp_div(b, a));
}

/// "Phi6 / Phi1^2" style rendering; "1" for the empty product.
inline std::string to_string(const CyclotomicProduct& a) {
    std::string num, den;
    for (const auto& [d, e] : a.exponents()) {
        std::string& target = e > 0 ? num : den;
        if (!target.empty()) target += " * ";
        target += "Phi" + std::to_string(d);
        const Int mag = e > 0 ? e : -e;
        if (mag != 1) target += "^" + std::to_string(mag);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + " / (" + den + ")";
}

} // namespace tamefiber
