#include "tamefiber/cyclotomic.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace tamefiber;

namespace {

// Independent oracle: Phi_d = prod_{e | d} (t^e - 1)^{mu(d/e)}, evaluated with
// plain machine integers (coefficients stay tiny for d <= 200).
int mobius(Int n) {
    int sign = 1;
    for (Int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

std::vector<long long> mul_binomial(const std::vector<long long>& p, Int e) {
    std::vector<long long> out(p.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] -= p[k];
        out[k + static_cast<std::size_t>(e)] += p[k];
    }
    return out;
}

std::vector<long long> div_binomial(const std::vector<long long>& p, Int e) {
    // p = q (t^e - 1)  =>  q_k = q_{k-e} - p_k read from the bottom.
    const std::size_t se = static_cast<std::size_t>(e);
    std::vector<long long> q(p.size() - se, 0);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = (k >= se ? q[k - se] : 0) - p[k];
    return q;
}

std::vector<long long> mobius_cyclotomic(Int d) {
    std::vector<long long> p{1};
    for (Int e = 1; e <= d; ++e)
        if (d % e == 0 && mobius(d / e) == 1) p = mul_binomial(p, e);
    for (Int e = 1; e <= d; ++e)
        if (d % e == 0 && mobius(d / e) == -1) p = div_binomial(p, e);
    return p;
}

IntegerPolynomial from_ll(const std::vector<long long>& v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return IntegerPolynomial(std::move(c));
}

CyclotomicProduct random_polynomial_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> index(1, 30), exponent(0, 2), count(0, 4);
    CyclotomicProduct::ExponentMap m;
    for (Int k = count(rng); k > 0; --k) m[index(rng)] += exponent(rng);
    return CyclotomicProduct(m);
}

} // namespace

TEST_CASE("cyclotomic_poly small cases", "[cyclotomic]") {
    CHECK(cyclotomic_poly(1) == IntegerPolynomial{-1, 1});
    CHECK(cyclotomic_poly(2) == IntegerPolynomial{1, 1});
    CHECK(cyclotomic_poly(4) == IntegerPolynomial{1, 0, 1});
    CHECK(cyclotomic_poly(6) == IntegerPolynomial{1, -1, 1});
    CHECK(cyclotomic_poly(6).to_string() == "t^2 - t + 1");
    CHECK_THROWS_AS(cyclotomic_poly(0), Error);
}

TEST_CASE("cyclotomic_poly matches the Mobius product for d <= 200", "[cyclotomic][oracle]") {
    for (Int d = 1; d <= 200; ++d) {
        const IntegerPolynomial phi = cyclotomic_poly(d);
        INFO("d = " << d);
        CHECK(phi == from_ll(mobius_cyclotomic(d)));
        CHECK(phi.is_monic());
        CHECK(phi.degree() == euler_phi(d));
    }
}

TEST_CASE("Phi_105 is the first with a coefficient outside {-1,0,1}", "[cyclotomic]") {
    for (Int d = 1; d < 105; ++d) {
        const IntegerPolynomial small = cyclotomic_poly(d);
        for (const BigInt& c : small.coefficients()) REQUIRE((c >= -1 && c <= 1));
    }
    const IntegerPolynomial phi = cyclotomic_poly(105);
    const auto& c105 = phi.coefficients();
    CHECK(c105[7] == -2);
    CHECK(c105[41] == -2);
}

TEST_CASE("binomial_factorization", "[cyclotomic]") {
    CHECK(binomial_factorization(1) == CyclotomicProduct({{1, 1}}));
    CHECK(binomial_factorization(6) == CyclotomicProduct({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
    CHECK(binomial_factorization(9) == CyclotomicProduct({{1, 1}, {3, 1}, {9, 1}}));
}

TEST_CASE("expand(binomial_factorization(n)) is t^n - 1 for n <= 100", "[cyclotomic][oracle]") {
    for (Int n = 1; n <= 100; ++n) {
        std::vector<long long> direct(static_cast<std::size_t>(n) + 1, 0);
        direct.front() = -1;
        direct.back() = 1;
        INFO("n = " << n);
        CHECK(expand(binomial_factorization(n)) == from_ll(direct));
        CHECK(degree(binomial_factorization(n)) == n);
    }
}

TEST_CASE("cp_mul and cp_pow", "[cyclotomic]") {
    CHECK(cp_mul(CyclotomicProduct({{1, 2}}), CyclotomicProduct({{1, -2}})).is_one());
    CHECK(cp_mul(binomial_factorization(6), cp_pow(binomial_factorization(2), -1)) ==
          CyclotomicProduct({{3, 1}, {6, 1}}));
    CHECK(cp_pow(CyclotomicProduct({{2, 1}}), 3) == CyclotomicProduct({{2, 3}}));
    CHECK(cp_pow(CyclotomicProduct({{2, 1}}), 0).is_one());
}

TEST_CASE("expand, root_orders and degree", "[cyclotomic]") {
    CHECK(expand(CyclotomicProduct()) == IntegerPolynomial{1});
    CHECK(expand(CyclotomicProduct({{1, 2}})) == IntegerPolynomial{1, -2, 1});
    CHECK(expand(CyclotomicProduct({{6, 1}})) == IntegerPolynomial{1, -1, 1});
    CHECK_THROWS_MATCHES(expand(CyclotomicProduct({{1, -1}})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::NotAPolynomial; }));

    CHECK(root_orders(CyclotomicProduct({{1, 2}})) == std::set<Int>{1});
    CHECK(root_orders(CyclotomicProduct({{1, 2}, {6, 1}})) == std::set<Int>{1, 6});
    CHECK(root_orders(CyclotomicProduct()).empty());
    CHECK_THROWS_AS(root_orders(CyclotomicProduct({{3, -1}})), Error);

    CHECK(degree(CyclotomicProduct({{1, -2}, {6, 1}})) == 0);
    CHECK(degree(CyclotomicProduct({{1, 2}})) == 2);
}

TEST_CASE("expand is multiplicative and root orders are subadditive", "[cyclotomic][property]") {
    std::mt19937_64 rng(20261017);
    for (int trial = 0; trial < 200; ++trial) {
        const CyclotomicProduct a = random_polynomial_product(rng);
        const CyclotomicProduct b = random_polynomial_product(rng);
        const CyclotomicProduct ab = cp_mul(a, b);
        CHECK(expand(ab) == expand(a) * expand(b));
        CHECK(expand(ab).degree() == degree(ab));
        std::set<Int> both = root_orders(a);
        both.merge(root_orders(b));
        for (Int o : root_orders(ab)) CHECK(both.count(o) == 1);
    }
}

TEST_CASE("exact division rejects a remainder", "[cyclotomic]") {
    const IntegerPolynomial p{1, 0, 1};
    CHECK_THROWS_AS(p.exact_div(IntegerPolynomial{-1, 1}), Error);
    CHECK(IntegerPolynomial::binomial(4).exact_div(IntegerPolynomial{-1, 1}) == IntegerPolynomial{1, 1, 1, 1});
}
