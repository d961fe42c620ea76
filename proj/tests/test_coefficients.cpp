#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wirtlab/coefficients.hpp"

#include <stdexcept>
#include <vector>

using namespace wirtlab;

namespace {

// Evaluation oracle: a degree-m polynomial is pinned by m+1 values, so
// checking the coefficient list against the direct product at m+4 integer
// points certifies the expansion without re-running it.
BigInt product_Q(int m, const BigInt& t) {
    BigInt acc = 1;
    for (int j = 1; j <= m; ++j) acc *= t - BigInt(j) * j;
    return acc;
}

BigInt product_P(int m, const BigInt& t) {
    BigInt acc = 1;
    for (int j = 2; j <= m; ++j) acc *= t - BigInt(j) * j;
    return acc;
}

BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& t) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

} // namespace

TEST_CASE("expand_Q matches the printed low-order values") {
    CHECK(expand_Q(1).coeffs == ints({-1, 1}));
    CHECK(expand_Q(2).coeffs == ints({4, -5, 1}));
    CHECK(expand_Q(3).coeffs == ints({-36, 49, -14, 1}));
    CHECK(expand_Q(4).coeffs == ints({576, -820, 273, -30, 1}));
}

TEST_CASE("expand_P matches the printed low-order values") {
    CHECK(expand_P(1).coeffs == ints({1}));
    CHECK(expand_P(2).coeffs == ints({-4, 1}));
    CHECK(expand_P(3).coeffs == ints({36, -13, 1}));
    CHECK(expand_P(4).coeffs == ints({-576, 244, -29, 1}));
}

TEST_CASE("expand_S matches the printed low-order values") {
    CHECK(expand_S(1) == ints({1}));
    CHECK(expand_S(2) == ints({-3, 1}));
    CHECK(expand_S(3) == ints({24, -12, 1}));
    CHECK(expand_S(4) == ints({-360, 216, -28, 1}));
    CHECK(expand_S(4)[0] - expand_S(4)[1] == -factorial(4) * factorial(4));
}

TEST_CASE("order zero is rejected") {
    CHECK_THROWS_AS(expand_Q(0), std::invalid_argument);
    CHECK_THROWS_AS(expand_P(0), std::invalid_argument);
    CHECK_THROWS_AS(expand_S(0), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientTable::make(0), std::invalid_argument);
}

TEST_CASE("expansions agree with the evaluation oracle up to m = 12") {
    for (int m = 1; m <= 12; ++m) {
        const auto q = expand_Q(m);
        const auto p = expand_P(m);
        REQUIRE(q.degree() == m);
        REQUIRE(p.degree() == (m == 1 ? 0 : m - 1));
        for (int t = 0; t <= m + 3; ++t) {
            CHECK(horner(q.coeffs, t) == product_Q(m, t));
            CHECK(horner(p.coeffs, t) == product_P(m, t));
        }
    }
}

TEST_CASE("roots: Q_m(j^2) = 0 for j <= m, P_m(j^2) = 0 for 2 <= j <= m") {
    for (int m = 1; m <= 12; ++m) {
        const auto q = expand_Q(m);
        const auto p = expand_P(m);
        for (int j = 1; j <= m; ++j) CHECK(q.evaluate(BigInt(j) * j) == 0);
        for (int j = 2; j <= m; ++j) CHECK(p.evaluate(BigInt(j) * j) == 0);
        CHECK(q.evaluate(BigInt(m + 1) * (m + 1)) != 0);
    }
}

TEST_CASE("Q_m = (t - 1) P_m as an exact polynomial identity") {
    for (int m = 1; m <= 12; ++m) {
        IntPolynomial p = expand_P(m);
        p.multiply_linear(1);
        CHECK(p == expand_Q(m));
    }
}

TEST_CASE("telescoping identity lambda_{m,k} = S_{m,k} - S_{m,k+1}") {
    for (int m = 1; m <= 12; ++m) {
        const auto table = CoefficientTable::make(m);
        for (int k = 0; k <= m - 1; ++k)
            CHECK(table.lambda_at(k) == table.S_at(k) - table.S_at(k + 1));
    }
}

TEST_CASE("closed forms for S_{m,0} and S_{m,0} - S_{m,1}") {
    for (int m = 2; m <= 12; ++m) {
        const auto s = expand_S(m);
        const int sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{m-1}
        CHECK(s[0] == sign * factorial(m - 1) * factorial(m + 1) / 2);
        CHECK(s[0] - s[1] == sign * factorial(m) * factorial(m));
    }
}

TEST_CASE("tables are monic and sized by the order") {
    for (int m = 1; m <= 12; ++m) {
        const auto t = CoefficientTable::make(m);
        CHECK(t.c.size() == static_cast<std::size_t>(m) + 1);
        CHECK(t.lambda.size() == static_cast<std::size_t>(m));
        CHECK(t.S.size() == static_cast<std::size_t>(m));
        CHECK(t.c.back() == 1);
        CHECK(t.lambda.back() == 1);
        CHECK(t.S_at(m) == 0);
    }
}

TEST_CASE("recurrences hold for every consecutive pair up to m = 12") {
    for (int m = 1; m < 12; ++m)
        CHECK(check_recurrences(CoefficientTable::make(m), CoefficientTable::make(m + 1)));
}

TEST_CASE("check_recurrences examples and error paths") {
    const auto t1 = CoefficientTable::make(1);
    const auto t2 = CoefficientTable::make(2);
    const auto t3 = CoefficientTable::make(3);
    const auto t4 = CoefficientTable::make(4);
    CHECK(check_recurrences(t1, t2));  // c_{2,0} = 0 - 4 * (-1) = 4
    CHECK(check_recurrences(t2, t3));  // c_{3,1} = 4 + 45 = 49
    CHECK(check_recurrences(t3, t4));

    CHECK_THROWS_AS(check_recurrences(t1, t3), std::invalid_argument);

    CoefficientTable corrupted = t3;
    corrupted.c[1] += 1;
    CHECK_FALSE(check_recurrences(t2, corrupted));
}

TEST_CASE("IntPolynomial basics") {
    const IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);
    CHECK(zero.at(5) == 0);
    CHECK(zero.at(-1) == 0);

    IntPolynomial p(ints({2, 0, 0}));  // trailing zeros trimmed
    CHECK(p.degree() == 0);
    p.multiply_linear(3);  // 2(t - 3)
    CHECK(p.coeffs == ints({-6, 2}));
    CHECK(p.evaluate(3) == 0);
    CHECK(p.evaluate(10) == 14);
}
