#include "wirtlab/coefficients.hpp"

#include <stdexcept>
#include <utility>

namespace wirtlab {

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0);
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::at(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void IntPolynomial::multiply_linear(const BigInt& root) {
    coeffs.push_back(0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k)
        coeffs[k] = coeffs[k - 1] - root * coeffs[k];
    coeffs[0] = -root * coeffs[0];
}

IntPolynomial expand_Q(int m) {
    if (m < 1) throw std::invalid_argument("expand_Q: order m must be >= 1");
    IntPolynomial q(std::vector<BigInt>{1});
    for (int j = 1; j <= m; ++j) q.multiply_linear(BigInt(j) * j);
    return q;
}

IntPolynomial expand_P(int m) {
    if (m < 1) throw std::invalid_argument("expand_P: order m must be >= 1");
    IntPolynomial p(std::vector<BigInt>{1});
    for (int j = 2; j <= m; ++j) p.multiply_linear(BigInt(j) * j);
    return p;
}

std::vector<BigInt> expand_S(int m) {
    const IntPolynomial p = expand_P(m);
    const BigInt p_at_one = p.evaluate(1);

    std::vector<BigInt> s(static_cast<std::size_t>(m));
    s[0] = p_at_one;
    if (m == 1) return s;  // the quotient polynomial is empty

    // Synthetic division of d(t) = P_m(t) - P_m(1) by (t - 1): with root 1 the
    // quotient satisfies q_{D-1} = d_D and q_{k-1} = d_k + q_k.
    std::vector<BigInt> d = p.coeffs;
    d[0] -= p_at_one;
    const std::size_t deg = d.size() - 1;
    std::vector<BigInt> q(deg);
    q[deg - 1] = d[deg];
    for (std::size_t k = deg - 1; k > 0; --k) q[k - 1] = d[k] + q[k];
    const BigInt remainder = d[0] + q[0];
    if (remainder != 0)
        throw std::logic_error("expand_S: nonzero synthetic-division remainder");

    for (int k = 1; k < m; ++k) s[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k - 1)];
    return s;
}

CoefficientTable CoefficientTable::make(int m) {
    if (m < 1) throw std::invalid_argument("CoefficientTable: order m must be >= 1");
    CoefficientTable t;
    t.m = m;
    t.c = expand_Q(m).coeffs;
    t.lambda = expand_P(m).coeffs;
    t.S = expand_S(m);
    return t;
}

namespace {
BigInt list_at(const std::vector<BigInt>& v, int k) {
    if (k < 0 || k >= static_cast<int>(v.size())) return 0;
    return v[static_cast<std::size_t>(k)];
}
} // namespace

BigInt CoefficientTable::c_at(int k) const { return list_at(c, k); }
BigInt CoefficientTable::lambda_at(int k) const { return list_at(lambda, k); }
BigInt CoefficientTable::S_at(int k) const { return list_at(S, k); }

bool check_recurrences(const CoefficientTable& table_m, const CoefficientTable& table_m1) {
    if (table_m1.m != table_m.m + 1)
        throw std::invalid_argument("check_recurrences: orders must be consecutive");
    const BigInt step = BigInt(table_m1.m) * table_m1.m;  // (m+1)^2

    for (int k = 0; k <= table_m1.m; ++k)
        if (table_m1.c_at(k) != table_m.c_at(k - 1) - step * table_m.c_at(k)) return false;
    for (int k = 0; k <= table_m1.m - 1; ++k)
        if (table_m1.lambda_at(k) != table_m.lambda_at(k - 1) - step * table_m.lambda_at(k))
            return false;
    for (int k = 1; k <= table_m1.m - 1; ++k)
        if (table_m1.S_at(k) != table_m.S_at(k - 1) - step * table_m.S_at(k)) return false;
    return true;
}

} // namespace wirtlab
