#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace wirtlab {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial with exact arbitrary-precision coefficients, stored in
/// ascending degree order. The leading coefficient is nonzero unless the
/// polynomial is the zero polynomial (represented as the single coefficient 0).
struct IntPolynomial {
    std::vector<BigInt> coeffs{BigInt(0)};

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }

    /// Coefficient of t^k, with out-of-range indices read as 0.
    BigInt at(int k) const;

    BigInt evaluate(const BigInt& t) const;

    /// Multiply in place by the monic linear factor (t - root).
    void multiply_linear(const BigInt& root);

    bool operator==(const IntPolynomial&) const = default;
};

/// Q_m(t) = prod_{j=1}^{m} (t - j^2); its coefficients are the order-m family
/// c_{m,0..m} (central factorial numbers of even indices, first kind).
IntPolynomial expand_Q(int m);

/// P_m(t): the constant 1 for m = 1, else prod_{j=2}^{m} (t - j^2); its
/// coefficients are lambda_{m,0..m-1}.
IntPolynomial expand_P(int m);

/// The list S_{m,0..m-1}: S_{m,0} = P_m(1), and S_{m,1..m-1} are the
/// coefficients of (P_m(t) - P_m(1)) / (t - 1), obtained by exact synthetic
/// division (the remainder must vanish identically).
std::vector<BigInt> expand_S(int m);

/// The coefficient triple (c, lambda, S) for one order m. S_{m,m} = 0 by
/// convention; all out-of-range indices read as 0.
struct CoefficientTable {
    int m = 1;
    std::vector<BigInt> c;       // size m+1, monic
    std::vector<BigInt> lambda;  // size m, monic
    std::vector<BigInt> S;       // size m

    static CoefficientTable make(int m);

    BigInt c_at(int k) const;
    BigInt lambda_at(int k) const;
    BigInt S_at(int k) const;
};

/// True iff all three order-(m+1)-from-order-m recurrences hold exactly:
///   c_{m+1,k}      = c_{m,k-1}      - (m+1)^2 c_{m,k}
///   lambda_{m+1,k} = lambda_{m,k-1} - (m+1)^2 lambda_{m,k}
///   S_{m+1,k}      = S_{m,k-1}      - (m+1)^2 S_{m,k}   for k >= 1.
bool check_recurrences(const CoefficientTable& table_m, const CoefficientTable& table_m1);

} // namespace wirtlab
