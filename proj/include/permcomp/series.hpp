#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcomp {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients c₀, c₁, … of a polynomial in one variable.
using Polynomial = std::vector<BigInt>;
/// grid[i][j] is the coefficient of xⁱ yʲ.
using Grid = std::vector<std::vector<BigInt>>;

Polynomial multiply(const Polynomial& a, const Polynomial& b);
/// (1 + c·y)^e as a polynomial.
Polynomial binomial_power(long c, int e);

/// numerator / denominator as a formal power series. The denominator must
/// have constant term ±1 so the expansion stays integral.
struct RationalSeries {
  Polynomial numerator;
  Polynomial denominator;

  /// Coefficients of y⁰ … y^order, by exact long division.
  std::vector<BigInt> expand(int order) const;
};

/// Same, in two variables.
struct BivariateSeries {
  Grid numerator;
  Grid denominator;

  /// Coefficients of xⁱ yʲ for i ≤ max_x, j ≤ max_y.
  Grid expand(int max_x, int max_y) const;
};

/// y^{2m+1} / ((1−2y)² (1−y)^{m−1}).
RationalSeries fm_function(int m);
/// x y³ (1−y) / ((1−2y)² (1−y−x y²)).
BivariateSeries h_function();

/// First order+1 coefficients of F_m.
std::vector<BigInt> series_Fm(int m, int order);
/// [x^m yⁿ] H for m ≤ max_m, n ≤ max_n.
Grid series_H(int max_m, int max_n);

}  // namespace permcomp
