#include "permcomp/series.hpp"

#include "permcomp/error.hpp"

namespace permcomp {

namespace {

const BigInt& at(const Polynomial& p, int i) {
  static const BigInt zero = 0;
  return i < static_cast<int>(p.size()) ? p[i] : zero;
}

const BigInt& at(const Grid& g, int i, int j) {
  static const BigInt zero = 0;
  if (i >= static_cast<int>(g.size())) return zero;
  return j < static_cast<int>(g[i].size()) ? g[i][j] : zero;
}

void check_unit(const BigInt& c) {
  if (c != 1 && c != -1) {
    throw Error(Errc::PreconditionViolated, "series denominator must have constant term 1 or -1");
  }
}

}  // namespace

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial binomial_power(long c, int e) {
  Polynomial out{1};
  for (int i = 0; i < e; ++i) out = multiply(out, Polynomial{1, c});
  return out;
}

std::vector<BigInt> RationalSeries::expand(int order) const {
  check_unit(at(denominator, 0));
  std::vector<BigInt> q(order + 1);
  for (int n = 0; n <= order; ++n) {
    BigInt acc = at(numerator, n);
    for (int j = 1; j <= n && j < static_cast<int>(denominator.size()); ++j) acc -= denominator[j] * q[n - j];
    q[n] = acc / denominator[0];
  }
  return q;
}

Grid BivariateSeries::expand(int max_x, int max_y) const {
  const BigInt& lead = at(denominator, 0, 0);
  check_unit(lead);
  Grid q(max_x + 1, std::vector<BigInt>(max_y + 1));
  for (int i = 0; i <= max_x; ++i) {
    for (int j = 0; j <= max_y; ++j) {
      BigInt acc = at(numerator, i, j);
      for (int a = 0; a <= i && a < static_cast<int>(denominator.size()); ++a) {
        for (int b = 0; b <= j && b < static_cast<int>(denominator[a].size()); ++b) {
          if (a == 0 && b == 0) continue;
          acc -= denominator[a][b] * q[i - a][j - b];
        }
      }
      q[i][j] = acc / lead;
    }
  }
  return q;
}

RationalSeries fm_function(int m) {
  if (m < 1) throw Error(Errc::UnsupportedM, "F_m needs m >= 1");
  Polynomial numerator(2 * m + 2);
  numerator[2 * m + 1] = 1;
  return {numerator, multiply(binomial_power(-2, 2), binomial_power(-1, m - 1))};
}

BivariateSeries h_function() {
  // Numerator x y³ − x y⁴.
  Grid numerator(2, std::vector<BigInt>(5));
  numerator[1][3] = 1;
  numerator[1][4] = -1;
  // (1−2y)² = 1 − 4y + 4y², times (1 − y) − x y².
  const Polynomial square = binomial_power(-2, 2);
  const Polynomial x0 = multiply(square, Polynomial{1, -1});
  const Polynomial x1 = multiply(square, Polynomial{0, 0, -1});
  return {numerator, Grid{x0, x1}};
}

std::vector<BigInt> series_Fm(int m, int order) { return fm_function(m).expand(order); }

Grid series_H(int max_m, int max_n) { return h_function().expand(max_m, max_n); }

}  // namespace permcomp
