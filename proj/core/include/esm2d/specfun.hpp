#pragma once

#include <complex>
#include <vector>

namespace esm2d {

// hard cap on cylinder-function orders; callers truncate below it
inline constexpr int kMaxOrder = 120;

// J_n(x) for integer n, |n| <= kMaxOrder, x >= 0
double bessel_j(int n, double x);

// Y_n(x), x > 0
double bessel_y(int n, double x);

// H_n^(1)(x) = J_n(x) + i Y_n(x), x > 0
std::complex<double> hankel1(int n, double x);

// d/dx H_n^(1)(x)
std::complex<double> hankel1_deriv(int n, double x);

// J_0..J_nmax in one downward sweep
std::vector<double> bessel_j_seq(int nmax, double x);

// Y_0..Y_nmax by upward recurrence
std::vector<double> bessel_y_seq(int nmax, double x);

}  // namespace esm2d
