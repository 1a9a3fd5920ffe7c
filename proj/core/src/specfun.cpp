#include "esm2d/specfun.hpp"

#include <cmath>
#include <numbers>

#include "esm2d/errors.hpp"

namespace esm2d {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kGammaL = 0.577215664901532860606512090082L;

void check_order(int n) {
    if (n > kMaxOrder || n < -kMaxOrder)
        throw ConfigError("cylinder order exceeds the cap of " + std::to_string(kMaxOrder));
}

// power series; adequate for x < 2 where the terms decay immediately
long double j_small(int n, long double x) {
    if (x == 0.0L) return n == 0 ? 1.0L : 0.0L;
    long double t = std::exp(n * std::log(x / 2) - std::lgamma((long double)n + 1));
    long double s = t;
    const long double q = x * x / 4;
    for (int m = 1; m <= 60; ++m) {
        t *= -q / ((long double)m * (n + m));
        s += t;
        if (std::fabs(t) < 1e-22L * std::fabs(s)) break;
    }
    return s;
}

// downward recurrence normalized by J_0 + 2 sum J_{2k} = 1; for x >= 2 the
// growth from the seed order fits comfortably in long double; the start
// order depends only on x so every call reproduces bitwise identical values
std::vector<long double> j_downward(int nmax, long double x) {
    int start = std::max(kMaxOrder, (int)std::ceil((double)x)) + 52;
    if (start % 2) ++start;
    std::vector<long double> out((std::size_t)nmax + 1, 0.0L);
    long double fkp1 = 0.0L;
    long double fk = 1e-3000L;
    long double sum = 0.0L;
    for (int k = start; k >= 1; --k) {
        const long double fkm1 = (2.0L * k / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        if (k - 1 <= nmax) out[(std::size_t)(k - 1)] = fk;
        if ((k - 1) >= 2 && (k - 1) % 2 == 0) sum += 2.0L * fk;
    }
    sum += fk;  // fk is now f_0
    for (auto& v : out) v /= sum;
    return out;
}

std::vector<long double> j_all(int nmax, long double x) {
    if (x >= 2.0L) return j_downward(nmax, x);
    std::vector<long double> out((std::size_t)nmax + 1);
    for (int n = 0; n <= nmax; ++n) out[(std::size_t)n] = j_small(n, x);
    return out;
}

// log series for Y_0, Y_1 at x <= 14; long double absorbs the cancellation
void y01_series(long double x, long double& y0, long double& y1) {
    const long double lg = std::log(x / 2) + kGammaL;
    long double J0, J1;
    if (x >= 2.0L) {
        auto js = j_downward(1, x);
        J0 = js[0];
        J1 = js[1];
    } else {
        J0 = j_small(0, x);
        J1 = j_small(1, x);
    }
    const long double q = x * x / 4;

    long double t = 1.0L;   // (q)^k / (k!)^2, k = 0 term handled at k=1
    long double hk = 0.0L;
    long double s0 = 0.0L;
    for (int k = 1; k <= 80; ++k) {
        t *= q / ((long double)k * k);
        hk += 1.0L / k;
        const long double term = ((k % 2) ? 1.0L : -1.0L) * hk * t;
        s0 += term;
        if (std::fabs(term) < 1e-24L * (std::fabs(s0) + 1e-30L) && k > 4) break;
    }
    y0 = (2.0L / kPiL) * (lg * J0 + s0);

    long double u = 1.0L;   // q^k / (k! (k+1)!)
    long double hk1 = 1.0L; // H_{k+1}
    hk = 0.0L;
    long double s1 = (hk + hk1) * u;
    for (int k = 1; k <= 80; ++k) {
        u *= q / ((long double)k * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        const long double term = ((k % 2) ? -1.0L : 1.0L) * (hk + hk1) * u;
        s1 += term;
        if (std::fabs(term) < 1e-24L * (std::fabs(s1) + 1e-30L) && k > 4) break;
    }
    y1 = (2.0L / kPiL) * lg * J1 - 2.0L / (kPiL * x) - (x / (2.0L * kPiL)) * s1;
}

// Hankel asymptotic expansion for orders 0 and 1, x > 14
void pq_asymptotic(int n, long double x, long double& P, long double& Q) {
    const long double mu = 4.0L * n * n;
    long double a = 1.0L;
    P = 1.0L;
    Q = 0.0L;
    long double prev = 1e30L;
    for (int k = 1; k <= 30; ++k) {
        a *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (8.0L * x * k);
        if (std::fabs(a) > prev) break;
        prev = std::fabs(a);
        const int phase = k % 4;
        if (phase == 1)
            Q += a;
        else if (phase == 2)
            P -= a;
        else if (phase == 3)
            Q -= a;
        else
            P += a;
        if (std::fabs(a) < 1e-22L) break;
    }
}

void y01_asymptotic(long double x, long double& y0, long double& y1) {
    const long double amp = std::sqrt(2.0L / (kPiL * x));
    long double P, Q;
    pq_asymptotic(0, x, P, Q);
    long double chi = x - kPiL / 4;
    y0 = amp * (P * std::sin(chi) + Q * std::cos(chi));
    pq_asymptotic(1, x, P, Q);
    chi = x - 3 * kPiL / 4;
    y1 = amp * (P * std::sin(chi) + Q * std::cos(chi));
}

std::vector<long double> y_all(int nmax, long double x) {
    long double y0, y1;
    if (x <= 14.0L)
        y01_series(x, y0, y1);
    else
        y01_asymptotic(x, y0, y1);
    std::vector<long double> out((std::size_t)nmax + 1);
    out[0] = y0;
    if (nmax >= 1) out[1] = y1;
    for (int k = 1; k < nmax; ++k)
        out[(std::size_t)k + 1] = (2.0L * k / x) * out[(std::size_t)k] - out[(std::size_t)k - 1];
    return out;
}

}  // namespace

double bessel_j(int n, double x) {
    check_order(n);
    if (x < 0.0) throw DomainError("bessel_j: x must be >= 0");
    const int m = std::abs(n);
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const double v = (double)j_all(m, (long double)x)[(std::size_t)m];
    return (n < 0 && m % 2) ? -v : v;
}

double bessel_y(int n, double x) {
    check_order(n);
    if (!(x > 0.0)) throw DomainError("bessel_y: x must be > 0");
    const int m = std::abs(n);
    const double v = (double)y_all(m, (long double)x)[(std::size_t)m];
    return (n < 0 && m % 2) ? -v : v;
}

std::complex<double> hankel1(int n, double x) {
    return {bessel_j(n, x), bessel_y(n, x)};
}

std::complex<double> hankel1_deriv(int n, double x) {
    check_order(n);
    if (!(x > 0.0)) throw DomainError("hankel1_deriv: x must be > 0");
    const int m = std::abs(n);
    std::complex<double> d;
    if (m == 0) {
        d = -hankel1(1, x);
    } else {
        d = hankel1(m - 1, x) - (double)m / x * hankel1(m, x);
    }
    return (n < 0 && m % 2) ? -d : d;
}

std::vector<double> bessel_j_seq(int nmax, double x) {
    check_order(nmax);
    if (x < 0.0) throw DomainError("bessel_j_seq: x must be >= 0");
    std::vector<double> out((std::size_t)nmax + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const auto v = j_all(nmax, (long double)x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (double)v[i];
    return out;
}

std::vector<double> bessel_y_seq(int nmax, double x) {
    check_order(nmax);
    if (!(x > 0.0)) throw DomainError("bessel_y_seq: x must be > 0");
    const auto v = y_all(nmax, (long double)x);
    std::vector<double> out((std::size_t)nmax + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (double)v[i];
    return out;
}

}  // namespace esm2d
