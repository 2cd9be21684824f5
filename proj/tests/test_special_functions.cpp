#include <doctest.h>

#include <cmath>
#include <complex>

#include "special_functions.hpp"
#include "errors.hpp"

using namespace fockproj;
using cplxd = std::complex<double>;

namespace {

// Downward-recurrence oracle for I_0 at real argument (Miller's algorithm,
// normalized with e^x = I0 + 2 Σ_{k>=1} I_k). Independent of the series path.
double i0_downward_recurrence(double x) {
    if (x == 0.0) return 1.0;
    const int start = 40 + static_cast<int>(2.0 * x);
    double ip1 = 0.0, i = 1e-30;
    double sum = 0.0, i0 = 0.0;
    for (int k = start; k >= 1; --k) {
        double im1 = ip1 + (2.0 * k / x) * i;
        ip1 = i;
        i = im1;
        if (k == 1)
            i0 = i;
        else
            sum += ip1;
        // rescale to avoid overflow
        if (std::abs(i) > 1e250) {
            i *= 1e-250;
            ip1 *= 1e-250;
            sum *= 1e-250;
            i0 *= 1e-250;
        }
    }
    sum = 2.0 * (sum + ip1);  // 2 Σ_{k>=1} I_k with the final ip1 = I_1
    return i0 * std::exp(x) / (i0 + sum);
}

// Alternating series for J_0; cross-checks I0(ix) = J0(x).
double j0_series(double x) {
    double q = -x * x / 4.0;
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (k * k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel I0 at zero") { CHECK(bessel_i0(0.0) == cplxd(1.0)); }

TEST_CASE("bessel I0 against the downward-recurrence oracle on [0, 10]") {
    for (double x = 0.25; x <= 10.0; x += 0.25) {
        double oracle = i0_downward_recurrence(x);
        cplxd series = bessel_i0(x);
        CHECK(std::abs(series.imag()) < 1e-16 * std::abs(series.real()) + 1e-300);
        CHECK(std::abs(series.real() - oracle) < 1e-12 * oracle);
    }
    CHECK(std::abs(bessel_i0(1.0).real() - i0_downward_recurrence(1.0)) < 1e-13);
    CHECK(bessel_i0(1.0).real() == doctest::Approx(1.2660658).epsilon(1e-7));
}

TEST_CASE("bessel I0 at imaginary argument equals J0") {
    CHECK(std::abs(bessel_i0(cplxd(0.0, 2.0)) - cplxd(j0_series(2.0))) < 1e-14);
    CHECK(bessel_i0(cplxd(0.0, 2.0)).real() == doctest::Approx(0.2238908).epsilon(1e-6));
    CHECK(std::abs(bessel_i0(cplxd(0.0, 5.5)) - cplxd(j0_series(5.5))) < 1e-13);
}

TEST_CASE("bessel I0 is even") {
    for (cplxd z : {cplxd(1.2, 0.4), cplxd(-3.0, 2.5), cplxd(0.0, -7.0)})
        CHECK(std::abs(bessel_i0(z) - bessel_i0(-z)) == 0.0);
}

TEST_CASE("bessel I0 guard radius") {
    CHECK_NOTHROW(bessel_i0(cplxd(49.9, 0.0)));
    CHECK_THROWS_AS(bessel_i0(cplxd(50.5, 0.0)), Error);
    CHECK_THROWS_AS(bessel_i0(cplxd(40.0, 40.0)), Error);
}
