#include "special_functions.hpp"

#include "errors.hpp"

namespace fockproj {

std::complex<double> bessel_i0(std::complex<double> z) {
    require(std::abs(z) <= bessel_i0_guard_radius, errc::guard_exceeded,
            "bessel_i0 argument outside the series guard radius");
    const std::complex<double> q = z * z / 4.0;
    std::complex<double> sum = 1.0;
    std::complex<double> term = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / static_cast<double>(k * k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace fockproj
