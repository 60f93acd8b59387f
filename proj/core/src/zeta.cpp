#include "ellinf/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "ellinf/numeric.hpp"

namespace ellinf {

double zeta(int s) {
    if (s < 2) throw std::invalid_argument("zeta: argument must be >= 2");
    const int N = 256;
    StableSum acc;
    for (int n = N; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -s));
    const double Nd = N;
    double r = acc.get();
    // Euler-Maclaurin tail through the B4 term; the first omitted term is
    // O(N^{-s-5}) and negligible at this N.
    r += std::pow(Nd, 1.0 - s) / (s - 1.0);
    r -= 0.5 * std::pow(Nd, -static_cast<double>(s));
    r += (s / 12.0) * std::pow(Nd, -s - 1.0);
    r -= (s * (s + 1.0) * (s + 2.0) / 720.0) * std::pow(Nd, -s - 3.0);
    return r;
}

}  // namespace ellinf
