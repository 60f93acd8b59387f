#ifndef ELLINF_NUMERIC_HPP
#define ELLINF_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace ellinf {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Integer power by repeated squaring; negative exponents go through 1/w^|k|.
// Keeps everything in plain multiplies so that ipow(-w, k) == (-1)^k * ipow(w, k)
// holds exactly in floating point.
inline cplx ipow(cplx w, int k) {
    if (k < 0) return 1.0 / ipow(w, -k);
    cplx acc(1.0, 0.0);
    cplx base = w;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Neumaier variant of compensated summation.
class StableSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double get() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Componentwise compensated accumulation of complex terms.
class StableCplxSum {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx get() const { return {re_.get(), im_.get()}; }

private:
    StableSum re_, im_;
};

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::int64_t factorial_i(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::int64_t binomial_i(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline double binomial(int n, int k) { return static_cast<double>(binomial_i(n, k)); }

// Parity of the binomial coefficient C(n,2) = n(n-1)/2, used by several sign rules.
inline int choose2_parity(int n) {
    return static_cast<int>((static_cast<std::int64_t>(n) * (n - 1) / 2) & 1);
}

inline double sign_pow(int exponent) { return (exponent & 1) ? -1.0 : 1.0; }

}  // namespace ellinf

#endif
