#include "ellinf/weil.hpp"

#include <sstream>
#include <stdexcept>

#include "ellinf/numeric.hpp"

namespace ellinf {

std::string WeilCombination::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*f(" << idx.first << "," << idx.second << ")";
        first = false;
    }
    return os.str();
}

WeilCombination estar_combination(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("estar_combination: n must be even and >= 2");
    WeilCombination c;
    c.add_term(n - 1, 1, Rational(2, factorial_i(n - 1)));
    for (int m = 2; m <= n; ++m) c.add_term(n - m, m, Rational(1, factorial_i(n - m)));
    return c;
}

WeilCombination weil_apply(const WeilCombination& c, int power) {
    if (power < 0) throw std::invalid_argument("weil_apply: power must be >= 0");
    WeilCombination cur = c;
    for (int step = 0; step < power; ++step) {
        WeilCombination next;
        for (const auto& [idx, coeff] : cur.terms()) {
            const auto [m, n] = idx;
            next.add_term(m + 2, n, coeff);
            next.add_term(m + 1, n + 1, coeff * Rational(n));
        }
        cur = next;
    }
    return cur;
}

WeilCombination g_combination(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("g_combination: indices must be >= 0");
    WeilCombination c;
    if ((a + b) % 2 == 0) return c;  // parity-vanishing; defined as the zero combination
    for (int k = 0; k <= std::max(a, b); ++k) {
        const Rational coeff = Rational(factorial_i(k)) * Rational(binomial_i(a, k) + binomial_i(b, k));
        c.add_term(a + b - k, k + 1, coeff);
    }
    return c;
}

WeilCombination g_combination_weil_route(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("g_combination_weil_route: indices must be >= 0");
    if ((a + b) % 2 == 0)
        throw std::invalid_argument("g_combination_weil_route: a + b must be odd");
    if (a > b) std::swap(a, b);  // g_{a,b} = g_{b,a}
    const WeilCombination base = estar_combination(b - a + 1);
    return weil_apply(base, a).scaled(Rational(factorial_i(b - a)));
}

}  // namespace ellinf
