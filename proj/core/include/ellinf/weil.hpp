#ifndef ELLINF_WEIL_HPP
#define ELLINF_WEIL_HPP

#include <map>
#include <string>
#include <utility>

#include "ellinf/rational.hpp"

namespace ellinf {

/// Index pair of the Gaussian lattice series f_{m,n}.
using FIndex = std::pair<int, int>;

/// Exact finite linear combination sum c_{m,n} * f_{m,n} with rational
/// coefficients.  This is the symbolic carrier on which the Weil operator
/// acts exactly; zero coefficients are never stored.
class WeilCombination {
public:
    WeilCombination() = default;

    const std::map<FIndex, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rational coeff(int m, int n) const {
        auto it = terms_.find({m, n});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int m, int n, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({m, n}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeilCombination& operator+=(const WeilCombination& o) {
        for (const auto& [idx, c] : o.terms_) add_term(idx.first, idx.second, c);
        return *this;
    }

    WeilCombination scaled(const Rational& s) const {
        WeilCombination out;
        if (s.is_zero()) return out;
        for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, c * s);
        return out;
    }

    friend bool operator==(const WeilCombination& a, const WeilCombination& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<FIndex, Rational> terms_;
};

/// Exact rational combination expressing the weight-n Eisenstein series
/// (starred at n = 2) through the rapidly decreasing f_{m,n}:
///   e*_n = 2/(n-1)! f_{n-1,1} + sum_{m=2}^{n} 1/(n-m)! f_{n-m,m}.
/// Requires n even, n >= 2.
WeilCombination estar_combination(int n);

/// Apply the Weil operator `power` times, using the exact rewriting rule
/// W(f_{m,n}) = f_{m+2,n} + n f_{m+1,n+1} extended linearly.
WeilCombination weil_apply(const WeilCombination& c, int power);

/// Combination for g_{a,b} = sum_{k>=0} k! (C(a,k) + C(b,k)) f_{a+b-k,k+1},
/// valid for a, b >= 0 of different parity.  For a + b even the combination
/// is empty (every candidate term vanishes by parity), which keeps the
/// convolution identities downstream free of case splits.
WeilCombination g_combination(int a, int b);

/// The same g_{a,b} derived instead as (b-a)! W^a(e*_{b-a+1}) (symmetrized so
/// that a <= b).  Must agree with g_combination coefficient by coefficient;
/// a + b must be odd here.
WeilCombination g_combination_weil_route(int a, int b);

}  // namespace ellinf

#endif
