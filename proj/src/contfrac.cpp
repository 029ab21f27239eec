#include "stablepair/contfrac.hpp"

namespace stablepair {

std::vector<Int> hj_expand(const Int& r, const Int& a) {
    if (r < 1 || a < 1)
        throw std::domain_error("hj_expand requires positive r and a");
    if (r == 1 && a == 1)
        return {};
    if (a >= r)
        throw std::domain_error("hj_expand requires a < r");
    if (boost::multiprecision::gcd(r, a) != 1)
        throw std::domain_error("hj_expand requires gcd(a,r) = 1");

    std::vector<Int> coeffs;
    Int num = r;
    Int den = a;
    while (den > 0) {
        Int b = (num + den - 1) / den;  // ceil(num/den)
        coeffs.push_back(b);
        Int next = b * den - num;       // den * (b - num/den)
        num = den;
        den = next;
    }
    return coeffs;
}

std::pair<Int, Int> hj_eval(const std::vector<Int>& coefficients) {
    if (coefficients.empty())
        throw std::domain_error("hj_eval requires a nonempty expansion");
    for (const Int& b : coefficients)
        if (b < 2)
            throw std::domain_error("hj_eval entries must be >= 2");

    // Evaluate b_1 - 1/(b_2 - 1/(...)) from the right as a fraction r/a.
    Int r = coefficients.back();
    Int a = 1;
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
        Int next_r = *it * r - a;
        a = r;
        r = next_r;
    }
    return {r, a};
}

Int mod_inverse(const Int& a, const Int& r) {
    if (r < 2)
        throw std::domain_error("mod_inverse requires r >= 2");
    Int a0 = a % r;
    if (a0 < 0)
        a0 += r;
    // Extended Euclid on (r, a0).
    Int old_r = r, cur_r = a0;
    Int old_t = 0, cur_t = 1;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int tmp_r = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp_r;
        Int tmp_t = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp_t;
    }
    if (old_r != 1)
        throw std::domain_error("mod_inverse requires gcd(a,r) = 1");
    if (old_t < 0)
        old_t += r;
    return old_t;
}

}  // namespace stablepair
