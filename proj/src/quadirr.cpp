#include "seesaw/quadirr.hpp"

#include <map>
#include <utility>

namespace seesaw {

CFrac cfrac_sqrt(const Int& D, std::size_t max_terms) {
    if (D <= 0 || is_square(D)) throw std::domain_error("cfrac_sqrt: D must be positive and non-square");
    CFrac out;
    Int a0 = isqrt(D);
    out.terms.push_back(a0);
    // state: value (P + sqrt(D)) / Q
    Int P = a0, Q = D - a0 * a0;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t idx = 1;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            out.period_start = it->second;
            out.period_len = idx - it->second;
            break;
        }
        seen.emplace(key, idx);
        Int a = floor_div(P + a0, Q);
        out.terms.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
        ++idx;
        if (max_terms && idx > max_terms + 64) break;  // safety, never hit for valid D
    }
    if (max_terms && out.terms.size() > max_terms + 1) out.terms.resize(max_terms + 1);
    return out;
}

PellSolution pell_fundamental(const Int& D) {
    if (D <= 0 || is_square(D)) throw std::domain_error("pell_fundamental: D must be positive and non-square");
    Int a0 = isqrt(D);
    Int hm2 = 1, hm1 = a0;  // convergent numerators
    Int km2 = 0, km1 = 1;   // convergent denominators
    if (hm1 * hm1 - D * km1 * km1 == 1) return {hm1, km1, D};
    Int P = a0, Q = D - a0 * a0;
    while (true) {
        Int a = floor_div(P + a0, Q);
        Int h = a * hm1 + hm2;
        Int k = a * km1 + km2;
        if (h * h - D * k * k == 1) return {h, k, D};
        hm2 = hm1; hm1 = h;
        km2 = km1; km1 = k;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

Pell4Solution pell4_fundamental(const Int& D) {
    PellSolution p1 = pell_fundamental(D);
    Int T = 2 * p1.u, U = 2 * p1.v;
    auto value = [&](const Int& t, const Int& u) { return QuadIrr(D, make_rat(t, 2), make_rat(u, 2)); };
    bool descended = true;
    while (descended) {
        descended = false;
        // square root: trace t' satisfies t'^2 = T + 2
        if (is_square(T + 2)) {
            Int t2 = isqrt(T + 2);
            Int num = t2 * t2 - 4;
            if (num % D == 0 && is_square(num / D)) {
                Int u2 = isqrt(num / D);
                if (u2 > 0 && value(t2, u2).pow(2) == value(T, U)) {
                    T = t2;
                    U = u2;
                    descended = true;
                    continue;
                }
            }
        }
        // cube root: trace t' satisfies t'^3 - 3 t' = T
        Int root;
        mpz_root(root.get_mpz_t(), T.get_mpz_t(), 3);
        for (Int t3 = root - 2; t3 <= root + 3; ++t3) {
            if (t3 < 3) continue;
            if (t3 * t3 * t3 - 3 * t3 != T) continue;
            Int num = t3 * t3 - 4;
            if (num % D != 0 || !is_square(num / D)) continue;
            Int u3 = isqrt(num / D);
            if (u3 > 0 && value(t3, u3).pow(3) == value(T, U)) {
                T = t3;
                U = u3;
                descended = true;
                break;
            }
        }
    }
    return {T, U, D};
}

void sqrt_enclosure(const Int& D, int bits, Rat& lo, Rat& hi) {
    if (D < 0) throw std::domain_error("sqrt_enclosure of negative integer");
    Int scale = pow_int(2, static_cast<unsigned long>(bits));
    Int s = isqrt(D * scale * scale);
    lo = make_rat(s, scale);
    hi = make_rat(s + 1, scale);
    if (lo * lo == Rat(D)) hi = lo;
}

}  // namespace seesaw
