#include "seesaw/hecke.hpp"

namespace seesaw {

HeckeCosets hecke_cosets(const Int& n, const Int& level) {
    if (n < 1) throw std::domain_error("Hecke index must be positive");
    if (gcd(n, level) != 1)
        throw std::domain_error("hecke_cosets requires gcd(n, N) = 1, got n=" + to_string(n));
    HeckeCosets H;
    H.n = n;
    H.level = level;
    for (Int a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        Int d = n / a;
        for (Int b = 0; b < d; ++b) H.reps.push_back(Mat2{a, b, 0, d});
    }
    return H;
}

WeightedCycle hecke_translate(const GeodesicCycle& c, const Int& n) {
    if (gcd(n, c.level * c.disc()) != 1)
        throw std::domain_error("hecke_translate requires gcd(n, N*D) = 1");
    HeckeCosets H = hecke_cosets(n, c.level);
    WeightedCycle w;
    w.level = c.level;
    std::vector<QuadForm> group_reps;  // primitivized translate per existing term
    for (const auto& M : H.reps) {
        QuadForm t = c.form.compose_matrix(M);
        if (t.disc() != n * n * c.disc()) throw std::logic_error("translate discriminant mismatch");
        Int g = t.content();
        if (n % g != 0) throw std::logic_error("translate content does not divide n");
        QuadForm p = t.primitive_part();
        bool merged = false;
        for (std::size_t i = 0; i < group_reps.size(); ++i) {
            if (group_reps[i].disc() != p.disc()) continue;
            if (gamma0_equivalent(group_reps[i], p, c.level)) {
                w.terms[i].first = w.terms[i].first + Cyclo::one();
                merged = true;
                break;
            }
        }
        if (!merged) {
            group_reps.push_back(p);
            w.terms.emplace_back(Cyclo::one(), make_cycle(p, c.level));
        }
    }
    return w;
}

Cyclo hecke_pair(const WeightedCycle& c1, const Int& n, const WeightedCycle& c2) {
    Cyclo total = Cyclo::zero();
    for (const auto& [x2, cyc2] : c2.terms) {
        Int D2 = cyc2.disc();
        if (gcd(n, c2.level * D2) != 1)
            throw std::domain_error("hecke_pair requires gcd(n, N*D2) = 1");
        WeightedCycle tn = hecke_translate(cyc2, n);
        for (auto& term : tn.terms) term.first = term.first * x2;
        total = total + pair_weighted(c1, tn);
    }
    return total;
}

}  // namespace seesaw
