#include "seesaw/geodesic.hpp"

#include <map>
#include <set>

namespace seesaw {

GeodesicCycle make_cycle(const QuadForm& f, const Int& level) {
    Int D = f.disc();
    if (D <= 0 || is_square(D))
        throw std::domain_error("geodesic needs a positive non-square discriminant");
    if (!f.is_primitive()) throw std::domain_error("geodesic cycles are built on primitive forms");
    if (level < 1) throw std::domain_error("level must be positive");
    GeodesicCycle c;
    c.form = f;
    c.level = level;
    c.pell = pell_fundamental(D);
    c.aut = automorph(f, c.pell);
    c.level_power = 1;
    if (level > 1) {
        Mat2 cur = c.aut.mod(level);
        Mat2 step = c.aut.mod(level);
        long k = 1;
        while (mod_pos(cur.c, level) != 0) {
            cur = (cur * step).mod(level);
            ++k;
            if (k > 16 * level.get_si() * level.get_si() + 64)
                throw std::runtime_error("automorph never entered Gamma_0(N)");
        }
        c.level_power = k;
    }
    return c;
}

GeodesicCycle reversed(const GeodesicCycle& c) { return make_cycle(c.form.reversed(), c.level); }

Int pairing_B(const QuadForm& f, const QuadForm& g) {
    return f.b * g.b - 2 * f.a * g.c - 2 * g.a * f.c;
}

bool linked(const QuadForm& f, const QuadForm& g) {
    Int Df = f.disc(), Dg = g.disc();
    if (Df <= 0 || Dg <= 0) throw std::domain_error("linked: forms must be indefinite");
    Int B = pairing_B(f, g);
    Int lhs = B * B, rhs = Df * Dg;
    if (lhs == rhs) throw DegenerateAxes("degenerate axes: forms share their geodesic axis");
    return lhs < rhs;
}

CrossingPoint crossing_point(const QuadForm& f, const QuadForm& g) {
    if (!linked(f, g)) throw std::domain_error("axes do not cross");
    // circles |z - c|^2 = rho^2 with c = -b/2a and rho^2 = D/4a^2
    Rat cf = make_rat(-f.b, 2 * f.a), cg = make_rat(-g.b, 2 * g.a);
    Rat rf2 = Rat(f.disc()) / Rat(4 * f.a * f.a);
    Rat rg2 = Rat(g.disc()) / Rat(4 * g.a * g.a);
    Rat x = (rf2 - rg2 + cg * cg - cf * cf) / (2 * (cg - cf));
    Rat y2 = rf2 - (x - cf) * (x - cf);
    if (sign(y2) <= 0) throw std::logic_error("linked axes with no interior crossing");
    return {x, y2};
}

int crossing_sign(const QuadForm& f, const QuadForm& g) {
    CrossingPoint z = crossing_point(f, g);  // also validates linkage
    (void)z;
    // Tangent along the orientation at z = (x, y): sign(a) * (y, c_center - x),
    // so det(t_f, t_g) = sign(a_f) sign(a_g) * y * (c_g - c_f) with y > 0.
    Rat cf = make_rat(-f.b, 2 * f.a), cg = make_rat(-g.b, 2 * g.a);
    int s = sign(f.a) * sign(g.a) * sign(cg - cf);
    if (s == 0) throw std::logic_error("vanishing tangent determinant for linked axes");
    return s;
}

CrossingReport intersection_number(const GeodesicCycle& c1, const GeodesicCycle& c2) {
    if (c1.level != c2.level) throw std::domain_error("cycles live on different levels");
    const QuadForm& Q1 = c1.form;
    const QuadForm& Q2 = c2.form;
    const Int N = c1.level;
    const Int D1 = Q1.disc(), D2 = Q2.disc();
    const Int a1 = Q1.a, b1 = Q1.b, c1c = Q1.c;

    CrossingReport report;
    const QuadIrr eps = c1.eigenvalue();  // u + v sqrt(D1), norm 1
    const QuadIrr eps_inv = eps.conj();
    const QuadIrr eps2 = eps * eps;
    const long k = c1.level_power;

    // integer upper bound on the eigenvalue, for the beta scan range
    const Int eps_up = c1.pell.u + c1.pell.v * (isqrt(D1) + 1) + 1;

    std::map<QuadForm, bool> equiv_cache;
    auto is_translate = [&](const QuadForm& g) {
        auto it = equiv_cache.find(g);
        if (it != equiv_cache.end()) return it->second;
        bool ok = gamma0_equivalent(Q2, g, N);
        equiv_cache.emplace(g, ok);
        return ok;
    };

    Int Bmax = isqrt(D1 * D2);
    if (Bmax * Bmax == D1 * D2) Bmax -= 1;
    for (Int B = -Bmax; B <= Bmax; ++B) {
        if (mod_pos(B - D1 * D2, 2) != 0) continue;  // B ≡ b1 b' ≡ D1 D2 (mod 2)
        Int CB = 4 * a1 * a1 * (B * B - D1 * D2);    // < 0
        Int A = -CB;
        QuadIrr Aq = QuadIrr::rational(D1, Rat(A));

        // norm-form representatives with P^2 in the top sub-window (A/eps^2, A]
        std::set<std::pair<Int, Int>> reps;
        Int beta_bound = ((isqrt(A) + 1) * (1 + eps_up)) / (2 * isqrt(D1)) + 2;
        for (Int beta = -beta_bound; beta <= beta_bound; ++beta) {
            Int t = CB + D1 * beta * beta;
            if (t < 0 || !is_square(t)) continue;
            Int al = isqrt(t);
            for (int sa : {1, -1}) {
                if (al == 0 && sa < 0) continue;
                Int alpha = sa * al;
                QuadIrr P(D1, Rat(alpha), Rat(beta));
                QuadIrr P2 = P * P;
                if ((P2 - Aq).sign() > 0) continue;            // P^2 <= A
                if ((P2 * eps2 - Aq).sign() <= 0) continue;    // P^2 eps^2 > A
                reps.insert({alpha, beta});
            }
        }

        for (const auto& rep : reps) {
            QuadIrr P(D1, Rat(rep.first), Rat(rep.second));
            for (long j = 0; j < 2 * k; ++j) {
                if (j > 0) P = P * eps_inv;  // slide down one sub-window
                Rat alpha = P.x(), beta = P.y();
                // beta = 2(a1 b' - a' b1) must be even
                if (den(beta) != 1 || mod_pos(num(beta), 2) != 0) continue;
                std::vector<std::vector<Rat>> M = {
                    {Rat(-b1), Rat(a1), Rat(0)},
                    {Rat(-2 * c1c), Rat(b1), Rat(-2 * a1)},
                    {Rat(b1 * b1 + D1), Rat(-2 * a1 * b1), Rat(4 * a1 * a1)}};
                std::vector<Rat> rhs = {beta / 2, Rat(B), alpha};
                std::vector<Rat> sol = solve_rational(M, rhs);
                if (den(sol[0]) != 1 || den(sol[1]) != 1 || den(sol[2]) != 1) continue;
                QuadForm g{num(sol[0]), num(sol[1]), num(sol[2])};
                if (g.disc() != D2) continue;
                if (g.content() != Q2.content()) continue;
                if (!is_translate(g)) continue;
                int s = crossing_sign(Q1, g);
                if (s > 0)
                    ++report.count_plus;
                else
                    ++report.count_minus;
                report.witnesses.push_back({g, s});
            }
        }
    }
    report.net = report.count_plus - report.count_minus;
    return report;
}

WeightedCycle single_cycle(const GeodesicCycle& c) {
    WeightedCycle w;
    w.level = c.level;
    w.terms.emplace_back(Cyclo::one(), c);
    return w;
}

Cyclo pair_weighted(const WeightedCycle& w1, const WeightedCycle& w2) {
    if (!w1.terms.empty() && !w2.terms.empty() && w1.level != w2.level)
        throw std::domain_error("weighted cycles live on different levels");
    Cyclo total = Cyclo::zero();
    for (const auto& [x1, cyc1] : w1.terms)
        for (const auto& [x2, cyc2] : w2.terms) {
            long net = intersection_number(cyc1, cyc2).net;
            if (net == 0) continue;
            total = total + make_rat(net, 1) * (x1 * x2);
        }
    return total;
}

}  // namespace seesaw
