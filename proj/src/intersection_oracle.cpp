#include "seesaw/intersection_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace seesaw {

namespace {

struct OracleContext {
    QuadForm Q1, Q2;
    Int N;
    Int D1, D2;
    long k = 1;
    QuadIrr A_big{Int(5), Rat(1), Rat(0)};  // placeholder, set in run()
    QuadIrr E4{Int(5), Rat(1), Rat(0)};
    QuadIrr E4k{Int(5), Rat(1), Rat(0)};
    Mat2 M1, M2;
    long ord2 = 1;

    // P^2 of a translate as an exact element of Q(sqrt(D1))
    QuadIrr Psq(const QuadForm& g) const {
        Int alpha = g.a * (Q1.b * Q1.b + D1) - 2 * Q1.a * Q1.b * g.b + 4 * Q1.a * Q1.a * g.c;
        Int beta = 2 * (Q1.a * g.b - g.a * Q1.b);
        QuadIrr P(D1, Rat(alpha), Rat(beta));
        return P * P;
    }

    Int Aval(const Int& B) const { return 4 * Q1.a * Q1.a * abs(B * B - D1 * D2); }

    // true if P^2 lies in (A eps^{-4k}, A]
    bool in_window(const QuadForm& g, const Int& B) const {
        QuadIrr A = QuadIrr::rational(D1, Rat(Aval(B)));
        QuadIrr p2 = Psq(g);
        if ((p2 - A).sign() > 0) return false;
        return (p2 * E4k - A).sign() > 0;
    }

    // membership of the translate's coset in Gamma_0(N), from a tracked witness
    bool coset_in_gamma0(const Mat2& W) const {
        if (N == 1) return true;
        Mat2 cur = W;
        for (long t = 0; t < ord2; ++t) {
            if (mod_pos(cur.c, N) == 0) return true;
            cur = M2 * cur;
        }
        return false;
    }
};

struct CapSet {
    Int Bcap;
    long offcap;
    Int ccap;
};

Int max_coeff(const QuadForm& g) { return std::max(std::max(abs(g.a), abs(g.b)), abs(g.c)); }

std::vector<std::pair<QuadForm, int>> run_bfs(const OracleContext& ctx, const CapSet& caps) {
    std::map<QuadForm, Mat2> visited;
    std::deque<QuadForm> queue;
    visited.emplace(ctx.Q2, Mat2::identity());
    queue.push_back(ctx.Q2);

    QuadIrr Ecap = ctx.E4;
    for (long i = 1; i < caps.offcap; ++i) Ecap = Ecap * ctx.E4;

    auto keep = [&](const QuadForm& g) {
        if (max_coeff(g) > caps.ccap) return false;
        Int B = pairing_B(ctx.Q1, g);
        if (abs(B) > caps.Bcap) return false;
        if (B * B == ctx.D1 * ctx.D2) return true;  // degenerate axis, keep as a hub
        QuadIrr A = QuadIrr::rational(ctx.D1, Rat(ctx.Aval(B)));
        QuadIrr p2 = ctx.Psq(g);
        if ((p2 - A * Ecap).sign() > 0) return false;                    // far above the window
        if ((p2 * ctx.E4k * Ecap - A).sign() <= 0) return false;        // far below
        return true;
    };

    std::vector<std::pair<QuadForm, int>> collected;
    while (!queue.empty()) {
        QuadForm g = queue.front();
        queue.pop_front();
        Mat2 W = visited.at(g);

        Int B = pairing_B(ctx.Q1, g);
        if (B * B < ctx.D1 * ctx.D2 && ctx.in_window(g, B) && ctx.coset_in_gamma0(W)) {
            collected.emplace_back(g, crossing_sign(ctx.Q1, g));
        }

        std::vector<Mat2> moves{mat2_S(), mat2_T(1), mat2_T(-1), ctx.M1,
                                ctx.M1.inverse_unimodular(), ctx.M2, ctx.M2.inverse_unimodular()};
        Mat2 rho;
        reduction_step(g, &rho);
        moves.push_back(rho);
        for (const auto& mv : moves) {
            QuadForm h = g.compose_matrix(mv);
            if (!keep(h)) continue;
            if (visited.count(h)) continue;
            visited.emplace(h, W * mv);
            queue.push_back(h);
        }
    }
    std::sort(collected.begin(), collected.end());
    collected.erase(std::unique(collected.begin(), collected.end()), collected.end());
    return collected;
}

}  // namespace

std::vector<std::pair<QuadForm, int>> sorted_witnesses(const CrossingReport& r) {
    std::vector<std::pair<QuadForm, int>> out;
    out.reserve(r.witnesses.size());
    for (const auto& w : r.witnesses) out.emplace_back(w.translate, w.sign);
    std::sort(out.begin(), out.end());
    return out;
}

CrossingReport intersection_bfs_oracle(const GeodesicCycle& c1, const GeodesicCycle& c2) {
    if (c1.level != c2.level) throw std::domain_error("cycles live on different levels");
    OracleContext ctx;
    ctx.Q1 = c1.form;
    ctx.Q2 = c2.form;
    ctx.N = c1.level;
    ctx.D1 = ctx.Q1.disc();
    ctx.D2 = ctx.Q2.disc();
    ctx.k = c1.level_power;
    QuadIrr eps = c1.eigenvalue();
    ctx.E4 = eps.pow(4);
    ctx.E4k = eps.pow(4 * ctx.k);
    ctx.M1 = c1.aut;
    ctx.M2 = c2.aut;
    ctx.ord2 = (ctx.N == 1) ? 1 : matrix_order_mod(ctx.M2, ctx.N);

    Int coeff_scale = abs(ctx.Q1.a) + abs(ctx.Q1.b) + abs(ctx.Q1.c) + abs(ctx.Q2.a) +
                      abs(ctx.Q2.b) + abs(ctx.Q2.c) + 1;
    Int eps_up = c1.pell.u + c1.pell.v * (isqrt(ctx.D1) + 1) + 1;
    CapSet caps;
    caps.Bcap = 8 * coeff_scale * (isqrt(ctx.D1 * ctx.D2) + 1);
    caps.offcap = 2;
    caps.ccap = 4096 * coeff_scale * (ctx.D1 * ctx.D2 + 64) *
                pow_int(eps_up, static_cast<unsigned long>(2 * ctx.k + 6));

    auto first = run_bfs(ctx, caps);
    bool stable = false;
    for (int round = 0; round < 3 && !stable; ++round) {
        CapSet bigger{caps.Bcap * 2, caps.offcap + 1, caps.ccap * caps.ccap};
        auto second = run_bfs(ctx, bigger);
        stable = (first == second);
        first = std::move(second);
        caps = bigger;
    }
    if (!stable) throw std::runtime_error("BFS oracle did not stabilize under cap doubling");

    CrossingReport report;
    for (const auto& [g, s] : first) {
        if (s > 0)
            ++report.count_plus;
        else
            ++report.count_minus;
        report.witnesses.push_back({g, s});
    }
    report.net = report.count_plus - report.count_minus;
    return report;
}

}  // namespace seesaw
