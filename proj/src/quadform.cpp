#include "seesaw/quadform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace seesaw {

namespace {

void require_indefinite(const QuadForm& f) {
    Int D = f.disc();
    if (D <= 0 || is_square(D))
        throw std::domain_error("form must have positive non-square discriminant, got D=" + to_string(D));
}

bool is_fundamental_disc(const Int& D) {
    Int k, s;
    if (mod_pos(D, 4) == 1) {
        square_split(D, k, s);
        return s == 1;
    }
    if (mod_pos(D, 4) == 0) {
        Int m = D / 4;
        Int mm = mod_pos(m, 4);
        if (mm != 2 && mm != 3) return false;
        square_split(m, k, s);
        return s == 1;
    }
    return false;
}

Int extgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

QuadForm QuadForm::parse(const std::string& s) {
    auto p1 = s.find(',');
    auto p2 = s.find(',', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::domain_error("form literal must look like \"a,b,c\"");
    return {Int(s.substr(0, p1)), Int(s.substr(p1 + 1, p2 - p1 - 1)), Int(s.substr(p2 + 1))};
}

bool is_reduced(const QuadForm& f) {
    Int D = f.disc();
    if (D <= 0 || is_square(D)) return false;
    if (f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    Int t = 2 * abs(f.a);
    // sqrt(D) - b < 2|a|  <=>  D < (2|a| + b)^2
    if (D >= (t + f.b) * (t + f.b)) return false;
    // 2|a| < sqrt(D) + b  <=>  2|a| - b < sqrt(D)
    Int u = t - f.b;
    if (u >= 0 && u * u >= D) return false;
    return true;
}

QuadForm reduction_step(const QuadForm& f, Mat2* step) {
    require_indefinite(f);
    Int D = f.disc();
    Int sq = isqrt(D);
    Int cc = f.c;
    if (cc == 0) throw std::domain_error("reduction step needs c != 0");
    Int ac = 2 * abs(cc);
    // target residue r == -b (mod 2c), in the window of the reduction flow
    Int lo, hi;
    if (abs(cc) > sq) {  // |c| >= sqrt(D), non-square so never equal
        lo = -abs(cc) + 1;
        hi = abs(cc);
    } else {
        lo = sq - ac + 1;
        hi = sq;
    }
    Int r = mod_pos(-f.b - lo, ac) + lo;  // r ≡ -b (mod 2c), lo <= r < lo + 2|c|
    if (r > hi) r -= ac;
    Int s = (f.b + r) / (2 * cc);
    Mat2 M{0, -1, 1, s};
    if (step) *step = M;
    return f.compose_matrix(M);
}

QuadForm reduce_form(const QuadForm& f, Mat2* transform) {
    require_indefinite(f);
    QuadForm g = f;
    Mat2 total = Mat2::identity();
    for (int guard = 0; guard < 100000; ++guard) {
        if (is_reduced(g)) {
            if (transform) *transform = total;
            return g;
        }
        Mat2 step;
        g = reduction_step(g, &step);
        total = total * step;
    }
    throw std::runtime_error("reduction did not terminate for " + f.str());
}

std::vector<QuadForm> reduce_cycle(const QuadForm& f) {
    QuadForm g0 = reduce_form(f);
    std::vector<QuadForm> cycle{g0};
    QuadForm g = reduction_step(g0);
    while (!(g == g0)) {
        cycle.push_back(g);
        g = reduction_step(g);
        if (cycle.size() > 100000) throw std::runtime_error("runaway reduction cycle");
    }
    return cycle;
}

std::vector<QuadForm> reduced_forms(const Int& D, bool primitive_only) {
    if (D <= 0 || is_square(D)) throw std::domain_error("need positive non-square discriminant");
    std::vector<QuadForm> out;
    Int sq = isqrt(D);
    for (Int b = 1; b <= sq; ++b) {
        if (mod_pos(b * b - D, 4) != 0) continue;
        Int ac = (b * b - D) / 4;  // negative
        Int m = -ac;
        for (Int aa = 1; aa * aa <= m; ++aa) {
            if (m % aa != 0) continue;
            for (const Int& av : std::initializer_list<Int>{aa, Int(m / aa)}) {
                // sqrt(D)-b < 2|a| < sqrt(D)+b
                Int t = 2 * av;
                if (D >= (t + b) * (t + b)) continue;
                Int u = t - b;
                if (u >= 0 && u * u >= D) continue;
                Int cv = ac / av;
                for (int sa : {1, -1}) {
                    QuadForm g{sa * av, b, sa * cv};
                    if (primitive_only && !g.is_primitive()) continue;
                    out.push_back(g);
                }
                if (aa == m / aa) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool sl2_equivalent(const QuadForm& f, const QuadForm& g, Mat2* witness) {
    require_indefinite(f);
    require_indefinite(g);
    if (f.disc() != g.disc() || f.content() != g.content()) return false;
    Mat2 Mf, Mg;
    QuadForm rf = reduce_form(f, &Mf);
    QuadForm rg = reduce_form(g, &Mg);
    QuadForm cur = rf;
    Mat2 Mc = Mat2::identity();
    for (int guard = 0;; ++guard) {
        if (cur == rg) {
            if (witness) {
                *witness = Mf * Mc * Mg.inverse_unimodular();
                if (!(f.compose_matrix(*witness) == g))
                    throw std::logic_error("equivalence witness failed verification");
            }
            return true;
        }
        Mat2 step;
        cur = reduction_step(cur, &step);
        Mc = Mc * step;
        if (cur == rf) return false;
        if (guard > 100000) throw std::runtime_error("runaway cycle walk");
    }
}

Mat2 automorph(const QuadForm& f, const PellSolution& pell) {
    if (f.disc() != pell.disc) throw std::domain_error("automorph: discriminant mismatch");
    return {pell.u - f.b * pell.v, -2 * f.c * pell.v, 2 * f.a * pell.v, pell.u + f.b * pell.v};
}

Mat2 automorph(const QuadForm& f) { return automorph(f, pell_fundamental(f.disc())); }

Mat2 fundamental_automorph(const QuadForm& f) {
    Pell4Solution s = pell4_fundamental(f.disc());
    Mat2 M{(s.t - f.b * s.u) / 2, -f.c * s.u, f.a * s.u, (s.t + f.b * s.u) / 2};
    if (M.det() != 1 || !(f.compose_matrix(M) == f))
        throw std::logic_error("fundamental automorph failed verification");
    return M;
}

Mat2 optimal_embedding_matrix(const QuadForm& f) { return {-f.b, -2 * f.c, 2 * f.a, f.b}; }

long matrix_order_mod(const Mat2& M, const Int& N) {
    if (N == 1) return 1;
    Mat2 I = Mat2::identity();
    Mat2 P = M.mod(N);
    Mat2 minusI{mod_pos(Int(-1), N), 0, 0, mod_pos(Int(-1), N)};
    long ord = 1;
    Mat2 cur = P;
    while (!(cur == I.mod(N)) && !(cur == minusI)) {
        cur = (cur * P).mod(N);
        ++ord;
        if (ord > 8 * N.get_si() * N.get_si() + 64)
            throw std::runtime_error("matrix order mod N did not close");
    }
    return ord;
}

bool gamma0_equivalent(const QuadForm& f, const QuadForm& g, const Int& N, Mat2* witness) {
    Mat2 M0;
    if (!sl2_equivalent(f, g, &M0)) return false;
    if (N == 1) {
        if (witness) *witness = M0;
        return true;
    }
    Mat2 M1 = fundamental_automorph(f.primitive_part());
    long ord = matrix_order_mod(M1, N);
    Mat2 Pk = Mat2::identity();
    for (long k = 0; k < ord; ++k) {
        Mat2 W = Pk * M0;
        if (mod_pos(W.c, N) == 0) {
            if (witness) *witness = W;
            return true;
        }
        Pk = Pk * M1;
    }
    return false;
}

QuadForm principal_form(const Int& D) {
    if (mod_pos(D, 4) == 0) return {1, 0, -D / 4};
    if (mod_pos(D, 4) == 1) return {1, 1, (1 - D) / 4};
    throw std::domain_error("discriminant must be 0 or 1 mod 4");
}

QuadForm compose_forms(const QuadForm& f, const QuadForm& g) {
    require_indefinite(f);
    if (f.disc() != g.disc()) throw std::domain_error("composition needs equal discriminants");
    if (!f.is_primitive() || !g.is_primitive())
        throw std::domain_error("composition is defined on primitive forms");
    Int D = f.disc();
    // find a representative of g whose leading coefficient is coprime to f.a
    QuadForm g2 = g;
    bool found = false;
    for (Int x = 0; x < 40 && !found; ++x) {
        for (Int y = -x; y <= x && !found; ++y) {
            for (const auto& [xx, yy] : {std::pair<Int, Int>{x, y}, {y, x}}) {
                if (xx == 0 && yy == 0) continue;
                if (gcd(xx, yy) != 1) continue;
                Int val = g.a * xx * xx + g.b * xx * yy + g.c * yy * yy;
                if (val == 0 || gcd(val, f.a) != 1) continue;
                Int u, v;
                extgcd(xx, yy, u, v);  // xx*u + yy*v = 1
                Mat2 M{xx, -v, yy, u};
                g2 = g.compose_matrix(M);
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::runtime_error("no concordant representative found");
    // translate middle coefficients to a common B:
    //   B ≡ f.b (mod 2 f.a), B ≡ g2.b (mod 2 g2.a), gcd(f.a, g2.a) = 1
    Int m1 = 2 * f.a, m2 = 2 * g2.a;
    Int u, v;
    Int gg = extgcd(m1, m2, u, v);  // = 2
    if (mod_pos(g2.b - f.b, gg) != 0) throw std::logic_error("united forms parity violated");
    Int l = m1 / gg * m2;
    Int B = mod_pos(f.b + m1 * (((g2.b - f.b) / gg) * u), l);
    Int A = f.a * g2.a;
    if (mod_pos(B * B - D, 4 * A) != 0) throw std::logic_error("composition congruence failed");
    QuadForm comp{A, B, (B * B - D) / (4 * A)};
    return reduce_form(comp);
}

int NarrowClassGroup::cidx(const QuadForm& f) const {
    QuadForm r = reduce_form(f);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto cyc = reduce_cycle(classes[i]);
        if (std::find(cyc.begin(), cyc.end(), r) != cyc.end()) return static_cast<int>(i);
    }
    throw std::domain_error("form is not in this class group: " + f.str());
}

NarrowClassGroup narrow_class_group(const Int& D) {
    if (D <= 0 || is_square(D) || (mod_pos(D, 4) != 0 && mod_pos(D, 4) != 1))
        throw std::domain_error("invalid discriminant " + to_string(D));
    NarrowClassGroup G;
    G.disc = D;
    auto all = reduced_forms(D, /*primitive_only=*/true);
    std::set<QuadForm> seen;
    for (const auto& f : all) {
        if (seen.count(f)) continue;
        auto cyc = reduce_cycle(f);
        for (const auto& h : cyc) seen.insert(h);
        G.classes.push_back(*std::min_element(cyc.begin(), cyc.end()));
    }
    // principal class first
    QuadForm p0 = reduce_form(principal_form(D));
    for (std::size_t i = 0; i < G.classes.size(); ++i) {
        auto cyc = reduce_cycle(G.classes[i]);
        if (std::find(cyc.begin(), cyc.end(), p0) != cyc.end()) {
            std::swap(G.classes[0], G.classes[i]);
            break;
        }
    }
    std::size_t h = G.classes.size();
    G.table.assign(h, std::vector<int>(h, 0));
    G.inverse.assign(h, 0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            QuadForm comp = compose_forms(G.classes[i], G.classes[j]);
            int k = G.cidx(comp);
            G.table[i][j] = k;
            G.table[j][i] = k;
        }
    for (std::size_t i = 0; i < h; ++i) {
        QuadForm inv{G.classes[i].a, -G.classes[i].b, G.classes[i].c};
        G.inverse[i] = G.cidx(inv);
    }
    (void)is_fundamental_disc(D);
    return G;
}

namespace {

long element_order(const NarrowClassGroup& G, int g) {
    long ord = 1;
    int cur = g;
    while (cur != 0) {
        cur = G.table[static_cast<std::size_t>(cur)][static_cast<std::size_t>(g)];
        ++ord;
    }
    return ord;
}

int group_pow(const NarrowClassGroup& G, int g, long e) {
    int r = 0;
    for (long i = 0; i < e; ++i) r = G.table[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)];
    return r;
}

// generators g_i with orders d_i such that G is the internal direct product of
// the <g_i>; exponent vectors for every element come out of the enumeration.
void abelian_basis(const NarrowClassGroup& G, std::vector<int>& gens, std::vector<long>& ords,
                   std::vector<std::vector<long>>& coords) {
    long h = G.order();
    gens.clear();
    ords.clear();
    std::vector<int> sub{0};  // current subgroup generated by gens
    while (static_cast<long>(sub.size()) < h) {
        // element of maximal order in G modulo <gens>... greedy on element order in G
        int best = -1;
        long bestord = 0;
        for (int x = 0; x < h; ++x) {
            if (std::find(sub.begin(), sub.end(), x) != sub.end()) continue;
            long o = element_order(G, x);
            if (o > bestord) { bestord = o; best = x; }
        }
        // shrink to the order of best in G/<sub>: smallest e with best^e in sub
        long e = 1;
        int cur = best;
        while (std::find(sub.begin(), sub.end(), cur) == sub.end()) {
            cur = G.table[static_cast<std::size_t>(cur)][static_cast<std::size_t>(best)];
            ++e;
        }
        // adjust best by subgroup elements so its order in G equals e
        int adjusted = -1;
        for (int s : sub) {
            int cand = G.table[static_cast<std::size_t>(best)][static_cast<std::size_t>(s)];
            if (element_order(G, cand) == e) { adjusted = cand; break; }
        }
        if (adjusted < 0) adjusted = best;  // fall back; verified below
        gens.push_back(adjusted);
        ords.push_back(e);
        // regenerate subgroup
        std::set<int> ns(sub.begin(), sub.end());
        std::set<int> grown{0};
        // products of powers of all gens
        std::vector<long> idx(gens.size(), 0);
        while (true) {
            int prod = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) prod = G.table[static_cast<std::size_t>(prod)][static_cast<std::size_t>(group_pow(G, gens[i], idx[i]))];
            grown.insert(prod);
            std::size_t k = 0;
            while (k < idx.size()) {
                if (++idx[k] < ords[k]) break;
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size()) break;
        }
        sub.assign(grown.begin(), grown.end());
    }
    // coordinates of every element (enumeration of products; direct product ⇒ bijective)
    coords.assign(static_cast<std::size_t>(h), {});
    std::vector<long> idx(gens.size(), 0);
    long count = 0;
    while (true) {
        int prod = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            prod = G.table[static_cast<std::size_t>(prod)][static_cast<std::size_t>(group_pow(G, gens[i], idx[i]))];
        coords[static_cast<std::size_t>(prod)] = idx;
        ++count;
        std::size_t k = 0;
        while (k < idx.size()) {
            if (++idx[k] < ords[k]) break;
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    long expected = 1;
    for (long d : ords) expected *= d;
    if (expected != h || count != h)
        throw std::logic_error("abelian basis decomposition failed");
}

}  // namespace

std::vector<ClassCharacter> characters(const NarrowClassGroup& G) {
    std::vector<int> gens;
    std::vector<long> ords;
    std::vector<std::vector<long>> coords;
    abelian_basis(G, gens, ords, coords);
    long h = G.order();

    // class of the orientation-reversed principal form, for the oddness flag
    int rev = G.cidx(principal_form(G.disc).reversed());

    std::vector<ClassCharacter> out;
    std::vector<long> e(gens.size(), 0);
    while (true) {
        ClassCharacter chi;
        chi.group = &G;
        chi.values.resize(static_cast<std::size_t>(h));
        for (int x = 0; x < h; ++x) {
            RootOfUnity v(1, 0);
            for (std::size_t i = 0; i < gens.size(); ++i)
                v = v * RootOfUnity(ords[i], e[i] * coords[static_cast<std::size_t>(x)][i]);
            chi.values[static_cast<std::size_t>(x)] = v;
        }
        chi.odd = chi.values[static_cast<std::size_t>(rev)].is_minus_one();
        out.push_back(std::move(chi));
        std::size_t k = 0;
        while (k < e.size()) {
            if (++e[k] < ords[k]) break;
            e[k] = 0;
            ++k;
        }
        if (k == e.size()) break;
        if (e.empty()) break;
    }
    return out;
}

HeegnerData heegner_form(const Int& D, const Int& p, std::optional<int> class_index) {
    if (D <= 0 || is_square(D) || (mod_pos(D, 4) != 0 && mod_pos(D, 4) != 1))
        throw std::domain_error("invalid discriminant " + to_string(D));
    if (p < 3 || !is_prime(p) || legendre(D, p) != 1)
        throw std::domain_error("p not split: D is not a nonzero square mod p for p=" + to_string(p));
    Int r = -1;
    for (Int cand = 0; cand < 2 * p; ++cand) {
        if (mod_pos(cand * cand - D, 4 * p) == 0) { r = cand; break; }
    }
    if (r < 0)
        throw std::domain_error("p not split: no r with r^2 = D mod 4p for p=" + to_string(p));
    HeegnerData H;
    H.p = p;
    H.r = r;
    if (!class_index || *class_index == 0) {
        Int N = (r * r - D) / 4;
        H.form = {N, r, 1};
        return H;
    }
    NarrowClassGroup G = narrow_class_group(D);
    if (*class_index < 0 || *class_index >= G.order()) throw std::domain_error("class index out of range");
    QuadForm f = G.classes[static_cast<std::size_t>(*class_index)];
    // projective roots of f ≡ 0 mod p: directions (x, 1) and possibly (1, 0)
    std::vector<std::pair<Int, Int>> dirs;
    for (Int x = 0; x < p; ++x)
        if (mod_pos(f.a * x * x + f.b * x + f.c, p) == 0) dirs.emplace_back(x, Int(1));
    if (mod_pos(f.a, p) == 0) dirs.emplace_back(Int(1), Int(0));
    for (const auto& [xx, yy] : dirs) {
        Int u, v;
        extgcd(xx, yy, u, v);  // xx*u + yy*v = 1
        Mat2 M{xx, -v, yy, u};
        QuadForm g = f.compose_matrix(M);
        if (mod_pos(g.a, p) != 0) continue;
        if (mod_pos(g.b - r, p) == 0) {
            H.form = g;
            return H;
        }
        if (mod_pos(g.c, p) == 0) {
            QuadForm g2 = g.compose_matrix(mat2_S());  // [c, -b, a]
            if (mod_pos(g2.b - r, p) == 0) {
                H.form = g2;
                return H;
            }
        } else {
            // shear (x,y) -> (x, tx+y) keeps p | a and moves b by 2ct
            Int cinv, dummy;
            Int gg = extgcd(mod_pos(2 * g.c, p), p, cinv, dummy);
            if (gg == 1) {
                Int t = mod_pos((r - g.b) * cinv, p);
                QuadForm g3 = g.compose_matrix(Mat2{1, 0, t, 1});
                if (mod_pos(g3.a, p) == 0 && mod_pos(g3.b - r, p) == 0) {
                    H.form = g3;
                    return H;
                }
            }
        }
    }
    throw std::runtime_error("no Heegner form found in requested class");
}

Int lattice_level(const EvenLattice& L) {
    const IntMat& g = L.gram;
    if (g.rows() != g.cols() || g.rows() == 0) throw std::domain_error("Gram matrix must be square");
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (mod_pos(g.at(i, i), 2) != 0) throw std::domain_error("lattice is not even");
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!(g.at(i, j) == g.at(j, i))) throw std::domain_error("Gram matrix must be symmetric");
    }
    Int d = det_bareiss(g);
    if (d == 0) throw std::domain_error("degenerate Gram matrix");
    auto diag = snf_diagonal(g);
    Int level = 1;
    for (const auto& x : diag) level *= x;
    return abs(level);
}

}  // namespace seesaw
