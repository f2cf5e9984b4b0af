#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seesaw/cyclotomic.hpp"
#include "seesaw/intmat.hpp"
#include "seesaw/quadirr.hpp"
#include "seesaw/rational.hpp"

namespace seesaw {

// Integral binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
    Int a, b, c;

    QuadForm() : a(0), b(0), c(0) {}
    QuadForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Int disc() const { return b * b - 4 * a * c; }
    Int content() const { return gcd(gcd(abs(a), abs(b)), abs(c)); }
    bool is_primitive() const { return content() == 1; }
    QuadForm primitive_part() const {
        Int g = content();
        return {a / g, b / g, c / g};
    }

    Rat eval(const Rat& x, const Rat& y) const {
        return Rat(a) * x * x + Rat(b) * x * y + Rat(c) * y * y;
    }

    // Pullback f∘M: (f∘M)(v) = f(Mv). Works for any integral M.
    QuadForm compose_matrix(const Mat2& M) const {
        Int na = a * M.a * M.a + b * M.a * M.c + c * M.c * M.c;
        Int nb = 2 * a * M.a * M.b + b * (M.a * M.d + M.b * M.c) + 2 * c * M.c * M.d;
        Int nc = a * M.b * M.b + b * M.b * M.d + c * M.d * M.d;
        return {na, nb, nc};
    }

    QuadForm reversed() const { return {-a, -b, -c}; }

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }

    std::string str() const { return to_string(a) + "," + to_string(b) + "," + to_string(c); }
    static QuadForm parse(const std::string& s);
};

// f is reduced (indefinite case) iff 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced(const QuadForm& f);

// Right-neighbor reduction step; M accumulates the change of variable with
// f_out = f_in ∘ M_step (and total = product of steps).
QuadForm reduction_step(const QuadForm& f, Mat2* step = nullptr);

// Reduce to some reduced form; returns the reduced form and (optionally) M
// with result = f ∘ M.
QuadForm reduce_form(const QuadForm& f, Mat2* transform = nullptr);

// Full cycle of reduced forms equivalent to f (order follows the reduction flow).
std::vector<QuadForm> reduce_cycle(const QuadForm& f);

// All reduced forms of discriminant D (positive non-square), any content.
std::vector<QuadForm> reduced_forms(const Int& D, bool primitive_only);

// SL2(Z)-equivalence; when witness is non-null and the forms are equivalent it
// receives M with f ∘ M = g.
bool sl2_equivalent(const QuadForm& f, const QuadForm& g, Mat2* witness = nullptr);

// Automorph of a primitive indefinite form from the fundamental Pell solution
// of its discriminant: [[u - b v, -2 c v], [2 a v, u + b v]].
Mat2 automorph(const QuadForm& f, const PellSolution& pell);
Mat2 automorph(const QuadForm& f);

// Generator of the full (free part of the) automorph group, from the
// fundamental solution of t^2 - D u^2 = 4; the Pell matrix above is a power
// of this one (the square for D = 28, the cube for D = 5).
Mat2 fundamental_automorph(const QuadForm& f);

// phi(sqrt(D)) = [[-b, -2c],[2a, b]]; squares to D * Id.
Mat2 optimal_embedding_matrix(const QuadForm& f);

// Gamma_0(N)-equivalence: decided through an SL2 witness and the automorph
// group of f taken mod N. Witness (if requested) lies in Gamma_0(N).
bool gamma0_equivalent(const QuadForm& f, const QuadForm& g, const Int& N, Mat2* witness = nullptr);

// Multiplicative order of M in PSL2(Z/N).
long matrix_order_mod(const Mat2& M, const Int& N);

// --- narrow class group -----------------------------------------------------

struct NarrowClassGroup {
    Int disc;
    std::vector<QuadForm> classes;              // reduced representatives, classes[0] principal
    std::vector<std::vector<int>> table;        // composition table (indices into classes)
    std::vector<int> inverse;                   // inverse class per index

    int cidx(const QuadForm& f) const;          // index of the class of f
    long order() const { return static_cast<long>(classes.size()); }
};

QuadForm principal_form(const Int& D);

// Gauss composition of primitive forms of the same discriminant.
QuadForm compose_forms(const QuadForm& f, const QuadForm& g);

// Narrow (form) class group for a discriminant D > 0, D ≡ 0,1 mod 4, non-square.
// Composition table is built for fundamental discriminants.
NarrowClassGroup narrow_class_group(const Int& D);

struct ClassCharacter {
    const NarrowClassGroup* group = nullptr;
    std::vector<RootOfUnity> values;  // value per class index
    bool odd = false;                 // -1 on the orientation-reversal class of the principal form

    RootOfUnity operator()(int class_index) const { return values.at(static_cast<std::size_t>(class_index)); }
};

std::vector<ClassCharacter> characters(const NarrowClassGroup& G);

// --- Heegner forms -----------------------------------------------------------

struct HeegnerData {
    Int p;
    Int r;       // r^2 ≡ D (mod 4p)
    QuadForm form;  // p | a, b ≡ r (mod p)
};

// Throws std::domain_error("p not split...") when r^2 ≡ D (mod 4p) has no solution.
HeegnerData heegner_form(const Int& D, const Int& p, std::optional<int> class_index = std::nullopt);

// --- even lattices -----------------------------------------------------------

struct EvenLattice {
    IntMat gram;  // symmetric, even diagonal
};

// [L^dual : L] = |det gram|, via the Smith normal form of the Gram matrix.
Int lattice_level(const EvenLattice& L);

}  // namespace seesaw
