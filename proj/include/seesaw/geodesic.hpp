#pragma once

#include <vector>

#include "seesaw/cyclotomic.hpp"
#include "seesaw/quadform.hpp"
#include "seesaw/quadirr.hpp"

namespace seesaw {

// Oriented closed geodesic on Y_0(N) attached to a primitive indefinite form,
// running from (-b - sqrt(D))/(2a) to (-b + sqrt(D))/(2a).
struct GeodesicCycle {
    QuadForm form;    // primitive, positive non-square discriminant
    Int level;        // N
    Pell4Solution unit;  // fundamental t^2 - D u^2 = 4 solution
    Mat2 aut;         // fundamental automorph, eigenvalue (t + u sqrt(D))/2
    long level_power; // least k >= 1 with aut^k in Gamma_0(N)

    Int disc() const { return form.disc(); }
    QuadIrr eigenvalue() const {
        return QuadIrr(unit.disc, make_rat(unit.t, 2), make_rat(unit.u, 2));
    }
};

GeodesicCycle make_cycle(const QuadForm& f, const Int& level);
GeodesicCycle reversed(const GeodesicCycle& c);

struct DegenerateAxes : std::domain_error {
    using std::domain_error::domain_error;
};

// Root interlacing on the boundary circle: B^2 < D_f D_g with
// B = b_f b_g - 2 a_f c_g - 2 a_g c_f. Throws DegenerateAxes when the axes
// coincide (B^2 = D_f D_g).
Int pairing_B(const QuadForm& f, const QuadForm& g);
bool linked(const QuadForm& f, const QuadForm& g);

// Crossing point of the two axes in the upper half plane: rational x, rational y^2.
struct CrossingPoint {
    Rat x;
    Rat y2;
};
CrossingPoint crossing_point(const QuadForm& f, const QuadForm& g);

// Sign of det(tangent of f's geodesic, tangent of g's geodesic) at the
// crossing, tangents taken along the orientations. Requires linked(f, g).
int crossing_sign(const QuadForm& f, const QuadForm& g);

struct CrossingWitness {
    QuadForm translate;  // Gamma_0(N)-translate of the second form, window-normalized
    int sign;
};

struct CrossingReport {
    long count_plus = 0;
    long count_minus = 0;
    long net = 0;
    std::vector<CrossingWitness> witnesses;
};

// Net signed intersection number of the two closed geodesics on Y_0(N).
// Enumerates the Gamma_0(N)-translates of c2.form linked with c1.form whose
// crossing lies in one fundamental flow window of c1, via the norm-form
// equation alpha^2 - D1 beta^2 = 4 a1^2 (B^2 - D1 D2) per pairing value B.
CrossingReport intersection_number(const GeodesicCycle& c1, const GeodesicCycle& c2);

// Finite formal sum of geodesic cycles with exact cyclotomic coefficients.
struct WeightedCycle {
    Int level;
    std::vector<std::pair<Cyclo, GeodesicCycle>> terms;
};

WeightedCycle single_cycle(const GeodesicCycle& c);

// Bilinear extension of the intersection pairing.
Cyclo pair_weighted(const WeightedCycle& w1, const WeightedCycle& w2);

}  // namespace seesaw
