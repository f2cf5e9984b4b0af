#pragma once

#include "seesaw/geodesic.hpp"

namespace seesaw {

struct HeckeCosets {
    Int n;
    Int level;
    std::vector<Mat2> reps;  // [[a, b], [0, d]], ad = n, 0 <= b < d
};

// Left Gamma_0(N)-coset representatives for the degree-n correspondence,
// gcd(n, N) = 1.
HeckeCosets hecke_cosets(const Int& n, const Int& level);

// T_n of a geodesic cycle: the formal sum of the geodesics attached to the
// pullbacks form∘M over the coset representatives. Pullbacks of discriminant
// n^2 D delegate to their primitive part; Gamma_0(N)-equivalent translates are
// grouped with integer multiplicities (one per representative).
WeightedCycle hecke_translate(const GeodesicCycle& c, const Int& n);

// <c1, T_n c2>, exact.
Cyclo hecke_pair(const WeightedCycle& c1, const Int& n, const WeightedCycle& c2);

}  // namespace seesaw
