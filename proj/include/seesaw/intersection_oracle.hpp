#pragma once

#include "seesaw/geodesic.hpp"

namespace seesaw {

// Independent validation engine for intersection_number: graph search over
// translate forms (moves: composition with S, T^{±1}, single reduction steps,
// and automorph steps), collecting linked translates normalized into the flow
// window of c1. Prunes by pairing-value, window-offset and coefficient caps;
// caps are doubled until the collected set stabilizes.
CrossingReport intersection_bfs_oracle(const GeodesicCycle& c1, const GeodesicCycle& c2);

// Sorted (translate, sign) witness lists for set comparison between engines.
std::vector<std::pair<QuadForm, int>> sorted_witnesses(const CrossingReport& r);

}  // namespace seesaw
