#pragma once

#include "xpat/seed.hpp"
#include "xpat/surfaces.hpp"

#include <string>

namespace xpat {

// Result of propagating a universal X-seed over the flip graph of the
// type's polygon and checking the quadrilateral correspondence:
//   - single-valued: the X-variable at an arc depends only on its
//     quadrilateral-with-diagonal,
//   - injective: distinct quadrilaterals-with-diagonal carry distinct
//     X-variables,
//   - inverse pairs: the two diagonals of one quadrilateral carry mutually
//     inverse X-variables,
//   - coverage: the keys seen equal the full quadrilateral census,
//   - locality: flips of arcs outside q u {diagonal} leave the X-variable
//     untouched,
//   - matrix coherence: B(flip T) equals the mutation of B(T) throughout.
struct BijectionReport {
    bool ok = false;
    std::string failure; // empty when ok

    size_t triangulations = 0;
    size_t quadKeys = 0;       // quadrilaterals with a choice of diagonal
    size_t distinctXVars = 0;
    long long closedFormQuads = 0;

    bool singleValued = false;
    bool injective = false;
    bool inversePairs = false;
    bool coversCensus = false;
    bool localityHolds = false;
    bool matrixCommutes = false;
};

BijectionReport verifyBijection(DynkinType t, int n);

} // namespace xpat
