#pragma once

#include "xpat/exchange_matrix.hpp"

#include <string>

namespace xpat {

enum class DynkinType : uint8_t { A, B, C, D, E, F, G };

DynkinType dynkinTypeFromChar(char c);
char dynkinTypeChar(DynkinType t);
bool validDynkin(DynkinType t, int n);

// Standard Cartan matrix of the given type and rank.
IntMatrix cartanMatrix(DynkinType t, int n);

// Bipartite orientation of the Dynkin diagram: b_ij nonzero exactly on
// diagram edges, magnitudes from the Cartan matrix, signs alternating with
// the two-coloring. Its Cartan counterpart is cartanMatrix(t, n).
ExchangeMatrix dynkinInitialMatrix(DynkinType t, int n);

// True when a equals b up to a simultaneous row/column permutation.
bool matrixEqualsUpToPermutation(const IntMatrix& a, const IntMatrix& b);

// Searches the matrix mutation class of B (up to simultaneous relabeling)
// for an element whose Cartan counterpart is the standard (t, n) Cartan
// matrix up to permutation. Exact classification for finite types.
bool mutationClassHasCartanType(const ExchangeMatrix& B, DynkinType t, int n,
                                size_t maxMatrices = 200000);

} // namespace xpat
