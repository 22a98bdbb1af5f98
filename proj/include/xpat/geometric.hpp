#pragma once

#include "xpat/bigint.hpp"
#include "xpat/dynkin.hpp"
#include "xpat/surfaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xpat {

// Exact-rational 2 x m point configuration; column count per type:
// A_n: n+3, B_n: n+2, C_n: n+1, D_n: n.
struct PointConfig {
    std::vector<std::array<Rat, 2>> cols; // 1-based access via col()

    int m() const { return static_cast<int>(cols.size()); }
    const std::array<Rat, 2>& col(int i) const { return cols.at(i - 1); }
    std::array<Rat, 2>& col(int i) { return cols.at(i - 1); }

    static PointConfig zero(int m) { return PointConfig{std::vector<std::array<Rat, 2>>(m)}; }
};

int configColumns(DynkinType t, int n);

// Plucker-style symbols of the four section-5 constructions.
//  Plain      P_ij           det(v_i, v_j)
//  ModifiedB  P_{i jbar}     P_{i,n+2} P_{j,n+2} - P_ij
//  ModifiedC  P_{i jbar}     v_{j,1} v_{i,1} + v_{j,2} v_{i,2}
//  ModifiedD  P_{i jbar}     det(v_j, A v_i),  A = [[1,0],[-1,2]]
//  RadialD    P_{i a}        det(v_i, a), a = (1,1);  P_{i a~}: a~ = (0,-1)
//  Eigen      lambda = 1, lambdaBar = -1
struct PluckerSymbol {
    enum Kind : uint8_t { Plain, ModifiedB, ModifiedC, ModifiedD, RadialD, Eigen };
    Kind kind = Plain;
    int i = 0, j = 0;  // indices where applicable
    bool alt = false;  // RadialD: eigenvector a~ instead of a; Eigen: lambdaBar

    bool operator<(const PluckerSymbol& o) const {
        return std::tie(kind, i, j, alt) < std::tie(o.kind, o.i, o.j, o.alt);
    }
    bool operator==(const PluckerSymbol& o) const {
        return kind == o.kind && i == o.i && j == o.j && alt == o.alt;
    }
    std::string str() const;
};

Rat evalSymbol(const PluckerSymbol& s, const PointConfig& z);

// Formal Laurent monomial in Plucker symbols.
struct XhatExpression {
    std::vector<std::pair<PluckerSymbol, int>> factors; // nonzero exponents

    XhatExpression inverse() const;
    // evaluates numerator and denominator products separately
    std::pair<Rat, Rat> evalNumDen(const PointConfig& z) const;
    std::string str() const;
    std::string keyBytes() const;
};

// The x^ expression of a quadrilateral-with-diagonal per the per-type case
// analysis of section 5. The chosen diagonal fixes which of the two
// reciprocal forms is returned.
XhatExpression xhatFormula(DynkinType t, int n, const QuadDiag& q);

// Boundary-extended quiver recipe for type A (cross-check of the closed
// forms): x^ of each arc of T from arrow counts of the extended quiver.
std::vector<XhatExpression> xhatFromExtendedQuiver(int n, const Triangulation& T);

struct DistinctnessReport {
    bool ok = false;
    size_t expressions = 0;
    size_t pairsTotal = 0;
    size_t separated = 0;
    std::vector<std::pair<std::string, std::string>> unseparated;
    std::string failure;
};

// Certifies pairwise distinctness of all 2q(P) expressions by exact
// cross-multiplied evaluation at structured configurations followed by
// seeded random ones.
DistinctnessReport verifyDistinctness(DynkinType t, int n, int trials = 100,
                                      uint64_t rngSeed = 20240811);

} // namespace xpat
