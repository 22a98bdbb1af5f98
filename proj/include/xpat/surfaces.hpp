#pragma once

#include "xpat/exchange_matrix.hpp"
#include "xpat/dynkin.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace xpat {

// The four marked polygons: plain (type A), once-punctured (type D), folded
// plain (type C), folded once-punctured (type B). m counts boundary vertices
// of the underlying polygon, labeled 1..m clockwise.
enum class PolyKind : uint8_t { Plain, Punctured, FoldedPlain, FoldedPunctured };

struct MarkedPolygon {
    PolyKind kind = PolyKind::Plain;
    int m = 0;

    bool punctured() const {
        return kind == PolyKind::Punctured || kind == PolyKind::FoldedPunctured;
    }
    bool folded() const {
        return kind == PolyKind::FoldedPlain || kind == PolyKind::FoldedPunctured;
    }
    // arcs (orbits for folded kinds) per triangulation
    int rank() const;
    bool operator==(const MarkedPolygon& o) const { return kind == o.kind && m == o.m; }
    bool operator<(const MarkedPolygon& o) const {
        return std::tie(kind, m) < std::tie(o.kind, o.m);
    }
    std::string str() const;
};

MarkedPolygon polygonForType(DynkinType t, int n);

// Tagged arc or boundary segment.
//  Chord:    between vertices i < j; wind 0 = "direct" (separates the vertices
//            strictly between i and j from the puncture/cut side), wind 1 =
//            "around" (separates the complementary span; crosses the cut once
//            in punctured kinds). Plain kinds only use wind 0 semantics of a
//            straight chord; both winds never coexist there.
//  Radius:   from the puncture to vertex i; wind 0 = plain, 1 = notched.
//  Boundary: the segment from vertex i to its clockwise neighbor.
struct Arc {
    enum Kind : uint8_t { Chord = 0, Radius = 1, Boundary = 2 };
    Kind kind = Chord;
    uint8_t i = 0, j = 0;
    uint8_t wind = 0;

    static Arc chord(int i, int j, int wind = 0);
    static Arc radius(int v, bool notched = false);
    static Arc boundary(int i);

    bool operator==(const Arc& o) const {
        return kind == o.kind && i == o.i && j == o.j && wind == o.wind;
    }
    bool operator!=(const Arc& o) const { return !(*this == o); }
    bool operator<(const Arc& o) const {
        return std::tie(kind, i, j, wind) < std::tie(o.kind, o.i, o.j, o.wind);
    }
    std::string str() const;
};

// G-orbit of an arc: one or two arcs, sorted. Unfolded kinds use singletons.
using Orbit = std::vector<Arc>;

// All proper tagged arcs (no boundary segments).
const std::vector<Arc>& allArcs(const MarkedPolygon& P);
const std::vector<Orbit>& allOrbits(const MarkedPolygon& P);

// image of an arc under the folding action (identity for unfolded kinds)
Arc gImage(const MarkedPolygon& P, const Arc& a);
Orbit orbitOf(const MarkedPolygon& P, const Arc& a);

// Double-cover lift of a punctured-polygon arc: one or two chords of the
// 2m-gon; radii lift to the diameter (i, i+m).
std::vector<std::pair<int, int>> liftToDoubleCover(const MarkedPolygon& P, const Arc& a);

// untagged crossing / tagged compatibility
bool arcsCross(const MarkedPolygon& P, const Arc& a, const Arc& b);
bool compatible(const MarkedPolygon& P, const Arc& a, const Arc& b);
bool orbitsCompatible(const MarkedPolygon& P, const Orbit& a, const Orbit& b);

// Ordered list of arc orbits; the index is the mutation direction.
struct Triangulation {
    MarkedPolygon P;
    std::vector<Orbit> slots;

    std::vector<Arc> unfoldedArcs() const;
    std::string key() const; // canonical (order-independent) identifier
    bool contains(const Arc& a) const;
};

Triangulation seedTriangulation(const MarkedPolygon& P);

// Face of a triangulation, counterclockwise side order, boundary segments
// included. A pair-digon face stands for the once-punctured digon holding
// both tagged versions of the radius at pairVertex; its sides list the two
// digon sides in counterclockwise order following the radius pair.
struct Face {
    std::vector<Arc> sides;
    bool pairDigon = false;
    int pairVertex = -1;
};

std::vector<Face> facesOf(const MarkedPolygon& P, const std::vector<Arc>& arcs);

// Signed arrow-count matrix of the quiver Q(T) restricted to the given arcs
// (2-cycles cancel); used for both B(T) and the boundary-extended quiver.
struct SurfaceQuiver {
    std::vector<Arc> nodes; // triangulation arcs first, then boundary segments
    IntMatrix net;          // net arrow counts
};

SurfaceQuiver surfaceQuiver(const MarkedPolygon& P, const std::vector<Arc>& arcs,
                            bool includeBoundary);

// B(T); folded kinds apply the orbit summation. Skew-symmetrizability is
// validated on construction.
ExchangeMatrix exchangeMatrix(const Triangulation& T);

struct FlipResult {
    Triangulation T;
    Orbit replaced;
    Orbit introduced;
};

// The unique flip of the arc orbit at `slot`; involutive.
FlipResult flipArc(const Triangulation& T, int slot);

// Quadrilateral of an arc with a chosen diagonal. The canonical encoding is
// triangulation-independent: sides, the unordered diagonal pair, the digon
// flag, and the chosen diagonal, minimized over the folding action.
struct QuadDiag {
    MarkedPolygon P;
    std::vector<Arc> sides;        // sorted set, arcs and boundary segments
    std::array<Orbit, 2> diagPair; // sorted
    Orbit diagonal;
    bool digonCase = false;

    // representative member of the diagonal orbit and its own quadrilateral
    // sides in the unfolded polygon (the quadrilateral containing the
    // smallest vertices when the orbit holds two); equals (diagonal[0],
    // sides) for unfolded kinds. Not part of the canonical encoding.
    Arc memberDiagonal;
    std::vector<Arc> memberSides;

    std::string quadId() const; // without the chosen diagonal
    std::string key() const;    // with the chosen diagonal
};

QuadDiag quadrilateral(const Triangulation& T, int slot);

std::vector<Triangulation> enumerateTriangulations(const MarkedPolygon& P,
                                                   size_t guard = 1000000);

// All quadrilaterals-with-diagonal over all triangulations, deduplicated.
std::vector<QuadDiag> enumerateQuadrilaterals(const MarkedPolygon& P,
                                              size_t guard = 1000000);

long long closedFormQuadCount(const MarkedPolygon& P);

long long binomial(long long n, long long k);

} // namespace xpat
