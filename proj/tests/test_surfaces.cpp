#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xpat/explorer.hpp"
#include "xpat/surfaces.hpp"

#include <set>

using namespace xpat;

namespace {

Triangulation mk(const MarkedPolygon& P, std::vector<Orbit> slots) {
    Triangulation T;
    T.P = P;
    T.slots = std::move(slots);
    return T;
}

void checkPairwiseCompatible(const Triangulation& T) {
    auto arcs = T.unfoldedArcs();
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = a + 1; b < arcs.size(); ++b)
            CHECK(compatible(T.P, arcs[a], arcs[b]));
}

} // namespace

TEST_CASE("arc counts match closed forms") {
    // Plain(6): 9 chords
    CHECK(allArcs({PolyKind::Plain, 6}).size() == 9);
    // Plain(n+3): n(n+3)/2
    for (int n = 1; n <= 6; ++n)
        CHECK(allArcs({PolyKind::Plain, n + 3}).size() ==
              static_cast<size_t>(n * (n + 3) / 2));
    // Punctured(n): n^2, via the independent decomposition n(n-2) chords + 2n radii
    for (int m = 3; m <= 7; ++m) {
        size_t chords = 0, radii = 0;
        for (const Arc& a : allArcs({PolyKind::Punctured, m}))
            (a.kind == Arc::Chord ? chords : radii)++;
        CHECK(chords == static_cast<size_t>(m * (m - 2)));
        CHECK(radii == static_cast<size_t>(2 * m));
        CHECK(chords + radii == static_cast<size_t>(m * m));
    }
    // FoldedPlain(2n+2): n(n+1) orbits; FoldedPlain(8) = C3 has 12
    CHECK(allOrbits({PolyKind::FoldedPlain, 8}).size() == 12);
    for (int n = 2; n <= 5; ++n)
        CHECK(allOrbits({PolyKind::FoldedPlain, 2 * n + 2}).size() ==
              static_cast<size_t>(n * (n + 1)));
    // FoldedPunctured(n+1): n(n+1) orbits
    for (int n = 2; n <= 5; ++n)
        CHECK(allOrbits({PolyKind::FoldedPunctured, n + 1}).size() ==
              static_cast<size_t>(n * (n + 1)));
}

TEST_CASE("double cover lifts") {
    MarkedPolygon P{PolyKind::Punctured, 4};
    auto l1 = liftToDoubleCover(P, Arc::chord(1, 3, 0));
    CHECK(l1 == std::vector<std::pair<int, int>>{{1, 3}, {5, 7}});
    auto l2 = liftToDoubleCover(P, Arc::radius(2));
    CHECK(l2 == std::vector<std::pair<int, int>>{{2, 6}});
    auto l3 = liftToDoubleCover(P, Arc::chord(1, 2, 1));
    CHECK(l3 == std::vector<std::pair<int, int>>{{1, 6}, {2, 5}});
}

TEST_CASE("compatibility") {
    MarkedPolygon hex{PolyKind::Plain, 6};
    CHECK(!compatible(hex, Arc::chord(1, 3), Arc::chord(2, 4)));
    CHECK(compatible(hex, Arc::chord(1, 3), Arc::chord(3, 5)));

    MarkedPolygon p4{PolyKind::Punctured, 4};
    // radius tag rule
    CHECK(!compatible(p4, Arc::radius(1, false), Arc::radius(2, true)));
    CHECK(compatible(p4, Arc::radius(1, false), Arc::radius(1, true)));
    CHECK(compatible(p4, Arc::radius(1, false), Arc::radius(2, false)));
    // crossing through the double cover
    CHECK(!compatible(p4, Arc::chord(1, 3, 0), Arc::chord(2, 4, 1)));
    CHECK(compatible(p4, Arc::chord(1, 3, 0), Arc::chord(1, 3, 1)));
    CHECK(!compatible(p4, Arc::chord(1, 3, 0), Arc::radius(2)));
    CHECK(compatible(p4, Arc::chord(1, 3, 0), Arc::radius(1)));
}

TEST_CASE("seed triangulations are valid") {
    for (MarkedPolygon P : {MarkedPolygon{PolyKind::Plain, 6},
                            MarkedPolygon{PolyKind::Plain, 8},
                            MarkedPolygon{PolyKind::Punctured, 3},
                            MarkedPolygon{PolyKind::Punctured, 5},
                            MarkedPolygon{PolyKind::FoldedPlain, 6},
                            MarkedPolygon{PolyKind::FoldedPlain, 8},
                            MarkedPolygon{PolyKind::FoldedPunctured, 4},
                            MarkedPolygon{PolyKind::FoldedPunctured, 5}}) {
        Triangulation T = seedTriangulation(P);
        CHECK(static_cast<int>(T.slots.size()) == P.rank());
        checkPairwiseCompatible(T);
        // every face decomposition works
        CHECK(!facesOf(P, T.unfoldedArcs()).empty());
    }
}

TEST_CASE("flips: hexagon example and involution") {
    MarkedPolygon P{PolyKind::Plain, 6};
    Triangulation T =
        mk(P, {{Arc::chord(1, 3)}, {Arc::chord(1, 4)}, {Arc::chord(1, 5)}});
    FlipResult f = flipArc(T, 0);
    CHECK(f.introduced == Orbit{Arc::chord(2, 4)});
    FlipResult back = flipArc(f.T, 0);
    CHECK(back.introduced == Orbit{Arc::chord(1, 3)});
    CHECK(back.T.key() == T.key());
}

TEST_CASE("flips: punctured fan and tag flips") {
    MarkedPolygon P{PolyKind::Punctured, 3};
    Triangulation T = seedTriangulation(P); // all plain radii
    // flip of a radius is unique and involutive
    FlipResult f = flipArc(T, 0);
    CHECK(flipArc(f.T, 0).T.key() == T.key());

    // same-tag digon: flipping one radius of {plain1, plain3} around digon
    MarkedPolygon p4{PolyKind::Punctured, 4};
    Triangulation D = mk(p4, {{Arc::chord(1, 3, 0)},
                              {Arc::chord(1, 3, 1)},
                              {Arc::radius(1, false)},
                              {Arc::radius(3, false)}});
    checkPairwiseCompatible(D);
    FlipResult fr = flipArc(D, 2); // plain radius at 1
    CHECK(fr.introduced == Orbit{Arc::radius(3, true)});
}

TEST_CASE("flip graphs have the right sizes") {
    CHECK(enumerateTriangulations({PolyKind::Plain, 6}).size() == 14);
    CHECK(enumerateTriangulations({PolyKind::Plain, 7}).size() == 42);
    // D3 = A3: flip graph size equals the A3 cluster count from the explorer
    ExchangeGraph a3 = explore(coefficientFreeASeed(dynkinInitialMatrix(DynkinType::A, 3)));
    CHECK(enumerateTriangulations({PolyKind::Punctured, 3}).size() == a3.nodes.size());
    // C2: folded plain hexagon
    ExchangeGraph c2 = explore(coefficientFreeASeed(dynkinInitialMatrix(DynkinType::C, 2)));
    CHECK(enumerateTriangulations({PolyKind::FoldedPlain, 6}).size() == c2.nodes.size());
    // B3
    ExchangeGraph b3 = explore(coefficientFreeASeed(dynkinInitialMatrix(DynkinType::B, 3)));
    CHECK(enumerateTriangulations({PolyKind::FoldedPunctured, 4}).size() == b3.nodes.size());
}

TEST_CASE("exchange matrices classify correctly") {
    // Plain(5) fan: A2
    MarkedPolygon p5{PolyKind::Plain, 5};
    Triangulation T = mk(p5, {{Arc::chord(1, 3)}, {Arc::chord(1, 4)}});
    ExchangeMatrix B = exchangeMatrix(T);
    CHECK(std::llabs(B.at(0, 1)) == 1);
    CHECK(mutationClassHasCartanType(B, DynkinType::A, 2));

    // Punctured fan of plain radii: type D_n
    for (int n : {3, 4, 5}) {
        Triangulation R = seedTriangulation({PolyKind::Punctured, n});
        CHECK(mutationClassHasCartanType(exchangeMatrix(R), DynkinType::D, n));
    }
    // FoldedPunctured(n+1): type B_n
    for (int n : {2, 3, 4}) {
        Triangulation R = seedTriangulation({PolyKind::FoldedPunctured, n + 1});
        CHECK(mutationClassHasCartanType(exchangeMatrix(R), DynkinType::B, n));
    }
    // FoldedPlain(2n+2): type C_n
    for (int n : {2, 3}) {
        Triangulation R = seedTriangulation({PolyKind::FoldedPlain, 2 * n + 2});
        CHECK(mutationClassHasCartanType(exchangeMatrix(R), DynkinType::C, n));
    }
}

TEST_CASE("flip commutes with matrix mutation over whole flip graphs") {
    for (MarkedPolygon P : {MarkedPolygon{PolyKind::Plain, 6},
                            MarkedPolygon{PolyKind::Punctured, 3},
                            MarkedPolygon{PolyKind::Punctured, 4},
                            MarkedPolygon{PolyKind::FoldedPlain, 6},
                            MarkedPolygon{PolyKind::FoldedPunctured, 4}}) {
        for (const Triangulation& T : enumerateTriangulations(P)) {
            ExchangeMatrix B = exchangeMatrix(T);
            for (int k = 0; k < static_cast<int>(T.slots.size()); ++k) {
                ExchangeMatrix lhs = exchangeMatrix(flipArc(T, k).T);
                ExchangeMatrix rhs = B.mutated(k);
                CHECK(lhs.matrix() == rhs.matrix());
            }
        }
    }
}

TEST_CASE("quadrilateral: hexagon fan") {
    MarkedPolygon P{PolyKind::Plain, 6};
    Triangulation T =
        mk(P, {{Arc::chord(1, 3)}, {Arc::chord(1, 4)}, {Arc::chord(1, 5)}});
    QuadDiag q = quadrilateral(T, 1); // diagonal (1,4)
    std::vector<Arc> expect = {Arc::chord(1, 3), Arc::chord(1, 5), Arc::boundary(3),
                               Arc::boundary(4)};
    std::sort(expect.begin(), expect.end());
    CHECK(q.sides == expect);
    CHECK(!q.digonCase);
    // diagonals: (1,4) and (3,5)
    std::array<Orbit, 2> pair = {Orbit{Arc::chord(1, 4)}, Orbit{Arc::chord(3, 5)}};
    if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
    CHECK(q.diagPair == pair);
}

TEST_CASE("quadrilateral: once-punctured digon cases") {
    MarkedPolygon P{PolyKind::Punctured, 4};
    Triangulation T = mk(P, {{Arc::chord(1, 3, 0)},
                             {Arc::chord(1, 3, 1)},
                             {Arc::radius(1, false)},
                             {Arc::radius(1, true)}});
    checkPairwiseCompatible(T);

    // digon radius: q includes both digon sides and the two compatible radii
    QuadDiag qr = quadrilateral(T, 2); // plain radius at 1
    CHECK(qr.digonCase);
    std::set<Arc> sides(qr.sides.begin(), qr.sides.end());
    CHECK(sides.count(Arc::chord(1, 3, 0)));
    CHECK(sides.count(Arc::chord(1, 3, 1)));
    CHECK(sides.count(Arc::radius(1, true)));  // same vertex, other tag
    CHECK(sides.count(Arc::radius(3, false))); // same tag, other vertex
    CHECK(qr.sides.size() == 4);
    // diagonals: plain radius at 1 and notched radius at 3
    std::array<Orbit, 2> pr = {Orbit{Arc::radius(1, false)}, Orbit{Arc::radius(3, true)}};
    if (pr[1] < pr[0]) std::swap(pr[0], pr[1]);
    CHECK(qr.diagPair == pr);

    // digon side: five adjacent arcs/segments, diagonals d13 / around(1,2)
    QuadDiag qs = quadrilateral(T, 0); // direct (1,3)
    CHECK(!qs.digonCase);
    std::set<Arc> s2(qs.sides.begin(), qs.sides.end());
    CHECK(s2.count(Arc::chord(1, 3, 1)));
    CHECK(s2.count(Arc::radius(1, false)));
    CHECK(s2.count(Arc::radius(1, true)));
    CHECK(s2.count(Arc::boundary(1)));
    CHECK(s2.count(Arc::boundary(2)));
    CHECK(qs.sides.size() == 5);
    std::array<Orbit, 2> ps = {Orbit{Arc::chord(1, 3, 0)}, Orbit{Arc::chord(1, 2, 1)}};
    if (ps[1] < ps[0]) std::swap(ps[0], ps[1]);
    CHECK(qs.diagPair == ps);
}

TEST_CASE("quadrilateral keys are triangulation-independent") {
    for (MarkedPolygon P : {MarkedPolygon{PolyKind::Plain, 6},
                            MarkedPolygon{PolyKind::Punctured, 4},
                            MarkedPolygon{PolyKind::FoldedPlain, 6},
                            MarkedPolygon{PolyKind::FoldedPunctured, 4}}) {
        std::map<std::string, std::string> diagByKey; // key -> diagonal encoding
        for (const Triangulation& T : enumerateTriangulations(P)) {
            for (int s = 0; s < static_cast<int>(T.slots.size()); ++s) {
                QuadDiag q = quadrilateral(T, s);
                // two diagonal keys per quad id across the whole enumeration
                diagByKey.emplace(q.key(), q.quadId());
            }
        }
        std::map<std::string, int> perQuad;
        for (auto& [k, qid] : diagByKey) perQuad[qid]++;
        for (auto& [qid, cnt] : perQuad) CHECK(cnt == 2);
    }
}

TEST_CASE("quadrilateral censuses match the closed forms") {
    // Plain(7): 2 * C(7,4) = 70
    CHECK(enumerateQuadrilaterals({PolyKind::Plain, 7}).size() == 70);
    // Punctured(4): 2 * 52 = 104
    CHECK(closedFormQuadCount({PolyKind::Punctured, 4}) == 52);
    CHECK(enumerateQuadrilaterals({PolyKind::Punctured, 4}).size() == 104);
    // FoldedPlain(6), type C2: 2 * 6 = 12
    CHECK(closedFormQuadCount({PolyKind::FoldedPlain, 6}) == 6);
    CHECK(enumerateQuadrilaterals({PolyKind::FoldedPlain, 6}).size() == 12);
    // FoldedPunctured(4), type B3: 2 * 22 = 44
    CHECK(closedFormQuadCount({PolyKind::FoldedPunctured, 4}) == 22);
    CHECK(enumerateQuadrilaterals({PolyKind::FoldedPunctured, 4}).size() == 44);
}

TEST_CASE("closed-form quadrilateral counts") {
    CHECK(closedFormQuadCount({PolyKind::Plain, 7}) == 35);
    CHECK(closedFormQuadCount({PolyKind::Punctured, 5}) == 130);
    CHECK(closedFormQuadCount({PolyKind::FoldedPunctured, 4}) == 22);
    // table formula vs direct binomial decomposition
    for (int m = 3; m <= 8; ++m) {
        long long viaBinom =
            4 * binomial(m, 4) + 9 * binomial(m, 3) + 2 * binomial(m, 2);
        long long viaPoly = static_cast<long long>(m) * (m - 1) * (m * m + 4 * m - 6) / 6;
        CHECK(viaBinom == viaPoly);
        long long bBinom = 4 * binomial(m, 4) + 3 * binomial(m, 3) + binomial(m, 2);
        long long n = m - 1;
        long long bPoly = n * (n + 1) * (n * n + 2) / 6;
        CHECK(bBinom == bPoly);
    }
}
