#include "xpat/surfaces.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xpat {

int MarkedPolygon::rank() const {
    switch (kind) {
        case PolyKind::Plain: return m - 3;
        case PolyKind::Punctured: return m;
        case PolyKind::FoldedPlain: return m / 2 - 1;
        case PolyKind::FoldedPunctured: return m - 1;
    }
    return 0;
}

std::string MarkedPolygon::str() const {
    switch (kind) {
        case PolyKind::Plain: return "plain(" + std::to_string(m) + ")";
        case PolyKind::Punctured: return "punctured(" + std::to_string(m) + ")";
        case PolyKind::FoldedPlain: return "folded-plain(" + std::to_string(m) + ")";
        case PolyKind::FoldedPunctured: return "folded-punctured(" + std::to_string(m) + ")";
    }
    return "?";
}

MarkedPolygon polygonForType(DynkinType t, int n) {
    switch (t) {
        case DynkinType::A:
            if (n >= 1) return {PolyKind::Plain, n + 3};
            break;
        case DynkinType::B:
            if (n >= 2) return {PolyKind::FoldedPunctured, n + 1};
            break;
        case DynkinType::C:
            if (n >= 2) return {PolyKind::FoldedPlain, 2 * n + 2};
            break;
        case DynkinType::D:
            if (n >= 3) return {PolyKind::Punctured, n};
            break;
        default:
            break;
    }
    throw std::invalid_argument("no polygon model for this type/rank");
}

Arc Arc::chord(int i, int j, int wind) {
    assert(i >= 1 && j >= 1 && i < j);
    Arc a;
    a.kind = Chord;
    a.i = static_cast<uint8_t>(i);
    a.j = static_cast<uint8_t>(j);
    a.wind = static_cast<uint8_t>(wind);
    return a;
}

Arc Arc::radius(int v, bool notched) {
    Arc a;
    a.kind = Radius;
    a.i = static_cast<uint8_t>(v);
    a.j = 0;
    a.wind = notched ? 1 : 0;
    return a;
}

Arc Arc::boundary(int i) {
    Arc a;
    a.kind = Boundary;
    a.i = static_cast<uint8_t>(i);
    a.j = 0;
    a.wind = 0;
    return a;
}

std::string Arc::str() const {
    std::ostringstream os;
    switch (kind) {
        case Chord:
            os << "c(" << int(i) << "," << int(j) << (wind ? ",around" : "") << ")";
            break;
        case Radius:
            os << "r(" << int(i) << (wind ? ",notched" : "") << ")";
            break;
        case Boundary:
            os << "b(" << int(i) << ")";
            break;
    }
    return os.str();
}

namespace {

int cyclicNext(int v, int m) { return v % m + 1; }

// x strictly inside the cyclic open interval (p, q) walking p+1, p+2, ..., q-1
bool strictlyInside(int x, int p, int q, int M) {
    int span = (q - p + M) % M;
    int off = (x - p + M) % M;
    return off > 0 && off < span;
}

// strict interleaving of chords {a1,a2}, {b1,b2} on an M-cycle
bool chordsInterleave(int M, std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first ||
        a.second == b.second)
        return false;
    bool in1 = strictlyInside(b.first, a.first, a.second, M);
    bool in2 = strictlyInside(b.second, a.first, a.second, M);
    return in1 != in2;
}

void validatePolygon(const MarkedPolygon& P) {
    switch (P.kind) {
        case PolyKind::Plain:
            if (P.m < 4) throw std::invalid_argument("plain polygon needs >= 4 vertices");
            return;
        case PolyKind::Punctured:
            if (P.m < 3) throw std::invalid_argument("punctured polygon needs >= 3 vertices");
            return;
        case PolyKind::FoldedPlain:
            if (P.m < 4 || P.m % 2)
                throw std::invalid_argument("folded plain polygon needs even >= 4 vertices");
            return;
        case PolyKind::FoldedPunctured:
            if (P.m < 3)
                throw std::invalid_argument("folded punctured polygon needs >= 3 vertices");
            return;
    }
}

} // namespace

std::vector<std::pair<int, int>> liftToDoubleCover(const MarkedPolygon& P, const Arc& a) {
    if (!P.punctured()) throw std::invalid_argument("lift applies to punctured kinds");
    const int m = P.m;
    switch (a.kind) {
        case Arc::Radius:
            return {{a.i, a.i + m}};
        case Arc::Chord:
            if (a.wind == 0) return {{a.i, a.j}, {a.i + m, a.j + m}};
            return {{a.i, a.j + m}, {a.j, a.i + m}};
        case Arc::Boundary:
            throw std::invalid_argument("boundary segments have no lift");
    }
    return {};
}

bool arcsCross(const MarkedPolygon& P, const Arc& a, const Arc& b) {
    if (a.kind == Arc::Boundary || b.kind == Arc::Boundary) return false;
    if (a == b) return false;
    if (!P.punctured()) {
        return chordsInterleave(P.m, {a.i, a.j}, {b.i, b.j});
    }
    // untagged versions of the two tagged radii at one vertex coincide
    if (a.kind == Arc::Radius && b.kind == Arc::Radius && a.i == b.i) return false;
    auto la = liftToDoubleCover(P, a);
    auto lb = liftToDoubleCover(P, b);
    for (const auto& ca : la)
        for (const auto& cb : lb)
            if (chordsInterleave(2 * P.m, ca, cb)) return true;
    return false;
}

bool compatible(const MarkedPolygon& P, const Arc& a, const Arc& b) {
    if (a == b) return true;
    if (a.kind == Arc::Radius && b.kind == Arc::Radius) {
        if (a.i == b.i) return true;     // untagged versions coincide
        if (a.wind != b.wind) return false; // notched vs plain at distinct vertices
        return true; // same tag: radii to distinct vertices never cross
    }
    return !arcsCross(P, a, b);
}

bool orbitsCompatible(const MarkedPolygon& P, const Orbit& a, const Orbit& b) {
    for (const Arc& x : a)
        for (const Arc& y : b)
            if (!compatible(P, x, y)) return false;
    return true;
}

Arc gImage(const MarkedPolygon& P, const Arc& a) {
    switch (P.kind) {
        case PolyKind::Plain:
        case PolyKind::Punctured:
            return a;
        case PolyKind::FoldedPlain: {
            const int m = P.m, h = P.m / 2;
            auto shift = [&](int v) { return (v - 1 + h) % m + 1; };
            if (a.kind == Arc::Boundary) return Arc::boundary(shift(a.i));
            assert(a.kind == Arc::Chord);
            int i = shift(a.i), j = shift(a.j);
            if (i > j) std::swap(i, j);
            return Arc::chord(i, j);
        }
        case PolyKind::FoldedPunctured:
            if (a.kind == Arc::Radius) return Arc::radius(a.i, a.wind == 0);
            return a;
    }
    return a;
}

Orbit orbitOf(const MarkedPolygon& P, const Arc& a) {
    Orbit o{a};
    Arc g = gImage(P, a);
    if (!(g == a)) o.push_back(g);
    std::sort(o.begin(), o.end());
    return o;
}

namespace {

std::vector<Arc> computeAllArcs(const MarkedPolygon& P) {
    validatePolygon(P);
    std::vector<Arc> out;
    const int m = P.m;
    if (!P.punctured()) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 2; j <= m; ++j) {
                if (i == 1 && j == m) continue; // cyclically adjacent
                out.push_back(Arc::chord(i, j));
            }
        return out;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            // the excluded windings cut unpunctured digons with a boundary segment
            if (j - i >= 2) out.push_back(Arc::chord(i, j, 0));
            if (!(i == 1 && j == m)) out.push_back(Arc::chord(i, j, 1));
        }
    for (int v = 1; v <= m; ++v) {
        out.push_back(Arc::radius(v, false));
        out.push_back(Arc::radius(v, true));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::mutex gCacheMutex;

} // namespace

const std::vector<Arc>& allArcs(const MarkedPolygon& P) {
    static std::map<MarkedPolygon, std::vector<Arc>> cache;
    std::lock_guard<std::mutex> lock(gCacheMutex);
    auto it = cache.find(P);
    if (it == cache.end()) it = cache.emplace(P, computeAllArcs(P)).first;
    return it->second;
}

const std::vector<Orbit>& allOrbits(const MarkedPolygon& P) {
    static std::map<MarkedPolygon, std::vector<Orbit>> cache;
    const std::vector<Arc>& arcs = allArcs(P); // fills the arc cache first
    std::lock_guard<std::mutex> lock(gCacheMutex);
    auto it = cache.find(P);
    if (it == cache.end()) {
        std::set<Orbit> seen;
        for (const Arc& a : arcs) seen.insert(orbitOf(P, a));
        it = cache.emplace(P, std::vector<Orbit>(seen.begin(), seen.end())).first;
    }
    return it->second;
}

std::vector<Arc> Triangulation::unfoldedArcs() const {
    std::vector<Arc> out;
    for (const Orbit& o : slots)
        for (const Arc& a : o) out.push_back(a);
    return out;
}

std::string Triangulation::key() const {
    std::vector<Arc> arcs = unfoldedArcs();
    std::sort(arcs.begin(), arcs.end());
    std::string s;
    for (const Arc& a : arcs) {
        s.push_back(static_cast<char>(a.kind));
        s.push_back(static_cast<char>(a.i));
        s.push_back(static_cast<char>(a.j));
        s.push_back(static_cast<char>(a.wind));
    }
    return s;
}

bool Triangulation::contains(const Arc& a) const {
    for (const Orbit& o : slots)
        for (const Arc& x : o)
            if (x == a) return true;
    return false;
}

Triangulation seedTriangulation(const MarkedPolygon& P) {
    validatePolygon(P);
    Triangulation T;
    T.P = P;
    const int m = P.m;
    switch (P.kind) {
        case PolyKind::Plain:
            for (int j = 3; j < m; ++j) T.slots.push_back({Arc::chord(1, j)});
            break;
        case PolyKind::Punctured:
            for (int v = 1; v <= m; ++v) T.slots.push_back({Arc::radius(v, false)});
            break;
        case PolyKind::FoldedPlain: {
            const int h = m / 2;
            T.slots.push_back({Arc::chord(1, 1 + h)}); // the diameter
            for (int j = 3; j <= h; ++j)
                T.slots.push_back(orbitOf(P, Arc::chord(1, j)));
            break;
        }
        case PolyKind::FoldedPunctured: {
            T.slots.push_back(orbitOf(P, Arc::radius(1, false))); // tagged pair
            for (int j = 3; j <= m; ++j) T.slots.push_back({Arc::chord(1, j, 0)});
            break;
        }
    }
    assert(static_cast<int>(T.slots.size()) == P.rank());
    return T;
}

// ---------------------------------------------------------------------------
// Face tracing on a disk: boundary vertices 1..M clockwise, optional center.

namespace {

constexpr int kCenter = 0;

struct DiskComplex {
    int M = 0;
    bool hasCenter = false;
    struct Edge {
        int u, v; // v may be kCenter
        Arc payload;
    };
    std::vector<Edge> edges;

    int tail(int h) const { return (h & 1) ? edges[h / 2].v : edges[h / 2].u; }
    int head(int h) const { return (h & 1) ? edges[h / 2].u : edges[h / 2].v; }

    // counterclockwise interior faces as half-edge lists; outer face dropped
    std::vector<std::vector<int>> traceFaces() const {
        const int H = static_cast<int>(edges.size()) * 2;
        // rotations: clockwise order of outgoing half-edges per vertex
        std::map<int, std::vector<std::pair<int, int>>> rot; // vertex -> (slot, halfedge)
        for (int h = 0; h < H; ++h) {
            int u = tail(h), v = head(h);
            int slot;
            if (u == kCenter) {
                slot = v; // spokes around the center, clockwise by vertex index
            } else if (v == kCenter) {
                slot = 2 * (M / 2);
            } else {
                slot = 2 * ((v - u + M) % M);
            }
            rot[u].push_back({slot, h});
        }
        std::map<int, std::map<int, int>> posOf; // vertex -> halfedge -> index
        for (auto& [u, lst] : rot) {
            std::sort(lst.begin(), lst.end());
            for (size_t idx = 0; idx + 1 < lst.size(); ++idx)
                if (lst[idx].first == lst[idx + 1].first)
                    throw std::logic_error("rotation slot collision in disk complex");
            for (size_t idx = 0; idx < lst.size(); ++idx) posOf[u][lst[idx].second] = static_cast<int>(idx);
        }
        auto next = [&](int h) {
            int v = head(h);
            int twin = h ^ 1;
            const auto& lst = rot[v];
            int idx = posOf[v][twin];
            return lst[(idx + 1) % lst.size()].second;
        };
        std::vector<char> used(H, 0);
        std::vector<std::vector<int>> faces;
        int outerFace = -1;
        for (int h0 = 0; h0 < H; ++h0) {
            if (used[h0]) continue;
            std::vector<int> face;
            int h = h0;
            do {
                used[h] = 1;
                face.push_back(h);
                h = next(h);
            } while (h != h0);
            // the half-edge (1 -> 2) of the boundary edge identifies the outer face
            for (int e : face) {
                if (edges[e / 2].payload.kind == Arc::Boundary && tail(e) == 1 && head(e) == 2) {
                    outerFace = static_cast<int>(faces.size());
                    break;
                }
            }
            faces.push_back(std::move(face));
        }
        assert(outerFace >= 0);
        faces.erase(faces.begin() + outerFace);
        return faces;
    }
};

// Builds the traced complex. For punctured kinds the arcs are lifted to the
// branched double cover (2m-gon, center vertex for radii); the payload of a
// lifted edge is the downstairs arc.
DiskComplex buildComplex(const MarkedPolygon& P, const std::vector<Arc>& arcs,
                         bool includeRadii) {
    DiskComplex C;
    if (!P.punctured()) {
        C.M = P.m;
        for (int i = 1; i <= C.M; ++i)
            C.edges.push_back({i, cyclicNext(i, C.M), Arc::boundary(i)});
        for (const Arc& a : arcs) {
            assert(a.kind == Arc::Chord);
            C.edges.push_back({a.i, a.j, a});
        }
        return C;
    }
    const int m = P.m;
    C.M = 2 * m;
    for (int i = 1; i <= C.M; ++i)
        C.edges.push_back({i, cyclicNext(i, C.M), Arc::boundary((i - 1) % m + 1)});
    for (const Arc& a : arcs) {
        if (a.kind == Arc::Radius) {
            if (!includeRadii) continue;
            C.hasCenter = true;
            C.edges.push_back({a.i, kCenter, a});
            C.edges.push_back({a.i + m, kCenter, a});
        } else {
            for (auto [u, v] : liftToDoubleCover(P, a)) {
                int uu = (u - 1) % C.M + 1, vv = (v - 1) % C.M + 1;
                C.edges.push_back({uu, vv, a});
            }
        }
    }
    return C;
}

int deckVertex(int v, int M) { return v == kCenter ? kCenter : (v - 1 + M / 2) % M + 1; }

// deck partner of every edge (by endpoints); requires the complex to be
// centrally symmetric
std::vector<int> deckEdgeMap(const DiskComplex& C) {
    std::map<std::pair<int, int>, int> byEnds;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (size_t e = 0; e < C.edges.size(); ++e)
        byEnds[norm(C.edges[e].u, C.edges[e].v)] = static_cast<int>(e);
    std::vector<int> deck(C.edges.size());
    for (size_t e = 0; e < C.edges.size(); ++e) {
        auto it = byEnds.find(
            norm(deckVertex(C.edges[e].u, C.M), deckVertex(C.edges[e].v, C.M)));
        if (it == byEnds.end()) throw std::logic_error("complex is not centrally symmetric");
        deck[e] = it->second;
    }
    return deck;
}

} // namespace

std::vector<Face> facesOf(const MarkedPolygon& P, const std::vector<Arc>& arcsIn) {
    validatePolygon(P);
    if (!P.punctured()) {
        DiskComplex C = buildComplex(P, arcsIn, true);
        std::vector<Face> out;
        for (const auto& f : C.traceFaces()) {
            Face face;
            for (int h : f) face.sides.push_back(C.edges[h / 2].payload);
            assert(face.sides.size() == 3);
            out.push_back(std::move(face));
        }
        return out;
    }

    // tagged pair detection: both tags of the same radius present
    int pairVertex = -1;
    std::vector<Arc> arcs;
    std::map<int, int> radiusTags; // vertex -> bitmask of tags
    for (const Arc& a : arcsIn) {
        if (a.kind == Arc::Radius) radiusTags[a.i] |= a.wind ? 2 : 1;
    }
    for (auto [v, mask] : radiusTags)
        if (mask == 3) {
            if (pairVertex >= 0) throw std::logic_error("two tagged pairs in one triangulation");
            pairVertex = v;
        }
    for (const Arc& a : arcsIn) {
        if (a.kind == Arc::Radius && a.i == pairVertex) {
            if (a.wind == 0) arcs.push_back(a); // single untagged stand-in
        } else {
            arcs.push_back(a);
        }
    }

    DiskComplex C = buildComplex(P, arcs, true);
    auto upFaces = C.traceFaces();
    std::vector<int> deck = deckEdgeMap(C);

    // pair faces under the deck involution, keep one of each pair
    std::map<std::vector<int>, int> bySig;
    auto edgeSig = [&](const std::vector<int>& face) {
        std::vector<int> s;
        for (int h : face) s.push_back(h / 2);
        std::sort(s.begin(), s.end());
        return s;
    };
    for (size_t i = 0; i < upFaces.size(); ++i) bySig[edgeSig(upFaces[i])] = static_cast<int>(i);

    std::vector<Face> out;
    std::set<int> consumed;
    for (size_t i = 0; i < upFaces.size(); ++i) {
        if (consumed.count(static_cast<int>(i))) continue;
        std::vector<int> deckSig;
        for (int h : upFaces[i]) deckSig.push_back(deck[h / 2]);
        std::sort(deckSig.begin(), deckSig.end());
        auto it = bySig.find(deckSig);
        if (it == bySig.end() || it->second == static_cast<int>(i))
            throw std::logic_error("face tracing: missing deck partner");
        consumed.insert(it->second);
        consumed.insert(static_cast<int>(i));

        Face face;
        for (int h : upFaces[i]) face.sides.push_back(C.edges[h / 2].payload);
        if (face.sides.size() == 4) {
            // the pair digon: two adjacent radius sides at the pair vertex
            int rpos = -1;
            for (int p = 0; p < 4; ++p) {
                const Arc& a = face.sides[p];
                const Arc& b = face.sides[(p + 1) % 4];
                if (a.kind == Arc::Radius && b.kind == Arc::Radius && a.i == b.i) {
                    rpos = p;
                    break;
                }
            }
            if (rpos < 0 || face.sides[rpos].i != pairVertex)
                throw std::logic_error("unexpected quadrilateral face");
            Face digon;
            digon.pairDigon = true;
            digon.pairVertex = pairVertex;
            digon.sides = {face.sides[(rpos + 2) % 4], face.sides[(rpos + 3) % 4]};
            out.push_back(std::move(digon));
        } else {
            assert(face.sides.size() == 3);
            out.push_back(std::move(face));
        }
    }
    return out;
}

SurfaceQuiver surfaceQuiver(const MarkedPolygon& P, const std::vector<Arc>& arcs,
                            bool includeBoundary) {
    SurfaceQuiver q;
    q.nodes = arcs;
    if (includeBoundary)
        for (int i = 1; i <= P.m; ++i) q.nodes.push_back(Arc::boundary(i));
    std::map<Arc, int> idx;
    for (size_t i = 0; i < q.nodes.size(); ++i) idx[q.nodes[i]] = static_cast<int>(i);
    q.net = IntMatrix(static_cast<int>(q.nodes.size()));

    auto addArrow = [&](const Arc& from, const Arc& to) {
        auto fi = idx.find(from);
        auto ti = idx.find(to);
        if (fi == idx.end() || ti == idx.end()) return;
        q.net.at(fi->second, ti->second) += 1;
        q.net.at(ti->second, fi->second) -= 1;
    };

    for (const Face& f : facesOf(P, arcs)) {
        if (f.pairDigon) {
            // counterclockwise (deltaAfter, deltaBefore, loop); clockwise
            // arrows: loop -> deltaBefore -> deltaAfter -> loop, the loop
            // standing for both tagged radii
            const Arc& da = f.sides[0];
            const Arc& db = f.sides[1];
            Arc rp = Arc::radius(f.pairVertex, false);
            Arc rn = Arc::radius(f.pairVertex, true);
            addArrow(rp, db);
            addArrow(rn, db);
            addArrow(db, da);
            addArrow(da, rp);
            addArrow(da, rn);
        } else {
            // counterclockwise (s0, s1, s2): clockwise consecutive pairs
            for (int t = 0; t < 3; ++t) addArrow(f.sides[(t + 1) % 3], f.sides[t]);
        }
    }
    return q;
}

ExchangeMatrix exchangeMatrix(const Triangulation& T) {
    std::vector<Arc> arcs = T.unfoldedArcs();
    SurfaceQuiver q = surfaceQuiver(T.P, arcs, false);
    const int n = static_cast<int>(T.slots.size());
    if (!T.P.folded()) {
        IntMatrix b(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.at(i, j) = q.net.at(i, j);
        return ExchangeMatrix(std::move(b));
    }
    // map unfolded arc index -> slot, slot -> first arc index
    std::vector<int> slotOf(arcs.size());
    std::vector<int> firstArc(n);
    {
        int a = 0;
        for (int s = 0; s < n; ++s) {
            firstArc[s] = a;
            for (size_t k = 0; k < T.slots[s].size(); ++k) slotOf[a++] = s;
        }
    }
    IntMatrix b(n);
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
            if (I == J) continue;
            int64_t sum = 0;
            for (size_t a = 0; a < arcs.size(); ++a)
                if (slotOf[a] == I) sum += q.net.at(static_cast<int>(a), firstArc[J]);
            b.at(I, J) = sum;
        }
    return ExchangeMatrix(std::move(b));
}

FlipResult flipArc(const Triangulation& T, int slot) {
    if (slot < 0 || slot >= static_cast<int>(T.slots.size()))
        throw std::out_of_range("flip slot out of range");
    const Orbit& target = T.slots[slot];
    std::vector<const Orbit*> others;
    for (int s = 0; s < static_cast<int>(T.slots.size()); ++s)
        if (s != slot) others.push_back(&T.slots[s]);

    const Orbit* found = nullptr;
    for (const Orbit& cand : allOrbits(T.P)) {
        if (cand == target) continue;
        if (cand.size() != target.size()) continue;
        if (T.contains(cand[0])) continue;
        bool ok = orbitsCompatible(T.P, cand, cand);
        for (const Orbit* o : others) {
            if (!ok) break;
            ok = orbitsCompatible(T.P, cand, *o);
        }
        if (!ok) continue;
        if (found) throw std::logic_error("flip is not unique");
        found = &cand;
    }
    if (!found) throw std::logic_error("no flip found");
    FlipResult r;
    r.T = T;
    r.T.slots[slot] = *found;
    r.replaced = target;
    r.introduced = *found;
    return r;
}

namespace {

// sides of the region of the chord complex containing the puncture
std::vector<Arc> punctureZoneSides(const MarkedPolygon& P, const std::vector<Arc>& arcs) {
    std::vector<Arc> chords;
    for (const Arc& a : arcs)
        if (a.kind == Arc::Chord) chords.push_back(a);
    DiskComplex C = buildComplex(P, chords, false);
    auto faces = C.traceFaces();
    std::vector<int> deck = deckEdgeMap(C);
    for (const auto& f : faces) {
        std::vector<int> sig, dsig;
        for (int h : f) sig.push_back(h / 2);
        for (int h : f) dsig.push_back(deck[h / 2]);
        std::sort(sig.begin(), sig.end());
        std::sort(dsig.begin(), dsig.end());
        if (sig == dsig) {
            std::set<Arc> sides;
            for (int h : f) sides.insert(C.edges[h / 2].payload);
            return std::vector<Arc>(sides.begin(), sides.end());
        }
    }
    throw std::logic_error("no puncture zone found");
}

std::pair<int, int> arcEndpoints(const MarkedPolygon& P, const Arc& a) {
    if (a.kind == Arc::Chord) return {a.i, a.j};
    if (a.kind == Arc::Boundary) return {a.i, cyclicNext(a.i, P.m)};
    throw std::invalid_argument("radius has a puncture endpoint");
}

void appendArc(std::string& s, const Arc& a) {
    s.push_back(static_cast<char>(a.kind));
    s.push_back(static_cast<char>(a.i));
    s.push_back(static_cast<char>(a.j));
    s.push_back(static_cast<char>(a.wind));
}

std::string encodeQuad(const MarkedPolygon& P, const std::vector<Arc>& sides,
                       const std::array<Orbit, 2>& diagPair, bool digonCase,
                       const Orbit* diagonal) {
    std::string s;
    s.push_back(static_cast<char>(P.kind));
    s.push_back(static_cast<char>(P.m));
    s.push_back(static_cast<char>(sides.size()));
    for (const Arc& a : sides) appendArc(s, a);
    for (const Orbit& o : diagPair) {
        s.push_back(static_cast<char>(o.size()));
        for (const Arc& a : o) appendArc(s, a);
    }
    s.push_back(digonCase ? 1 : 0);
    if (diagonal) {
        s.push_back(static_cast<char>(diagonal->size()));
        for (const Arc& a : *diagonal) appendArc(s, a);
    }
    return s;
}

// quadrilateral sides of a single tagged arc inside an unfolded triangulation
std::vector<Arc> memberQuadSides(const MarkedPolygon& P, const std::vector<Arc>& tagged,
                                 const Arc& gamma, const std::vector<Face>& faces,
                                 bool* digonCase) {
    if (P.punctured() && gamma.kind == Arc::Radius) {
        std::vector<Arc> zone = punctureZoneSides(P, tagged);
        if (zone.size() == 2) {
            *digonCase = true;
            auto [a1, b1] = arcEndpoints(P, zone[0]);
            auto [a2, b2] = arcEndpoints(P, zone[1]);
            if (std::minmax(a1, b1) != std::minmax(a2, b2))
                throw std::logic_error("digon sides disagree on vertices");
            std::set<Arc> sides(zone.begin(), zone.end());
            for (int v : {a1, b1})
                for (bool notched : {false, true}) {
                    Arc r = Arc::radius(v, notched);
                    if (r == gamma) continue;
                    if (compatible(P, gamma, r)) sides.insert(r);
                }
            if (sides.size() != 4) throw std::logic_error("digon quad has wrong side count");
            return std::vector<Arc>(sides.begin(), sides.end());
        }
    }
    std::set<Arc> sides;
    for (const Face& f : faces) {
        bool contains = false;
        for (const Arc& s : f.sides) contains = contains || s == gamma;
        if (!contains) continue;
        for (const Arc& s : f.sides)
            if (!(s == gamma)) sides.insert(s);
        if (f.pairDigon) {
            sides.insert(Arc::radius(f.pairVertex, false));
            sides.insert(Arc::radius(f.pairVertex, true));
        }
    }
    return std::vector<Arc>(sides.begin(), sides.end());
}

} // namespace

namespace {

// In the once-punctured-digon case the listed radii depend on the chosen
// diagonal; the canonical encoding keeps the two digon sides only and lets
// the diagonal pair carry the rest.
std::vector<Arc> encodableSides(const QuadDiag& q) {
    if (!q.digonCase) return q.sides;
    std::vector<Arc> out;
    for (const Arc& a : q.sides)
        if (a.kind != Arc::Radius) out.push_back(a);
    return out;
}

std::string canonicalQuadEncoding(const QuadDiag& q, bool withDiagonal) {
    std::vector<Arc> sides = encodableSides(q);
    std::string raw = encodeQuad(q.P, sides, q.diagPair, q.digonCase,
                                 withDiagonal ? &q.diagonal : nullptr);
    if (!q.P.folded()) return raw;
    std::vector<Arc> gSides;
    for (const Arc& a : sides) gSides.push_back(gImage(q.P, a));
    std::sort(gSides.begin(), gSides.end());
    std::array<Orbit, 2> gPair;
    for (int t = 0; t < 2; ++t) gPair[t] = orbitOf(q.P, gImage(q.P, q.diagPair[t][0]));
    if (gPair[1] < gPair[0]) std::swap(gPair[0], gPair[1]);
    Orbit gDiag = orbitOf(q.P, gImage(q.P, q.diagonal[0]));
    std::string alt =
        encodeQuad(q.P, gSides, gPair, q.digonCase, withDiagonal ? &gDiag : nullptr);
    return std::min(raw, alt);
}

} // namespace

std::string QuadDiag::quadId() const { return canonicalQuadEncoding(*this, false); }

std::string QuadDiag::key() const { return canonicalQuadEncoding(*this, true); }

namespace {

std::set<int> quadVertexSet(const std::vector<Arc>& sides) {
    std::set<int> vs;
    for (const Arc& a : sides) {
        vs.insert(a.i);
        if (a.kind == Arc::Chord) vs.insert(a.j);
    }
    return vs;
}

} // namespace

QuadDiag quadrilateral(const Triangulation& T, int slot) {
    if (slot < 0 || slot >= static_cast<int>(T.slots.size()))
        throw std::out_of_range("arc slot out of range");
    QuadDiag q;
    q.P = T.P;
    q.diagonal = T.slots[slot];
    std::vector<Arc> tagged = T.unfoldedArcs();
    std::vector<Face> faces = facesOf(T.P, tagged);
    std::set<Arc> sides;
    bool digon = false;
    std::vector<std::vector<Arc>> perMember;
    for (const Arc& gamma : T.slots[slot]) {
        perMember.push_back(memberQuadSides(T.P, tagged, gamma, faces, &digon));
        for (const Arc& s : perMember.back()) sides.insert(s);
    }
    // arcs of the orbit itself never count as sides of its own quadrilateral
    for (const Arc& gamma : T.slots[slot]) sides.erase(gamma);
    q.sides.assign(sides.begin(), sides.end());
    q.digonCase = digon;
    FlipResult f = flipArc(T, slot);
    q.diagPair = {T.slots[slot], f.introduced};
    if (q.diagPair[1] < q.diagPair[0]) std::swap(q.diagPair[0], q.diagPair[1]);
    // representative member: the quadrilateral containing the smallest
    // vertices (ties resolved by the full sorted vertex list)
    size_t best = 0;
    for (size_t c = 1; c < perMember.size(); ++c) {
        std::set<int> a = quadVertexSet(perMember[c]);
        std::set<int> b = quadVertexSet(perMember[best]);
        if (std::vector<int>(a.begin(), a.end()) < std::vector<int>(b.begin(), b.end()))
            best = c;
    }
    q.memberDiagonal = T.slots[slot][best];
    q.memberSides = perMember[best];
    std::sort(q.memberSides.begin(), q.memberSides.end());
    return q;
}

std::vector<Triangulation> enumerateTriangulations(const MarkedPolygon& P, size_t guard) {
    Triangulation seed = seedTriangulation(P);
    std::map<std::string, size_t> byKey;
    std::vector<Triangulation> out{seed};
    byKey.emplace(seed.key(), 0);
    for (size_t u = 0; u < out.size(); ++u) {
        for (int s = 0; s < static_cast<int>(out[u].slots.size()); ++s) {
            Triangulation next = flipArc(out[u], s).T;
            std::string key = next.key();
            if (byKey.emplace(std::move(key), out.size()).second) {
                out.push_back(std::move(next));
                if (out.size() > guard)
                    throw CapabilityError("triangulation enumeration exceeded guard");
            }
        }
    }
    return out;
}

std::vector<QuadDiag> enumerateQuadrilaterals(const MarkedPolygon& P, size_t guard) {
    std::map<std::string, QuadDiag> seen;
    for (const Triangulation& T : enumerateTriangulations(P, guard)) {
        for (int s = 0; s < static_cast<int>(T.slots.size()); ++s) {
            QuadDiag q = quadrilateral(T, s);
            seen.emplace(q.key(), std::move(q));
            if (seen.size() > guard)
                throw CapabilityError("quadrilateral enumeration exceeded guard");
        }
    }
    std::vector<QuadDiag> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

long long closedFormQuadCount(const MarkedPolygon& P) {
    validatePolygon(P);
    const long long m = P.m;
    switch (P.kind) {
        case PolyKind::Plain:
            return binomial(m, 4);
        case PolyKind::Punctured:
            return 4 * binomial(m, 4) + 9 * binomial(m, 3) + 2 * binomial(m, 2);
        case PolyKind::FoldedPunctured:
            return 4 * binomial(m, 4) + 3 * binomial(m, 3) + binomial(m, 2);
        case PolyKind::FoldedPlain: {
            long long n = m / 2 - 1;
            return n * (n + 1) * (n * n + 2) / 6;
        }
    }
    return 0;
}

} // namespace xpat
