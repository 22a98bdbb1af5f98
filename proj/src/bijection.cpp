#include "xpat/bijection.hpp"

#include "xpat/canonical_key.hpp"

#include <map>
#include <set>
#include <sstream>

namespace xpat {

namespace {

struct State {
    Triangulation T;
    XSeed seed; // B equals exchangeMatrix(T), x indexed by slots
};

} // namespace

BijectionReport verifyBijection(DynkinType t, int n) {
    BijectionReport rep;
    MarkedPolygon P = polygonForType(t, n);
    const int rank = P.rank();

    Triangulation T0 = seedTriangulation(P);
    XSeed s0 = universalXSeed(exchangeMatrix(T0));

    std::map<std::string, size_t> byKey;
    std::vector<State> states;
    states.push_back({T0, s0});
    byKey.emplace(T0.key(), 0);

    // quad key -> value; value encoding -> quad key
    std::map<std::string, SemifieldValue> valueOf;
    std::map<std::string, std::string> keyOfValue;
    // quadId -> set of (key, value)
    std::map<std::string, std::map<std::string, SemifieldValue>> byQuad;

    rep.singleValued = true;
    rep.injective = true;
    rep.localityHolds = true;
    rep.matrixCommutes = true;

    auto fail = [&](const std::string& msg) {
        if (rep.failure.empty()) rep.failure = msg;
    };

    std::string valueBytes;
    for (size_t u = 0; u < states.size(); ++u) {
        // quadrilaterals carried by this triangulation
        std::vector<QuadDiag> quads(rank);
        for (int k = 0; k < rank; ++k) {
            quads[k] = quadrilateral(states[u].T, k);
            std::string key = quads[k].key();
            const SemifieldValue& val = states[u].seed.x[k];
            auto it = valueOf.find(key);
            if (it == valueOf.end()) {
                valueOf.emplace(key, val);
                valueBytes.clear();
                appendValueBytes(valueBytes, val);
                auto [vit, fresh] = keyOfValue.emplace(valueBytes, key);
                if (!fresh && vit->second != key) {
                    rep.injective = false;
                    fail("same X-variable on two quadrilateral keys");
                }
                byQuad[quads[k].quadId()].emplace(key, val);
            } else if (!(it->second == val)) {
                rep.singleValued = false;
                fail("quadrilateral key carries two different X-variables");
            }
        }

        for (int k = 0; k < rank; ++k) {
            FlipResult f = flipArc(states[u].T, k);
            XSeed mut = mutateX(states[u].seed, k);
            ExchangeMatrix direct = exchangeMatrix(f.T);
            if (!(direct.matrix() == mut.B.matrix())) {
                rep.matrixCommutes = false;
                fail("B(flip T) != mu_k(B(T))");
            }
            // locality: arcs whose quadrilateral avoids the flipped orbit
            for (int j = 0; j < rank; ++j) {
                if (j == k) continue;
                bool touches = false;
                for (const Arc& a : f.replaced) {
                    for (const Arc& s : quads[j].sides) touches = touches || s == a;
                    for (const Arc& d : quads[j].diagonal) touches = touches || d == a;
                }
                if (!touches && !(mut.x[j] == states[u].seed.x[j])) {
                    rep.localityHolds = false;
                    fail("flip outside q_T(gamma) changed the X-variable");
                }
            }
            std::string key = f.T.key();
            auto [it, inserted] = byKey.emplace(std::move(key), states.size());
            if (inserted) {
                states.push_back({f.T, mut});
            } else {
                // path independence of the propagated seed
                const State& prev = states[it->second];
                for (int j = 0; j < rank; ++j) {
                    // align by arc orbit: slots may be ordered differently
                    const Orbit& o = f.T.slots[j];
                    int pj = -1;
                    for (int q = 0; q < rank; ++q)
                        if (prev.T.slots[q] == o) pj = q;
                    if (pj < 0 || !(prev.seed.x[pj] == mut.x[j])) {
                        rep.singleValued = false;
                        fail("propagated seed differs between flip paths");
                    }
                }
            }
        }
    }

    rep.triangulations = states.size();
    rep.quadKeys = valueOf.size();
    rep.distinctXVars = keyOfValue.size();
    rep.closedFormQuads = closedFormQuadCount(P);

    // inverse pairs per quadrilateral
    rep.inversePairs = true;
    for (const auto& [qid, keys] : byQuad) {
        if (keys.size() != 2) {
            rep.inversePairs = false;
            fail("quadrilateral does not carry exactly two diagonals");
            continue;
        }
        auto it = keys.begin();
        const SemifieldValue& a = it->second;
        const SemifieldValue& b = std::next(it)->second;
        if (!(a.mul(b).isUnit())) {
            rep.inversePairs = false;
            fail("diagonal values are not mutually inverse");
        }
    }

    // coverage: seen keys == full census
    std::set<std::string> census;
    for (const QuadDiag& q : enumerateQuadrilaterals(P)) census.insert(q.key());
    rep.coversCensus = census.size() == valueOf.size();
    if (rep.coversCensus)
        for (const auto& [k, v] : valueOf) rep.coversCensus &= census.count(k) > 0;
    if (!rep.coversCensus) fail("seen quadrilateral keys differ from the census");

    rep.ok = rep.singleValued && rep.injective && rep.inversePairs && rep.coversCensus &&
             rep.localityHolds && rep.matrixCommutes &&
             rep.quadKeys == 2 * static_cast<size_t>(rep.closedFormQuads) &&
             rep.quadKeys == rep.distinctXVars;
    if (!rep.ok && rep.failure.empty()) fail("count mismatch");
    return rep;
}

} // namespace xpat
