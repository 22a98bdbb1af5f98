#include "xpat/dynkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace xpat {

DynkinType dynkinTypeFromChar(char c) {
    switch (c) {
        case 'A': case 'a': return DynkinType::A;
        case 'B': case 'b': return DynkinType::B;
        case 'C': case 'c': return DynkinType::C;
        case 'D': case 'd': return DynkinType::D;
        case 'E': case 'e': return DynkinType::E;
        case 'F': case 'f': return DynkinType::F;
        case 'G': case 'g': return DynkinType::G;
    }
    throw std::invalid_argument(std::string("unknown Dynkin type: ") + c);
}

char dynkinTypeChar(DynkinType t) {
    switch (t) {
        case DynkinType::A: return 'A';
        case DynkinType::B: return 'B';
        case DynkinType::C: return 'C';
        case DynkinType::D: return 'D';
        case DynkinType::E: return 'E';
        case DynkinType::F: return 'F';
        case DynkinType::G: return 'G';
    }
    return '?';
}

bool validDynkin(DynkinType t, int n) {
    switch (t) {
        case DynkinType::A: return n >= 1;
        case DynkinType::B: return n >= 2;
        case DynkinType::C: return n >= 2;
        case DynkinType::D: return n >= 2; // canonical for n >= 4
        case DynkinType::E: return n >= 6 && n <= 8;
        case DynkinType::F: return n == 4;
        case DynkinType::G: return n == 2;
    }
    return false;
}

namespace {

// Diagram edges as (i, j, a_ij, a_ji), 0-based.
struct Edge {
    int i, j;
    int aij, aji;
};

std::vector<Edge> diagramEdges(DynkinType t, int n) {
    std::vector<Edge> e;
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i) e.push_back({i, i + 1, -1, -1});
    };
    switch (t) {
        case DynkinType::A:
            path(0, n - 1);
            break;
        case DynkinType::B:
            // alpha_n short: a_{n-1,n} = -1, a_{n,n-1} = -2
            path(0, n - 2);
            e.push_back({n - 2, n - 1, -1, -2});
            break;
        case DynkinType::C:
            path(0, n - 2);
            e.push_back({n - 2, n - 1, -2, -1});
            break;
        case DynkinType::D:
            if (n >= 3) {
                path(0, n - 2);
                e.push_back({n - 3, n - 1, -1, -1});
            }
            break;
        case DynkinType::E:
            // Bourbaki: path 1-3-4-5-6(-7-8), node 2 attached to 4
            e.push_back({0, 2, -1, -1});
            e.push_back({2, 3, -1, -1});
            e.push_back({3, 4, -1, -1});
            e.push_back({4, 5, -1, -1});
            e.push_back({1, 3, -1, -1});
            if (n >= 7) e.push_back({5, 6, -1, -1});
            if (n >= 8) e.push_back({6, 7, -1, -1});
            break;
        case DynkinType::F:
            e.push_back({0, 1, -1, -1});
            e.push_back({1, 2, -1, -2});
            e.push_back({2, 3, -1, -1});
            break;
        case DynkinType::G:
            e.push_back({0, 1, -1, -3});
            break;
    }
    return e;
}

} // namespace

IntMatrix cartanMatrix(DynkinType t, int n) {
    if (!validDynkin(t, n)) throw std::invalid_argument("invalid Dynkin type/rank");
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) a.at(i, i) = 2;
    for (const auto& e : diagramEdges(t, n)) {
        a.at(e.i, e.j) = e.aij;
        a.at(e.j, e.i) = e.aji;
    }
    return a;
}

ExchangeMatrix dynkinInitialMatrix(DynkinType t, int n) {
    if (!validDynkin(t, n)) throw std::invalid_argument("invalid Dynkin type/rank");
    auto edges = diagramEdges(t, n);
    // two-color the diagram (it is a forest)
    std::vector<int> color(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                }
        }
    }
    IntMatrix b(n);
    for (const auto& e : edges) {
        if (color[e.i] == 0) {
            b.at(e.i, e.j) = -e.aij;
            b.at(e.j, e.i) = e.aji;
        } else {
            b.at(e.i, e.j) = e.aij;
            b.at(e.j, e.i) = -e.aji;
        }
    }
    return ExchangeMatrix(std::move(b));
}

bool matrixEqualsUpToPermutation(const IntMatrix& a, const IntMatrix& b) {
    if (a.n != b.n) return false;
    const int n = a.n;
    // prune with row multiset signatures
    auto rowSig = [](const IntMatrix& m, int i) {
        std::vector<std::pair<int64_t, int64_t>> s;
        for (int j = 0; j < m.n; ++j)
            if (j != i) s.push_back({m.at(i, j), m.at(j, i)});
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<std::pair<int64_t, int64_t>>> sa(n), sb(n);
    for (int i = 0; i < n; ++i) {
        sa[i] = rowSig(a, i);
        sb[i] = rowSig(b, i);
    }
    {
        auto ma = sa, mb = sb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return false;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (sa[i] != sb[perm[i]]) ok = false;
            for (int j = 0; j < n && ok; ++j)
                if (a.at(i, j) != b.at(perm[i], perm[j])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// canonical form of a matrix under simultaneous permutation (small n)
std::vector<int64_t> canonicalMatrixForm(const IntMatrix& m) {
    const int n = m.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int64_t> best;
    do {
        std::vector<int64_t> cur(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cur[static_cast<size_t>(i) * n + j] = m.at(perm[i], perm[j]);
        if (best.empty() || cur < best) best = std::move(cur);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

bool mutationClassHasCartanType(const ExchangeMatrix& B, DynkinType t, int n,
                                size_t maxMatrices) {
    if (B.rank() != n) return false;
    IntMatrix target = cartanMatrix(t, n);
    std::set<std::vector<int64_t>> seen;
    std::queue<ExchangeMatrix> q;
    seen.insert(canonicalMatrixForm(B.matrix()));
    q.push(B);
    while (!q.empty()) {
        ExchangeMatrix cur = q.front();
        q.pop();
        if (matrixEqualsUpToPermutation(cur.cartanCounterpart(), target)) return true;
        for (int k = 0; k < n; ++k) {
            ExchangeMatrix nb = cur.mutated(k);
            auto form = canonicalMatrixForm(nb.matrix());
            if (seen.count(form)) continue;
            if (seen.size() >= maxMatrices)
                throw CapabilityError("mutation class search exceeded budget");
            seen.insert(std::move(form));
            q.push(std::move(nb));
        }
    }
    return false;
}

} // namespace xpat
