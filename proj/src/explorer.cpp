#include "xpat/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <future>
#include <set>
#include <thread>
#include <unordered_map>

namespace xpat {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    double maxSeconds = 0;
    bool expired() const {
        if (maxSeconds <= 0) return false;
        return std::chrono::duration<double>(Clock::now() - start).count() > maxSeconds;
    }
};

// ---------------------------------------------------------------------------
// Universal fast path: values as content * prod(basis^e).

struct FVal {
    Rat content; // positive
    FactorExps exps;
};

FVal fvalMul(const FVal& a, const FVal& b, int scale = 1) {
    FVal r;
    if (scale == 1)
        r.content = a.content * b.content;
    else if (scale == -1)
        r.content = a.content / b.content;
    else {
        Rat p = 1;
        for (int i = 0; i < (scale < 0 ? -scale : scale); ++i) p *= b.content;
        if (scale < 0)
            r.content = a.content / p;
        else
            r.content = a.content * p;
    }
    r.content.canonicalize();
    r.exps = mergeExps(a.exps, b.exps, scale);
    return r;
}

FVal fvalInv(const FVal& a) {
    FVal r;
    r.content = Rat(1) / a.content;
    r.content.canonicalize();
    r.exps = scaleExps(a.exps, -1);
    return r;
}

// Interner for universal values; ids are dense and stable. Caches, per value,
// the factored reduction of num+den: the only polynomial work a mutation needs.
struct UniInterner {
    FactorBasis* basis;
    std::vector<FVal> vals;
    std::unordered_map<uint64_t, std::vector<int>> byFp;
    std::vector<std::optional<FactorBasis::Reduction>> sumRed;

    explicit UniInterner(FactorBasis* b) : basis(b) {}

    bool equal(const FVal& a, const FVal& b) const {
        if (a.content != b.content) return false;
        return basis->pushDown(a.exps) == basis->pushDown(b.exps);
    }

    int intern(const FVal& v) {
        uint64_t fp = basis->fingerprint(v.content, v.exps);
        auto& bucket = byFp[fp];
        for (int id : bucket)
            if (equal(vals[id], v)) return id;
        int id = static_cast<int>(vals.size());
        vals.push_back(v);
        sumRed.emplace_back();
        bucket.push_back(id);
        return id;
    }
};

struct USeed {
    std::vector<int> ids;   // interned value ids
    std::vector<FVal> x;    // the values themselves
    ExchangeMatrix B;
};

// numerator / denominator polynomials of a factored value
std::pair<Polynomial, Polynomial> expandNumDen(const FactorBasis& basis, const FVal& v) {
    Polynomial n = basis.expandPart(v.exps, true);
    Polynomial d = basis.expandPart(v.exps, false);
    n = n.mulMonomial(ExpVec(basis.nvars(), 0), Int(v.content.get_num()));
    d = d.mulMonomial(ExpVec(basis.nvars(), 0), Int(v.content.get_den()));
    return {std::move(n), std::move(d)};
}

// Phase 1 (read-only w.r.t. the basis): expand the value and reduce N + D.
// The leaves of the value itself can never divide the sum (they would divide
// both coprime parts), so trial division skips them.
FactorBasis::Partial prepareSum(const FactorBasis& basis, const FVal& v) {
    auto [N, D] = expandNumDen(basis, v);
    std::vector<int> skip;
    for (const auto& [id, e] : basis.pushDown(v.exps)) skip.push_back(id);
    return basis.reducePartial(N + D, &skip);
}

// Assembles the mutated seed from the cached (N+D) reduction of x_k:
// exponent-map arithmetic only.
USeed applyUniMutation(UniInterner& interner, const USeed& s, int k) {
    const int n = s.B.rank();
    USeed r;
    r.B = s.B.mutated(k);
    r.x = s.x;
    bool needFactor = false;
    for (int j = 0; j < n && !needFactor; ++j)
        if (j != k && s.B.at(k, j) != 0) needFactor = true;
    if (needFactor) {
        const FactorBasis::Reduction& sum = *interner.sumRed[s.ids[k]];
        const FVal& xk = s.x[k];
        // x_k = N/D with N = cn * prod_{e>0}, D = cd * prod_{e<0}
        FactorExps negPart, posPart;
        for (const auto& [id, e] : xk.exps)
            (e < 0 ? negPart : posPart).push_back({id, e});
        // fPlus = x_k (+) 1 = S / D ; fMinus = x_k^{-1} (+) 1 = S / N
        FVal fPlus, fMinus;
        bool havePlus = false, haveMinus = false;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            int64_t bkj = s.B.at(k, j);
            if (bkj == 0) continue;
            long e = static_cast<long>(-bkj);
            if (e > 0) {
                if (!havePlus) {
                    fPlus.content = sum.content / Rat(xk.content.get_den());
                    fPlus.content.canonicalize();
                    fPlus.exps = mergeExps(sum.exps, negPart); // minus den part
                    havePlus = true;
                }
                r.x[j] = fvalMul(s.x[j], fPlus, static_cast<int>(e));
            } else {
                if (!haveMinus) {
                    fMinus.content = sum.content / Rat(xk.content.get_num());
                    fMinus.content.canonicalize();
                    fMinus.exps = mergeExps(sum.exps, posPart, -1);
                    haveMinus = true;
                }
                r.x[j] = fvalMul(s.x[j], fMinus, static_cast<int>(e));
            }
        }
    }
    r.x[k] = fvalInv(s.x[k]);
    r.ids.resize(n);
    for (int i = 0; i < n; ++i) r.ids[i] = interner.intern(r.x[i]);
    return r;
}

std::string uniKey(const USeed& s) {
    SeedKeyView v;
    v.n = s.B.rank();
    v.B = &s.B;
    v.slotCodes.resize(v.n);
    for (int i = 0; i < v.n; ++i) appendI64(v.slotCodes[i], s.ids[i]);
    return minimizeSeedKey(v);
}

// ---------------------------------------------------------------------------

void finalizeStatsFromXVars(ExchangeGraph& g) {
    g.stats.nodes = g.nodes.size();
    g.stats.edges = g.edges.size();
    g.stats.xvars = g.xvars.size();
    for (const auto& v : g.xvars) {
        if (v.kind() != SemifieldKind::Universal) continue;
        g.stats.maxNumTerms = std::max(g.stats.maxNumTerms, v.rf().num().termCount());
        g.stats.maxDenTerms = std::max(g.stats.maxDenTerms, v.rf().den().termCount());
        g.stats.maxDegree = std::max({g.stats.maxDegree, v.rf().num().totalDegree(),
                                      v.rf().den().totalDegree()});
    }
}

ExchangeGraph exploreUniversal(const XSeed& root, const ExploreLimits& limits) {
    const int n = root.rank();
    const int k = root.x.empty() ? 0 : root.x[0].generators();
    FactorBasis basis(k);
    UniInterner interner(&basis);

    USeed start;
    start.B = root.B;
    start.x.reserve(n);
    for (const auto& v : root.x) {
        const RationalFunction& rf = v.rf();
        auto rn = basis.reduce(rf.num());
        auto rd = basis.reduce(rf.den());
        FVal f;
        f.content = rn.content / rd.content;
        f.content.canonicalize();
        f.exps = mergeExps(rn.exps, rd.exps, -1);
        start.x.push_back(std::move(f));
    }
    start.ids.resize(n);
    for (int i = 0; i < n; ++i) start.ids[i] = interner.intern(start.x[i]);

    Deadline deadline{Clock::now(), limits.maxSeconds};
    std::vector<USeed> seeds;
    std::map<std::string, size_t> byKey;
    std::vector<GraphEdge> edges;
    seeds.push_back(start);
    byKey.emplace(uniKey(start), 0);

    auto makeGraph = [&](bool partial) {
        ExchangeGraph g;
        g.rank = n;
        g.semifield = "universal";
        g.partial = partial;
        g.rootIndex = 0;
        std::set<int> xvarIds;
        for (const auto& s : seeds)
            for (int id : s.ids) xvarIds.insert(id);
        // node list (keys already canonical); keep exploration order
        g.nodes.resize(seeds.size());
        for (const auto& [key, idx] : byKey) {
            g.nodes[idx].key = key;
            if (limits.storeRepresentatives || idx == 0) {
                XSeed rep;
                rep.B = seeds[idx].B;
                rep.x.reserve(n);
                for (const auto& f : seeds[idx].x)
                    rep.x.push_back(SemifieldValue::universal(basis.expand(f.content, f.exps)));
                g.nodes[idx].xseed = std::move(rep);
            }
        }
        g.byKey = byKey;
        g.edges = edges;
        g.xvars.reserve(xvarIds.size());
        for (int id : xvarIds)
            g.xvars.push_back(SemifieldValue::universal(
                basis.expand(interner.vals[id].content, interner.vals[id].exps)));
        std::sort(g.xvars.begin(), g.xvars.end(),
                  [](const SemifieldValue& a, const SemifieldValue& b) { return a.cmp(b) < 0; });
        finalizeStatsFromXVars(g);
        return g;
    };

    size_t frontierBegin = 0;
    while (frontierBegin < seeds.size()) {
        size_t frontierEnd = seeds.size();

        // ids whose (N+D) reduction this level needs and does not have yet
        std::set<int> wanted;
        for (size_t u = frontierBegin; u < frontierEnd; ++u) {
            const USeed& s = seeds[u];
            for (int k = 0; k < n; ++k) {
                if (interner.sumRed[s.ids[k]]) continue;
                for (int j = 0; j < n; ++j)
                    if (j != k && s.B.at(k, j) != 0) {
                        wanted.insert(s.ids[k]);
                        break;
                    }
            }
        }
        std::vector<int> ids(wanted.begin(), wanted.end()); // ascending

        // phase 1: expand + trial-divide against the basis snapshot (parallel)
        std::vector<FactorBasis::Partial> partials(ids.size());
        int nthreads = std::max(1, limits.threads);
        if (nthreads > 1 && ids.size() > 1) {
            std::vector<std::future<void>> futs;
            std::atomic<size_t> next{0};
            for (int t = 0; t < nthreads; ++t)
                futs.push_back(std::async(std::launch::async, [&] {
                    while (true) {
                        size_t i = next.fetch_add(1);
                        if (i >= ids.size()) break;
                        partials[i] = prepareSum(basis, interner.vals[ids[i]]);
                    }
                }));
            for (auto& f : futs) f.get();
        } else {
            for (size_t i = 0; i < ids.size(); ++i)
                partials[i] = prepareSum(basis, interner.vals[ids[i]]);
        }

        // phase 2: finish reductions in ascending-id order (deterministic)
        for (size_t i = 0; i < ids.size(); ++i)
            interner.sumRed[ids[i]] = basis.finish(std::move(partials[i]));

        // progress diagnostics for long runs (also reports the observed
        // polynomial growth, which the source gives no a-priori bound for)
        if (std::getenv("XPAT_TRACE")) {
            fprintf(stderr,
                    "[explore] seeds=%zu..%zu basis=%d values=%zu new-sums=%zu elapsed=%.1fs\n",
                    frontierBegin, frontierEnd, basis.size(), interner.vals.size(),
                    ids.size(),
                    std::chrono::duration<double>(Clock::now() - deadline.start).count());
        }

        // phase 3: mutate and merge in task order (cheap, deterministic)
        for (size_t u = frontierBegin; u < frontierEnd; ++u) {
            for (int dir = 0; dir < n; ++dir) {
                USeed mut = applyUniMutation(interner, seeds[u], dir);
                std::string key = uniKey(mut);
                auto [it, inserted] = byKey.emplace(std::move(key), seeds.size());
                if (inserted) {
                    seeds.push_back(std::move(mut));
                    if (limits.maxNodes && seeds.size() > limits.maxNodes)
                        throw PartialResultError("node limit exceeded", makeGraph(true));
                }
                edges.push_back({u, dir, it->second});
            }
            if (deadline.expired())
                throw PartialResultError("time limit exceeded", makeGraph(true));
        }
        frontierBegin = frontierEnd;
    }
    return makeGraph(false);
}

// ---------------------------------------------------------------------------
// Plain-value path: XSeed (tropical/trivial/small universal) and ASeed.

struct PlainXOps {
    using Seed = XSeed;
    static Seed mutate(const Seed& s, int k) { return mutateX(s, k); }
    static std::string key(const Seed& s) { return canonicalKey(s); }
    static void store(const Seed& s, GraphNode& n) { n.xseed = s; }
    static void collect(const Seed& s, std::vector<SemifieldValue>& sink) {
        for (const auto& v : s.x) sink.push_back(v);
    }
};

struct PlainAOps {
    using Seed = ASeed;
    static Seed mutate(const Seed& s, int k) { return mutateA(s, k); }
    static std::string key(const Seed& s) { return canonicalKey(s); }
    static void store(const Seed& s, GraphNode& n) { n.aseed = s; }
    static void collect(const Seed& s, std::vector<SemifieldValue>& sink) {
        for (const auto& v : s.x) sink.push_back(v);
    }
};

template <class Ops, class EdgeHook>
ExchangeGraph exploreSimple(const typename Ops::Seed& root, const ExploreLimits& limits,
                            EdgeHook&& onEdge) {
    const int n = root.rank();
    Deadline deadline{Clock::now(), limits.maxSeconds};
    std::vector<typename Ops::Seed> seeds{root};
    std::map<std::string, size_t> byKey;
    std::vector<GraphEdge> edges;
    byKey.emplace(Ops::key(root), 0);

    auto makeGraph = [&](bool partial) {
        ExchangeGraph g;
        g.rank = n;
        g.partial = partial;
        g.rootIndex = 0;
        g.nodes.resize(seeds.size());
        for (const auto& [key, idx] : byKey) {
            g.nodes[idx].key = key;
            if (limits.storeRepresentatives || idx == 0) Ops::store(seeds[idx], g.nodes[idx]);
        }
        g.byKey = byKey;
        g.edges = edges;
        std::vector<SemifieldValue> sink;
        for (const auto& s : seeds) Ops::collect(s, sink);
        std::sort(sink.begin(), sink.end(),
                  [](const SemifieldValue& a, const SemifieldValue& b) { return a.cmp(b) < 0; });
        sink.erase(std::unique(sink.begin(), sink.end()), sink.end());
        g.xvars = std::move(sink);
        finalizeStatsFromXVars(g);
        return g;
    };

    for (size_t u = 0; u < seeds.size(); ++u) {
        for (int dir = 0; dir < n; ++dir) {
            typename Ops::Seed mut = Ops::mutate(seeds[u], dir);
            onEdge(seeds[u], dir, mut);
            std::string key = Ops::key(mut);
            auto [it, inserted] = byKey.emplace(std::move(key), seeds.size());
            if (inserted) {
                seeds.push_back(std::move(mut));
                if (limits.maxNodes && seeds.size() > limits.maxNodes)
                    throw PartialResultError("node limit exceeded", makeGraph(true));
            }
            edges.push_back({u, dir, it->second});
            if (deadline.expired())
                throw PartialResultError("time limit exceeded", makeGraph(true));
        }
    }
    return makeGraph(false);
}

auto kNoEdgeHook = [](const auto&, int, const auto&) {};

} // namespace

size_t ExchangeGraph::indexOf(const std::string& key) const {
    auto it = byKey.find(key);
    if (it == byKey.end()) throw std::out_of_range("unknown seed key");
    return it->second;
}

ExchangeGraph explore(const XSeed& root, const ExploreLimits& limits) {
    if (root.rank() == 0) throw UndefinedInputError("empty seed");
    SemifieldKind kind = root.x[0].kind();
    ExchangeGraph g;
    if (kind == SemifieldKind::Universal) {
        g = exploreUniversal(root, limits);
    } else {
        g = exploreSimple<PlainXOps>(root, limits, kNoEdgeHook);
        g.semifield = kind == SemifieldKind::Tropical ? "tropical" : "trivial";
    }
    return g;
}

ExchangeGraph explore(const ASeed& root, const ExploreLimits& limits) {
    if (root.rank() == 0) throw UndefinedInputError("empty seed");
    ExchangeGraph g = exploreSimple<PlainAOps>(root, limits, kNoEdgeHook);
    g.semifield = semifieldKindName(root.x[0].kind());
    return g;
}

size_t countXVars(DynkinType t, int n, CoefficientChoice coeffs,
                  const ExploreLimits& limits) {
    ExchangeMatrix B = dynkinInitialMatrix(t, n);
    ExploreLimits lim = limits;
    lim.storeRepresentatives = false;
    XSeed root = coeffs == CoefficientChoice::Universal ? universalXSeed(B)
                                                        : principalXSeed(B);
    ExchangeGraph g = explore(root, lim);
    return g.xvars.size();
}

PairCensus exchangeablePairs(DynkinType t, int n, const ExploreLimits& limits) {
    ExchangeMatrix B = dynkinInitialMatrix(t, n);
    ASeed root = coefficientFreeASeed(B);
    std::set<std::pair<std::string, std::string>> pairs;
    auto hook = [&](const ASeed& from, int k, const ASeed& to) {
        std::string a, b;
        appendRFBytes(a, from.a[k]);
        appendRFBytes(b, to.a[k]);
        if (b < a) std::swap(a, b);
        pairs.emplace(std::move(a), std::move(b));
    };
    ExploreLimits lim = limits;
    lim.storeRepresentatives = false;
    exploreSimple<PlainAOps>(root, lim, hook);
    PairCensus c;
    c.unordered = pairs.size();
    c.ordered = 2 * pairs.size();
    return c;
}

bool uniqueExchangeHolds(DynkinType t, int n, const ExploreLimits& limits) {
    ExchangeMatrix B = dynkinInitialMatrix(t, n);
    ASeed root = principalASeed(B);
    // map: unordered exchange-relation monomial pair -> exchanged variable pair
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> seen;
    bool ok = true;
    auto hook = [&](const ASeed& from, int k, const ASeed& to) {
        if (!ok) return;
        const int nn = from.rank();
        const int nv = from.ambientVars();
        RationalFunction mPlus = from.embed(from.x[k]);
        RationalFunction mMinus = RationalFunction::one(nv);
        for (int i = 0; i < nn; ++i) {
            int64_t bik = from.B.at(i, k);
            if (bik > 0) mPlus = mPlus * from.a[i].pow(bik);
            if (bik < 0) mMinus = mMinus * from.a[i].pow(-bik);
        }
        std::string m1, m2;
        appendRFBytes(m1, mPlus);
        appendRFBytes(m2, mMinus);
        if (m2 < m1) std::swap(m1, m2);
        std::string v1, v2;
        appendRFBytes(v1, from.a[k]);
        appendRFBytes(v2, to.a[k]);
        if (v2 < v1) std::swap(v1, v2);
        auto [it, inserted] = seen.emplace(std::make_pair(m1, m2), std::make_pair(v1, v2));
        if (!inserted && it->second != std::make_pair(v1, v2)) ok = false;
    };
    ExploreLimits lim = limits;
    lim.storeRepresentatives = false;
    exploreSimple<PlainAOps>(root, lim, hook);
    return ok;
}

namespace {

// type-erased labeled seed for lockstep walks
struct AnySeed {
    std::optional<XSeed> xs;
    std::optional<ASeed> as;

    int rank() const { return xs ? xs->rank() : as->rank(); }
    AnySeed mutate(int k) const {
        AnySeed r;
        if (xs)
            r.xs = mutateX(*xs, k);
        else
            r.as = mutateA(*as, k);
        return r;
    }
    std::string key() const { return xs ? canonicalKey(*xs) : canonicalKey(*as); }
};

AnySeed rootOf(const ExchangeGraph& g) {
    const GraphNode& n = g.nodes.at(g.rootIndex);
    AnySeed s;
    if (n.aseed)
        s.as = n.aseed;
    else if (n.xseed)
        s.xs = n.xseed;
    else
        throw UndefinedInputError("graph carries no representative seeds");
    return s;
}

} // namespace

bool graphsIsomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2) {
    if (g1.partial || g2.partial)
        throw UndefinedInputError("isomorphism requires complete graphs");
    if (g1.rank != g2.rank) return false;
    if (g1.nodes.size() != g2.nodes.size()) return false;
    if (g1.edges.size() != g2.edges.size()) return false;

    AnySeed r1 = rootOf(g1);
    AnySeed r2 = rootOf(g2);
    const int n = g1.rank;

    std::map<std::string, std::string> fwd, bwd;
    std::set<std::pair<std::string, std::string>> visited;
    std::vector<std::pair<AnySeed, AnySeed>> stack;

    auto consider = [&](const AnySeed& a, const AnySeed& b) -> bool {
        std::string ka = a.key(), kb = b.key();
        auto [itF, newF] = fwd.emplace(ka, kb);
        if (!newF && itF->second != kb) return false; // map ill-defined
        auto [itB, newB] = bwd.emplace(kb, ka);
        if (!newB && itB->second != ka) return false; // not injective
        if (visited.emplace(ka, kb).second) stack.push_back({a, b});
        return true;
    };

    if (!consider(r1, r2)) return false;
    while (!stack.empty()) {
        auto [a, b] = std::move(stack.back());
        stack.pop_back();
        for (int k = 0; k < n; ++k)
            if (!consider(a.mutate(k), b.mutate(k))) return false;
    }
    // lockstep covers both graphs (each is connected), so the correspondence
    // is a bijection iff both maps are total
    return fwd.size() == g1.nodes.size() && bwd.size() == g2.nodes.size();
}

} // namespace xpat
