// xpat: exact engine and verifier for finite-type cluster X-seed patterns.
//
// Exit codes: 0 = pass, 1 = counterexample / mismatch, 2 = resource limit
// or capability refusal.

#include <CLI11.hpp>

#include "xpat/bijection.hpp"
#include "xpat/explorer.hpp"
#include "xpat/geometric.hpp"
#include "xpat/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

using namespace xpat;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitResource = 2;

struct Options {
    std::string type = "A";
    int rank = 2;
    std::string semifield = "universal";
    std::string surface = "plain";
    int nSurface = 6;
    size_t maxNodes = 0;
    double maxSeconds = 0;
    int threads = 0;
    uint64_t rngSeed = 20240811;
    int trials = 100;
    bool expectPaper = false;
    bool allowLong = false;
    std::string format = "table";
    std::string output;
};

ExploreLimits limitsOf(const Options& o) {
    ExploreLimits lim;
    lim.maxNodes = o.maxNodes;
    lim.maxSeconds = o.maxSeconds;
    lim.threads = o.threads > 0 ? o.threads
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return lim;
}

void writeOut(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(o.output);
        if (!f) throw std::runtime_error("cannot open output file: " + o.output);
        f << text;
    }
}

MarkedPolygon surfaceOf(const Options& o) {
    if (o.surface == "plain") return {PolyKind::Plain, o.nSurface};
    if (o.surface == "punctured") return {PolyKind::Punctured, o.nSurface};
    if (o.surface == "folded-plain") return {PolyKind::FoldedPlain, o.nSurface};
    if (o.surface == "folded-punctured") return {PolyKind::FoldedPunctured, o.nSurface};
    throw CLI::ValidationError("--surface must be plain|punctured|folded-plain|folded-punctured");
}

// Table 1 of the source data: |X| over the universal and the principal
// (tropical, x_i = t_i) semifields.
long long paperXCount(DynkinType t, int n, CoefficientChoice c) {
    bool uni = c == CoefficientChoice::Universal;
    switch (t) {
        case DynkinType::A:
            return uni ? 2 * binomial(n + 3, 4) : static_cast<long long>(n) * (n + 1);
        case DynkinType::B:
        case DynkinType::C:
            return uni ? static_cast<long long>(n) * (n + 1) * (n * n + 2) / 3
                       : 2LL * n * n;
        case DynkinType::D:
            return uni ? static_cast<long long>(n) * (n - 1) * (n * n + 4 * n - 6) / 3
                       : 2LL * n * (n - 1);
        case DynkinType::E:
            if (n == 6) return uni ? 770 : 72;
            if (n == 7) return uni ? 2100 : 126;
            return uni ? 6240 : 240;
        case DynkinType::F:
            return uni ? 196 : 48;
        case DynkinType::G:
            return uni ? 16 : 12;
    }
    return -1;
}

std::string typeLabel(DynkinType t, int n) {
    return std::string(1, dynkinTypeChar(t)) + std::to_string(n);
}

ExchangeGraph exploreWithCache(DynkinType t, int n, const std::string& semifield,
                               const ExploreLimits& limits) {
    std::string cacheDir = std::getenv("XPAT_CACHE_DIR") ? std::getenv("XPAT_CACHE_DIR") : "";
    std::string path;
    if (!cacheDir.empty()) {
        path = cacheDir + "/xpat-graph-" + typeLabel(t, n) + "-" + semifield + ".json";
        if (std::filesystem::exists(path)) {
            ExchangeGraph g = loadGraph(path);
            if (g.type == typeLabel(t, n) && g.semifield == semifield && !g.partial) return g;
        }
    }
    ExchangeMatrix B = dynkinInitialMatrix(t, n);
    ExchangeGraph g = semifield == "universal" ? explore(universalXSeed(B), limits)
                                               : explore(principalXSeed(B), limits);
    g.type = typeLabel(t, n);
    g.semifield = semifield == "universal" ? "universal" : "principal";
    if (!path.empty()) saveGraph(g, path);
    return g;
}

int cmdCountXVars(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    if (!validDynkin(t, o.rank)) {
        std::cerr << "invalid type/rank\n";
        return kExitCounterexample;
    }
    bool principal = o.semifield == "principal";
    if (!principal && o.semifield != "universal") {
        std::cerr << "--semifield must be universal or principal\n";
        return kExitCounterexample;
    }
    if (!o.allowLong && !principal && t == DynkinType::E && o.rank >= 7) {
        std::cerr << "E7/E8 universal runs take hours; pass --allow-long to enable\n";
        return kExitResource;
    }
    try {
        ExchangeGraph g = exploreWithCache(t, o.rank, principal ? "principal" : "universal",
                                           limitsOf(o));
        long long expected =
            paperXCount(t, o.rank, principal ? CoefficientChoice::Principal
                                             : CoefficientChoice::Universal);
        bool pass = static_cast<long long>(g.xvars.size()) == expected;
        if (o.format == "json") {
            json j{{"type", g.type},
                   {"rank", o.rank},
                   {"semifield", g.semifield},
                   {"xvars", g.xvars.size()},
                   {"seeds", g.nodes.size()},
                   {"max_num_terms", g.stats.maxNumTerms},
                   {"max_degree", g.stats.maxDegree}};
            if (o.expectPaper) {
                j["expected"] = expected;
                j["pass"] = pass;
            }
            writeOut(o, j.dump(1));
        } else {
            std::ostringstream os;
            os << "type " << g.type << "  semifield " << g.semifield << "  seeds "
               << g.nodes.size() << "  |X| = " << g.xvars.size();
            if (o.expectPaper) os << "  expected " << expected << (pass ? "  PASS" : "  FAIL");
            os << "\n";
            writeOut(o, os.str());
        }
        return o.expectPaper && !pass ? kExitCounterexample : kExitPass;
    } catch (const PartialResultError& e) {
        json j{{"partial", true},
               {"nodes", e.partial.nodes.size()},
               {"xvars_so_far", e.partial.xvars.size()},
               {"reason", e.what()}};
        writeOut(o, j.dump(1));
        return kExitResource;
    }
}

int cmdVerifyBijection(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    BijectionReport r = verifyBijection(t, o.rank);
    std::ostringstream os;
    os << "bijection " << typeLabel(t, o.rank) << ": triangulations " << r.triangulations
       << ", quad keys " << r.quadKeys << ", xvars " << r.distinctXVars << ", 2q(P) "
       << 2 * r.closedFormQuads << " -> " << (r.ok ? "PASS" : "FAIL " + r.failure) << "\n";
    writeOut(o, os.str());
    return r.ok ? kExitPass : kExitCounterexample;
}

// |Q1| = (C(2n+2,4) - C(n+1,2)) / 2 of the type-C half-disk decomposition,
// by classifying every vertex 4-subset of the (2n+2)-gon.
bool typeCDecomposition(int n, std::ostringstream& os) {
    const int M = 2 * n + 2;
    long long q1 = 0, q2 = 0, fixed = 0;
    std::vector<int> idx(4);
    for (idx[0] = 1; idx[0] <= M; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] <= M; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] <= M; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] <= M; ++idx[3]) {
                    auto shifted = [&](int v) { return (v - 1 + n + 1) % M + 1; };
                    std::set<int> s(idx.begin(), idx.end());
                    bool isFixed = true;
                    for (int v : idx) isFixed = isFixed && s.count(shifted(v));
                    if (isFixed) {
                        ++fixed;
                        continue;
                    }
                    // contained in a closed half-disk: all four in some window
                    // of n+2 consecutive vertices
                    bool inHalf = false;
                    for (int start = 1; start <= M && !inHalf; ++start) {
                        bool all = true;
                        for (int v : idx) {
                            int off = (v - start + M) % M;
                            all = all && off <= n + 1;
                        }
                        inHalf = inHalf || all;
                    }
                    (inHalf ? q1 : q2)++;
                }
    long long expectQ1 = (binomial(M, 4) - binomial(n + 1, 2)) / 2;
    os << "type C decomposition n=" << n << ": |Q1| = " << q1 << " (expect " << expectQ1
       << "), |Q2| = " << q2 << ", fixed = " << fixed << " (expect "
       << binomial(n + 1, 2) << ")\n";
    return q1 == expectQ1 && q1 == q2 && fixed == binomial(n + 1, 2);
}

int cmdVerifyQuadCounts(const Options& o) {
    MarkedPolygon P = surfaceOf(o);
    long long expect = closedFormQuadCount(P);
    size_t got = enumerateQuadrilaterals(P).size();
    bool pass = got == 2 * static_cast<size_t>(expect);
    std::ostringstream os;
    os << P.str() << ": enumerated " << got << " quadrilaterals-with-diagonal, closed form 2*"
       << expect << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    if (P.kind == PolyKind::FoldedPlain) {
        bool deco = typeCDecomposition(P.m / 2 - 1, os);
        pass = pass && deco;
        os << "half-disk decomposition -> " << (deco ? "PASS" : "FAIL") << "\n";
    }
    writeOut(o, os.str());
    return pass ? kExitPass : kExitCounterexample;
}

int cmdVerifyGeometric(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    DistinctnessReport r = verifyDistinctness(t, o.rank, o.trials, o.rngSeed);
    json j{{"type", typeLabel(t, o.rank)}, {"rank", o.rank},
           {"pairs_total", r.pairsTotal}, {"separated", r.separated},
           {"expressions", r.expressions}, {"pass", r.ok}};
    if (!r.unseparated.empty()) {
        json u = json::array();
        for (auto& [a, b] : r.unseparated) u.push_back(json::array({a, b}));
        j["unseparated"] = u;
    }
    writeOut(o, j.dump(1));
    return r.ok ? kExitPass : kExitCounterexample;
}

int cmdVerifyPairs(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    PairCensus c = exchangeablePairs(t, o.rank, limitsOf(o));
    long long expected = paperXCount(t, o.rank, CoefficientChoice::Universal);
    bool pass = static_cast<long long>(c.ordered) == expected;
    std::ostringstream os;
    os << "exchangeable pairs " << typeLabel(t, o.rank) << ": ordered " << c.ordered
       << " = expected " << expected << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    writeOut(o, os.str());
    return pass ? kExitPass : kExitCounterexample;
}

int cmdVerifyCoincide(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    ExchangeMatrix B = dynkinInitialMatrix(t, o.rank);
    ExploreLimits lim = limitsOf(o);
    ExchangeGraph ga = explore(coefficientFreeASeed(B), lim);
    ExchangeGraph gx = explore(universalXSeed(B), lim);
    bool pass = graphsIsomorphic(ga, gx);
    std::ostringstream os;
    os << "exchange-graph coincidence " << typeLabel(t, o.rank) << ": A-pattern "
       << ga.nodes.size() << " seeds, X-pattern " << gx.nodes.size() << " seeds -> "
       << (pass ? "PASS" : "FAIL") << "\n";
    writeOut(o, os.str());
    return pass ? kExitPass : kExitCounterexample;
}

int cmdEmitExchangeGraph(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    if (!o.allowLong && o.semifield == "universal" && t == DynkinType::E && o.rank >= 7) {
        std::cerr << "E7/E8 universal runs take hours; pass --allow-long to enable\n";
        return kExitResource;
    }
    ExchangeGraph g = exploreWithCache(t, o.rank, o.semifield, limitsOf(o));
    if (o.format == "dot")
        writeOut(o, graphToDot(g));
    else
        writeOut(o, graphToJson(g).dump(1));
    return kExitPass;
}

json arcToJson(const Arc& a, int m) {
    switch (a.kind) {
        case Arc::Chord:
            return json{{"kind", "chord"},
                        {"i", a.i},
                        {"j", a.j},
                        {"winding", a.wind ? "around" : "direct"}};
        case Arc::Radius:
            return json{{"kind", "radius"}, {"i", a.i}, {"tag", a.wind ? "notched" : "plain"}};
        case Arc::Boundary:
            return json{{"kind", "boundary"}, {"i", a.i}, {"j", a.i % m + 1}};
    }
    return json();
}

int cmdEmitFlipGraph(const Options& o) {
    MarkedPolygon P = surfaceOf(o);
    std::vector<Triangulation> ts = enumerateTriangulations(P);
    std::map<std::string, size_t> byKey;
    for (size_t i = 0; i < ts.size(); ++i) byKey[ts[i].key()] = i;
    if (o.format == "json") {
        json nodes = json::array();
        for (const auto& T : ts) {
            json slots = json::array();
            for (const Orbit& orb : T.slots) {
                json members = json::array();
                for (const Arc& a : orb) members.push_back(arcToJson(a, P.m));
                slots.push_back(std::move(members));
            }
            nodes.push_back(json{{"arcs", std::move(slots)}});
        }
        json edges = json::array();
        for (size_t i = 0; i < ts.size(); ++i)
            for (int s = 0; s < static_cast<int>(ts[i].slots.size()); ++s) {
                size_t j = byKey.at(flipArc(ts[i], s).T.key());
                if (i < j) edges.push_back(json::array({i, s, j}));
            }
        writeOut(o, json{{"version", 1},
                         {"surface", P.str()},
                         {"triangulations", nodes},
                         {"flips", edges}}
                        .dump(1));
        return kExitPass;
    }
    std::ostringstream os;
    os << "// xpat flip graph, format 1\n";
    os << "graph flips {\n";
    for (size_t i = 0; i < ts.size(); ++i) {
        os << "  t" << i << " [label=\"";
        for (size_t s = 0; s < ts[i].slots.size(); ++s)
            os << (s ? " " : "") << ts[i].slots[s][0].str();
        os << "\"];\n";
    }
    for (size_t i = 0; i < ts.size(); ++i)
        for (int s = 0; s < static_cast<int>(ts[i].slots.size()); ++s) {
            size_t j = byKey.at(flipArc(ts[i], s).T.key());
            if (i < j) os << "  t" << i << " -- t" << j << ";\n";
        }
    os << "}\n";
    writeOut(o, os.str());
    return kExitPass;
}

int cmdEmitXVars(const Options& o) {
    DynkinType t = dynkinTypeFromChar(o.type.at(0));
    if (!o.allowLong && o.semifield == "universal" && t == DynkinType::E && o.rank >= 7) {
        std::cerr << "E7/E8 universal runs take hours; pass --allow-long to enable\n";
        return kExitResource;
    }
    ExchangeGraph g = exploreWithCache(t, o.rank, o.semifield, limitsOf(o));
    json xs = json::array();
    for (const auto& v : g.xvars) xs.push_back(valueToJson(v));
    json j{{"type", g.type}, {"semifield", g.semifield}, {"count", g.xvars.size()},
           {"xvars", xs}};
    writeOut(o, j.dump(1));
    return kExitPass;
}

int cmdEmitQuadCensus(const Options& o) {
    MarkedPolygon P = surfaceOf(o);
    std::map<std::string, std::pair<QuadDiag, size_t>> census;
    for (const Triangulation& T : enumerateTriangulations(P))
        for (int s = 0; s < static_cast<int>(T.slots.size()); ++s) {
            QuadDiag q = quadrilateral(T, s);
            auto [it, fresh] = census.emplace(q.key(), std::make_pair(q, size_t(0)));
            it->second.second += 1;
        }
    std::ostringstream os;
    os << "# xpat quadrilateral census, format 1\n";
    os << "key,diagonal,triangulations\n";
    for (auto& [key, qc] : census) {
        os << toHex(key).substr(0, 16) << ",";
        for (size_t i = 0; i < qc.first.diagonal.size(); ++i)
            os << (i ? "+" : "") << qc.first.diagonal[i].str();
        os << "," << qc.second << "\n";
    }
    writeOut(o, os.str());
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine and verifier for finite-type cluster X-seed patterns"};
    app.require_subcommand(1);
    Options o;

    auto addCommon = [&](CLI::App* c, bool withType) {
        if (withType) {
            c->add_option("--type", o.type, "Dynkin type letter A|B|C|D|E|F|G");
            c->add_option("--rank", o.rank, "rank n");
        }
        c->add_option("--threads", o.threads, "worker threads (default: logical cores)");
        c->add_option("--max-nodes", o.maxNodes, "node limit (0 = unlimited)");
        c->add_option("--max-seconds", o.maxSeconds, "time limit (0 = unlimited)");
        c->add_option("-o,--output", o.output, "output file (default stdout)");
    };

    CLI::App* count = app.add_subcommand("count-xvars", "count X-variables of a pattern");
    addCommon(count, true);
    count->add_option("--semifield", o.semifield, "universal|principal");
    count->add_flag("--expect-paper", o.expectPaper, "compare against the published table");
    count->add_flag("--allow-long", o.allowLong, "enable hours-scale E7/E8 runs");
    count->add_option("--format", o.format, "table|json");

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    CLI::App* vb = verify->add_subcommand("bijection", "quadrilateral bijection checks");
    addCommon(vb, true);
    CLI::App* vq = verify->add_subcommand("quad-counts", "quadrilateral census vs closed form");
    vq->add_option("--surface", o.surface, "plain|punctured|folded-plain|folded-punctured");
    vq->add_option("--n", o.nSurface, "polygon vertex count");
    vq->add_option("-o,--output", o.output, "output file");
    CLI::App* vg = verify->add_subcommand("geometric", "pairwise distinctness certification");
    addCommon(vg, true);
    vg->add_option("--trials", o.trials, "random configurations per pair");
    vg->add_option("--seed", o.rngSeed, "random seed");
    CLI::App* vp = verify->add_subcommand("pairs", "exchangeable-pair census");
    addCommon(vp, true);
    CLI::App* vc = verify->add_subcommand("exchange-graph-coincide",
                                          "A-pattern vs universal X-pattern graphs");
    addCommon(vc, true);

    CLI::App* emit = app.add_subcommand("emit", "machine-readable artifacts");
    emit->require_subcommand(1);
    CLI::App* eg = emit->add_subcommand("exchange-graph", "exchange graph DOT/JSON");
    addCommon(eg, true);
    eg->add_option("--semifield", o.semifield, "universal|principal");
    eg->add_option("--format", o.format, "dot|json");
    eg->add_flag("--allow-long", o.allowLong, "enable hours-scale E7/E8 runs");
    CLI::App* ef = emit->add_subcommand("flip-graph", "flip graph DOT/JSON");
    ef->add_option("--surface", o.surface, "plain|punctured|folded-plain|folded-punctured");
    ef->add_option("--n", o.nSurface, "polygon vertex count");
    ef->add_option("--format", o.format, "dot|json");
    ef->add_option("-o,--output", o.output, "output file");
    CLI::App* ex = emit->add_subcommand("xvars", "canonical X-variables JSON");
    addCommon(ex, true);
    ex->add_option("--semifield", o.semifield, "universal|principal");
    ex->add_option("--format", o.format, "json");
    ex->add_flag("--allow-long", o.allowLong, "enable hours-scale E7/E8 runs");
    CLI::App* eq = emit->add_subcommand("quad-census", "quadrilateral census CSV");
    eq->add_option("--surface", o.surface, "plain|punctured|folded-plain|folded-punctured");
    eq->add_option("--n", o.nSurface, "polygon vertex count");
    eq->add_option("-o,--output", o.output, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return cmdCountXVars(o);
        if (verify->parsed()) {
            if (vb->parsed()) return cmdVerifyBijection(o);
            if (vq->parsed()) return cmdVerifyQuadCounts(o);
            if (vg->parsed()) return cmdVerifyGeometric(o);
            if (vp->parsed()) return cmdVerifyPairs(o);
            if (vc->parsed()) return cmdVerifyCoincide(o);
        }
        if (emit->parsed()) {
            if (eg->parsed()) return cmdEmitExchangeGraph(o);
            if (ef->parsed()) return cmdEmitFlipGraph(o);
            if (ex->parsed()) return cmdEmitXVars(o);
            if (eq->parsed()) return cmdEmitQuadCensus(o);
        }
    } catch (const PartialResultError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const CapabilityError& e) {
        std::cerr << "capability: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCounterexample;
    }
    return kExitCounterexample;
}
