#pragma once

#include "xpat/canonical_key.hpp"
#include "xpat/dynkin.hpp"
#include "xpat/factor_basis.hpp"
#include "xpat/seed.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xpat {

struct ExploreLimits {
    size_t maxNodes = 0;   // 0 = unlimited
    double maxSeconds = 0; // 0 = unlimited
    int threads = 1;
    bool storeRepresentatives = true;
};

struct GraphStats {
    size_t nodes = 0;
    size_t edges = 0; // directed labeled edges (n per node)
    size_t xvars = 0;
    size_t maxNumTerms = 0; // largest numerator seen among X-variables
    size_t maxDenTerms = 0;
    int64_t maxDegree = 0;
};

struct GraphNode {
    std::string key; // canonical key bytes
    std::optional<XSeed> xseed;
    std::optional<ASeed> aseed;
};

struct GraphEdge {
    size_t from;
    int dir;
    size_t to;
};

// Exchange graph over unlabeled seeds: nodes are canonical-key equivalence
// classes, each holding a representative labeled seed; edges carry the
// mutation direction relative to the representative.
struct ExchangeGraph {
    std::string type;      // informational label, e.g. "A3"
    int rank = 0;
    std::string semifield; // universal | principal | trivial | field
    bool partial = false;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<SemifieldValue> xvars; // canonical, sorted
    GraphStats stats;
    size_t rootIndex = 0;

    std::map<std::string, size_t> byKey;

    size_t indexOf(const std::string& key) const;
};

struct PartialResultError : public std::runtime_error {
    ExchangeGraph partial;
    PartialResultError(const std::string& msg, ExchangeGraph g)
        : std::runtime_error(msg), partial(std::move(g)) {}
};

// Fixpoint BFS with dedup by canonical key. Universal X-seeds run on the
// factor-basis fast path; tropical/trivial clusters and A-seeds run on plain
// value arithmetic. Deterministic given the root and limits.
ExchangeGraph explore(const XSeed& root, const ExploreLimits& limits = {});
ExchangeGraph explore(const ASeed& root, const ExploreLimits& limits = {});

enum class CoefficientChoice : uint8_t { Universal, Principal };

// |X(S)| for the Dynkin pattern rooted at the bipartite initial matrix.
size_t countXVars(DynkinType t, int n, CoefficientChoice coeffs,
                  const ExploreLimits& limits = {});

struct PairCensus {
    size_t ordered = 0;
    size_t unordered = 0;
};

// Exchangeable-pair census of the coefficient-free A-pattern.
PairCensus exchangeablePairs(DynkinType t, int n, const ExploreLimits& limits = {});

// Unique-exchange check (full-rank tropical coefficients): the unordered pair
// of exchange-relation monomials determines the exchanged variable pair.
bool uniqueExchangeHolds(DynkinType t, int n, const ExploreLimits& limits = {});

// Exchange-graph coincidence: lockstep mutation from both roots; true iff the
// node correspondence induced by identical mutation words is a bijection.
// Both graphs must be complete.
bool graphsIsomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2);

} // namespace xpat
