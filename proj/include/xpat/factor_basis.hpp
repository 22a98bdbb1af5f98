#pragma once

#include "xpat/polynomial.hpp"
#include "xpat/rational_function.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace xpat {

// Exponent map over basis ids, sorted by id, no zero exponents.
using FactorExps = std::vector<std::pair<int, int>>;

FactorExps mergeExps(const FactorExps& a, const FactorExps& b, int bScale = 1);
FactorExps scaleExps(const FactorExps& a, int s);

// An ordered collection of pairwise-coprime primitive polynomials with
// positive leading coefficients. Every polynomial that passes through
// reduce() factors exactly as content * prod basis_i^e_i. When a new
// polynomial shares a proper factor with an existing element, the element is
// split; old ids stay valid through the split forest (poly(id) equals the
// product of its children), and pushDown() rewrites exponent maps onto the
// current leaves. Insertion order determines ids, so a fixed insertion
// schedule yields a fixed basis.
class FactorBasis {
public:
    explicit FactorBasis(int nvars);

    int nvars() const { return nvars_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Polynomial& poly(int id) const { return nodes_[id].p; }
    bool isLive(int id) const { return nodes_[id].child[0] < 0; }
    uint64_t prime() const { return prime_; }
    uint64_t fingerprintOfPoly(int id) const { return nodes_[id].fp; }

    struct Reduction {
        Rat content;      // signed rational content (integer for polynomial input)
        FactorExps exps;  // over basis ids at the time of reduction
    };

    // Factolrs p (nonzero) over the basis, inserting whatever new coprime
    // pieces are needed. Deterministic given call order. Mutates the basis.
    Reduction reduce(const Polynomial& p);

    // Read-only trial division against current live leaves; the cofactor is
    // whatever part is not yet expressible. Used by parallel expansion.
    // Leaves listed in skipIds (sorted) are known non-divisors and skipped.
    struct Partial {
        Rat content;
        FactorExps exps;
        Polynomial cofactor; // 1 when fully reduced
    };
    Partial reducePartial(const Polynomial& p,
                          const std::vector<int>* skipIds = nullptr) const;

    // Completes a Partial under the current basis (serial merge phase).
    Reduction finish(Partial&& pr);

    // Rewrites an exponent map onto current live leaves, sorted by id.
    FactorExps pushDown(const FactorExps& exps) const;

    // Evaluation of content * prod basis^e at the fixed point mod prime.
    // Returns 0 when the evaluation is degenerate (zero or non-invertible).
    uint64_t fingerprint(const Rat& content, const FactorExps& exps) const;

    // prod over e>0 (positive=true) or e<0 (negative part, exponents negated).
    Polynomial expandPart(const FactorExps& exps, bool positive) const;

    // Full expansion as a rational function (already reduced by coprimality).
    RationalFunction expand(const Rat& content, const FactorExps& exps) const;

    const std::vector<uint64_t>& evalPoint() const { return evalPoint_; }

private:
    struct Node {
        Polynomial p;
        int child[2] = {-1, -1};
        uint64_t fp = 0;
    };

    int newNode(Polynomial p);
    // Registers primitive positive c (non-constant) and appends its factor-
    // ization over live leaves to out.
    void addFactored(Polynomial c, int mult, FactorExps& out);
    // Restores pairwise coprimality between two fresh leaves.
    void refineLeafPair(int i, int j);

    int nvars_;
    uint64_t prime_;
    std::vector<uint64_t> evalPoint_;
    std::vector<Node> nodes_;
};

} // namespace xpat
