#pragma once

#include "xpat/exchange_matrix.hpp"
#include "xpat/semifield.hpp"

#include <vector>

namespace xpat {

// Labeled X-seed: coefficient tuple plus exchange matrix.
struct XSeed {
    std::vector<SemifieldValue> x;
    ExchangeMatrix B;

    int rank() const { return B.rank(); }
    bool operator==(const XSeed& o) const { return x == o.x && B == o.B; }
};

// Labeled A-seed in the ambient field F. The ambient field is the rational
// function field in (aVars + tVars) indeterminates: the first aVars slots are
// the initial cluster variables, the rest realize the semifield generators.
// coeffEmbed maps semifield generator i to its image in F; when empty and the
// seed is universal, generator i maps to indeterminate aVars + i.
struct ASeed {
    std::vector<RationalFunction> a;
    std::vector<SemifieldValue> x;
    ExchangeMatrix B;
    std::vector<RationalFunction> coeffEmbed;

    int rank() const { return B.rank(); }
    int ambientVars() const { return a.empty() ? 0 : a[0].nvars(); }
    bool operator==(const ASeed& o) const { return a == o.a && x == o.x && B == o.B; }

    RationalFunction embed(const SemifieldValue& v) const;
};

// X-seed mutation in direction k (0-based): x'_k = x_k^{-1},
// x'_j = x_j (x_k^{sgn(-b_kj)} (+) 1)^{-b_kj} otherwise; B mutated.
XSeed mutateX(const XSeed& s, int k);

// A-seed mutation in direction k: exchange relation
// a'_k a_k = (x_k prod_{b_ik>0} a_i^{b_ik} + prod_{b_ik<0} a_i^{-b_ik}) / (x_k (+) 1),
// with x and B mutated alongside.
ASeed mutateA(const ASeed& s, int k);

// Coefficient-free A-seed: trivial semifield, a_i = the i-th indeterminate.
ASeed coefficientFreeASeed(const ExchangeMatrix& B);

// A-seed with principal coefficients: tropical x_i = t_i, ambient field in
// (n cluster vars) + (n tropical generators).
ASeed principalASeed(const ExchangeMatrix& B);

// A-seed over the universal semifield in n generators, x_i = t_i.
ASeed universalASeed(const ExchangeMatrix& B);

// hat construction: x^_j = x_j prod_i a_i^{b_ij}, an X-seed in F
// (universal values over the ambient indeterminates). Commutes with mutation.
XSeed hatSeed(const ASeed& s);

// Initial X-seed over the universal semifield: x_i = t_i in n generators.
XSeed universalXSeed(const ExchangeMatrix& B);

// Initial X-seed with principal coefficients: tropical x_i = t_i.
XSeed principalXSeed(const ExchangeMatrix& B);

} // namespace xpat
