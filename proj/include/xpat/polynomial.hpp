#pragma once

#include "xpat/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xpat {

// Exponent vector; one entry per indeterminate, entries >= 0.
using ExpVec = std::vector<int32_t>;

struct Term {
    ExpVec exp;
    Int coef;

    bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
    bool operator!=(const Term& o) const { return !(*this == o); }
};

// Sparse multivariate polynomial with integer coefficients.
// Terms are kept in graded-lexicographic order, largest first, and never
// carry a zero coefficient. The zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, Int c);
    static Polynomial variable(int nvars, int idx, int power = 1);
    static Polynomial monomial(int nvars, ExpVec e, Int c);
    // Normalizes: merges duplicate exponents, drops zeros, sorts.
    static Polynomial fromTerms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    bool isOne() const;
    const std::vector<Term>& terms() const { return terms_; }
    size_t termCount() const { return terms_.size(); }
    // -1 for the zero polynomial.
    int64_t totalDegree() const;
    int degreeIn(int var) const;
    const Term& leading() const { return terms_.front(); }
    int leadingSign() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial mulMonomial(const ExpVec& e, const Int& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    // Total order: graded-lex on the term sequence (for canonical sorting).
    int cmp(const Polynomial& o) const;

    // gcd of absolute coefficient values; 0 for the zero polynomial.
    Int content() const;
    // this / content, leading coefficient made positive.
    Polynomial primitivePart() const;

    // Exact division; nullopt when not divisible.
    std::optional<Polynomial> dividedBy(const Polynomial& d) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    // Evaluation mod a prime < 2^63 at the given residue point.
    uint64_t evalMod(const std::vector<uint64_t>& point, uint64_t prime) const;

    size_t hash() const;
    std::string str(const std::vector<std::string>& names = {}) const;

    // Full gcd: content gcd times primitive gcd, positive leading coefficient.
    // Throws UndefinedInputError when both inputs are zero.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // < 0, 0, > 0 as a is smaller, equal, greater in graded-lex.
    static int gradedLexCmp(const ExpVec& a, const ExpVec& b);

private:
    void checkSameVars(const Polynomial& o) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

uint64_t powMod(uint64_t base, uint64_t e, uint64_t mod);
uint64_t invMod(uint64_t a, uint64_t prime);
uint64_t mulMod(uint64_t a, uint64_t b, uint64_t mod);

} // namespace xpat
