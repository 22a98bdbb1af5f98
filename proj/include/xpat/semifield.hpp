#pragma once

#include "xpat/rational_function.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xpat {

// Element of a tropical semifield: a Laurent monomial in the generators,
// coefficient always 1. Auxiliary addition is the componentwise minimum.
struct LaurentMonomial {
    std::vector<int64_t> exps;

    static LaurentMonomial one(int k) { return {std::vector<int64_t>(k, 0)}; }
    static LaurentMonomial generator(int k, int i) {
        LaurentMonomial m = one(k);
        m.exps[i] = 1;
        return m;
    }
    int k() const { return static_cast<int>(exps.size()); }

    LaurentMonomial operator*(const LaurentMonomial& o) const;
    LaurentMonomial inverse() const;
    LaurentMonomial pow(long e) const;
    LaurentMonomial oplus(const LaurentMonomial& o) const;

    bool operator==(const LaurentMonomial& o) const { return exps == o.exps; }
    bool operator!=(const LaurentMonomial& o) const { return !(*this == o); }
    int cmp(const LaurentMonomial& o) const;
    size_t hash() const;
    std::string str() const;
};

enum class SemifieldKind : uint8_t { Universal, Tropical, Trivial };

std::string semifieldKindName(SemifieldKind k);

// Tagged union over the three semifields used by seed patterns:
//  - Universal: reduced rational function in k generators, ordinary + as oplus.
//  - Tropical:  Laurent monomial, min-plus oplus.
//  - Trivial:   the one-element semifield {1}; reserved for coefficient-free
//    A-patterns, where it turns the exchange relation into its classical form.
class SemifieldValue {
public:
    SemifieldValue() : kind_(SemifieldKind::Trivial) {}

    static SemifieldValue universal(RationalFunction v);
    static SemifieldValue universalGenerator(int k, int i) {
        return universal(RationalFunction::variable(k, i));
    }
    static SemifieldValue tropical(LaurentMonomial m);
    static SemifieldValue tropicalGenerator(int k, int i) {
        return tropical(LaurentMonomial::generator(k, i));
    }
    static SemifieldValue trivialUnit() { return SemifieldValue(); }
    static SemifieldValue unit(SemifieldKind kind, int k);

    SemifieldKind kind() const { return kind_; }
    int generators() const;
    const RationalFunction& rf() const;
    const LaurentMonomial& mono() const;
    bool isUnit() const;

    SemifieldValue mul(const SemifieldValue& o) const;
    SemifieldValue inv() const;
    SemifieldValue pow(long e) const;
    SemifieldValue oplus(const SemifieldValue& o) const;
    // value (+) 1; the only oplus shape seed mutation needs
    SemifieldValue oplusOne() const;

    bool operator==(const SemifieldValue& o) const;
    bool operator!=(const SemifieldValue& o) const { return !(*this == o); }
    int cmp(const SemifieldValue& o) const;
    size_t hash() const;
    std::string str() const;

private:
    void checkCompatible(const SemifieldValue& o) const;

    SemifieldKind kind_;
    RationalFunction rf_;   // Universal
    LaurentMonomial mono_;  // Tropical
};

} // namespace xpat
