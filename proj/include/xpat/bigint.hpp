#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace xpat {

// Arbitrary-precision integers and rationals, backed by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Int intGcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool intDivisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int intDivExact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a mod m in [0, m), m > 0 fitting in uint64.
inline uint64_t intMod(const Int& a, uint64_t m) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return mpz_get_ui(r.get_mpz_t());
}

inline std::string intStr(const Int& a) { return a.get_str(); }
inline std::string ratStr(const Rat& a) { return a.get_str(); }

inline size_t intHash(const Int& a) {
    // cheap but stable: residue + sign + size
    size_t h = intMod(a, 0x1fffffffffffffffULL);
    h ^= static_cast<size_t>(mpz_sgn(a.get_mpz_t()) + 2) << 61;
    return h;
}

inline void hashCombine(size_t& seed, size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Errors thrown by the arithmetic layer carry one of these tags so the CLI
// can map them onto exit codes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UndefinedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct VariantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace xpat
