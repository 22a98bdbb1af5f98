#pragma once

#include "xpat/polynomial.hpp"

#include <optional>

namespace xpat {

// Reduced fraction of integer polynomials. Canonical form:
//   den != 0, gcd(num, den) == 1 (polynomial and integer content),
//   den has positive leading coefficient in graded-lex order.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(num_.nvars(), 1)) {}

    // Canonicalizes; throws DivisionError when den is zero.
    static RationalFunction make(Polynomial num, Polynomial den);
    // Caller guarantees gcd(num, den) == 1; only normalizes signs.
    static RationalFunction fromReduced(Polynomial num, Polynomial den);
    static RationalFunction constant(int nvars, const Rat& c);
    static RationalFunction variable(int nvars, int idx) {
        return RationalFunction(Polynomial::variable(nvars, idx));
    }
    static RationalFunction one(int nvars) {
        return RationalFunction(Polynomial::constant(nvars, 1));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    int cmp(const RationalFunction& o) const;

    // nullopt when den vanishes at the point.
    std::optional<Rat> evaluate(const std::vector<Rat>& point) const;
    std::pair<uint64_t, uint64_t> evalModPair(const std::vector<uint64_t>& point,
                                              uint64_t prime) const;

    size_t hash() const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    Polynomial num_; // zero value: 0/1 with matching nvars
    Polynomial den_;
};

} // namespace xpat
