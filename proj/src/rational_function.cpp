#include "xpat/rational_function.hpp"

#include <cassert>

namespace xpat {

RationalFunction RationalFunction::make(Polynomial num, Polynomial den) {
    if (num.nvars() != den.nvars())
        throw DimensionError("mismatched indeterminate counts");
    if (den.isZero()) throw DivisionError("zero denominator");
    RationalFunction r;
    if (num.isZero()) {
        r.num_ = std::move(num);
        r.den_ = Polynomial::constant(den.nvars(), 1);
        return r;
    }
    Polynomial g = Polynomial::gcd(num, den);
    if (!g.isOne()) {
        auto qn = num.dividedBy(g);
        auto qd = den.dividedBy(g);
        assert(qn && qd);
        num = std::move(*qn);
        den = std::move(*qd);
    }
    if (den.leadingSign() < 0) {
        num = -num;
        den = -den;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunction RationalFunction::fromReduced(Polynomial num, Polynomial den) {
    if (num.nvars() != den.nvars())
        throw DimensionError("mismatched indeterminate counts");
    if (den.isZero()) throw DivisionError("zero denominator");
    RationalFunction r;
    if (num.isZero()) den = Polynomial::constant(den.nvars(), 1);
    if (den.leadingSign() < 0) {
        num = -num;
        den = -den;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunction RationalFunction::constant(int nvars, const Rat& c) {
    return make(Polynomial::constant(nvars, c.get_num()),
                Polynomial::constant(nvars, c.get_den()));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return make(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero()) throw DivisionError("division by zero rational function");
    return make(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (isZero()) throw DivisionError("inverse of zero");
    return make(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return one(nvars());
    RationalFunction base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    // num/den powers of a reduced fraction stay reduced
    RationalFunction r;
    r.num_ = base.num_.pow(k);
    r.den_ = base.den_.pow(k);
    return r;
}

int RationalFunction::cmp(const RationalFunction& o) const {
    int c = num_.cmp(o.num_);
    if (c != 0) return c;
    return den_.cmp(o.den_);
}

std::optional<Rat> RationalFunction::evaluate(const std::vector<Rat>& point) const {
    Rat d = den_.evaluate(point);
    if (d == 0) return std::nullopt;
    Rat n = num_.evaluate(point);
    Rat r = n / d;
    r.canonicalize();
    return r;
}

std::pair<uint64_t, uint64_t> RationalFunction::evalModPair(
    const std::vector<uint64_t>& point, uint64_t prime) const {
    return {num_.evalMod(point, prime), den_.evalMod(point, prime)};
}

size_t RationalFunction::hash() const {
    size_t h = num_.hash();
    hashCombine(h, den_.hash());
    return h;
}

std::string RationalFunction::str(const std::vector<std::string>& names) const {
    if (den_.isOne()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

} // namespace xpat
