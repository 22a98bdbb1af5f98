#include "xpat/semifield.hpp"

#include <algorithm>
#include <sstream>

namespace xpat {

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    if (exps.size() != o.exps.size()) throw DimensionError("generator count mismatch");
    LaurentMonomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial r = *this;
    for (auto& e : r.exps) e = -e;
    return r;
}

LaurentMonomial LaurentMonomial::pow(long e) const {
    LaurentMonomial r = *this;
    for (auto& x : r.exps) x *= e;
    return r;
}

LaurentMonomial LaurentMonomial::oplus(const LaurentMonomial& o) const {
    if (exps.size() != o.exps.size()) throw DimensionError("generator count mismatch");
    LaurentMonomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::min(r.exps[i], o.exps[i]);
    return r;
}

int LaurentMonomial::cmp(const LaurentMonomial& o) const {
    if (exps != o.exps) return exps < o.exps ? -1 : 1;
    return 0;
}

size_t LaurentMonomial::hash() const {
    size_t h = 0x51ed2701;
    for (int64_t e : exps) hashCombine(h, static_cast<size_t>(e) * 0x9e3779b97f4a7c15ULL + 1);
    return h;
}

std::string LaurentMonomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        if (any) os << "*";
        os << "t" << (i + 1);
        if (exps[i] != 1) os << "^" << exps[i];
        any = true;
    }
    if (!any) return "1";
    return os.str();
}

std::string semifieldKindName(SemifieldKind k) {
    switch (k) {
        case SemifieldKind::Universal: return "universal";
        case SemifieldKind::Tropical: return "tropical";
        case SemifieldKind::Trivial: return "trivial";
    }
    return "?";
}

SemifieldValue SemifieldValue::universal(RationalFunction v) {
    if (v.isZero()) throw DivisionError("semifield values are nonzero");
    SemifieldValue s;
    s.kind_ = SemifieldKind::Universal;
    s.rf_ = std::move(v);
    return s;
}

SemifieldValue SemifieldValue::tropical(LaurentMonomial m) {
    SemifieldValue s;
    s.kind_ = SemifieldKind::Tropical;
    s.mono_ = std::move(m);
    return s;
}

SemifieldValue SemifieldValue::unit(SemifieldKind kind, int k) {
    switch (kind) {
        case SemifieldKind::Universal:
            return universal(RationalFunction::one(k));
        case SemifieldKind::Tropical:
            return tropical(LaurentMonomial::one(k));
        case SemifieldKind::Trivial:
            return trivialUnit();
    }
    return trivialUnit();
}

int SemifieldValue::generators() const {
    switch (kind_) {
        case SemifieldKind::Universal: return rf_.nvars();
        case SemifieldKind::Tropical: return mono_.k();
        case SemifieldKind::Trivial: return 0;
    }
    return 0;
}

const RationalFunction& SemifieldValue::rf() const {
    if (kind_ != SemifieldKind::Universal) throw VariantError("not a universal value");
    return rf_;
}

const LaurentMonomial& SemifieldValue::mono() const {
    if (kind_ != SemifieldKind::Tropical) throw VariantError("not a tropical value");
    return mono_;
}

bool SemifieldValue::isUnit() const {
    switch (kind_) {
        case SemifieldKind::Universal: return rf_.isOne();
        case SemifieldKind::Tropical: return mono_ == LaurentMonomial::one(mono_.k());
        case SemifieldKind::Trivial: return true;
    }
    return false;
}

void SemifieldValue::checkCompatible(const SemifieldValue& o) const {
    if (kind_ != o.kind_) throw VariantError("mixing semifield variants");
    if (generators() != o.generators()) throw DimensionError("generator count mismatch");
}

SemifieldValue SemifieldValue::mul(const SemifieldValue& o) const {
    checkCompatible(o);
    switch (kind_) {
        case SemifieldKind::Universal: return universal(rf_ * o.rf_);
        case SemifieldKind::Tropical: return tropical(mono_ * o.mono_);
        case SemifieldKind::Trivial: return trivialUnit();
    }
    return trivialUnit();
}

SemifieldValue SemifieldValue::inv() const {
    switch (kind_) {
        case SemifieldKind::Universal: return universal(rf_.inverse());
        case SemifieldKind::Tropical: return tropical(mono_.inverse());
        case SemifieldKind::Trivial: return trivialUnit();
    }
    return trivialUnit();
}

SemifieldValue SemifieldValue::pow(long e) const {
    switch (kind_) {
        case SemifieldKind::Universal: return universal(rf_.pow(e));
        case SemifieldKind::Tropical: return tropical(mono_.pow(e));
        case SemifieldKind::Trivial: return trivialUnit();
    }
    return trivialUnit();
}

SemifieldValue SemifieldValue::oplus(const SemifieldValue& o) const {
    checkCompatible(o);
    switch (kind_) {
        case SemifieldKind::Universal: return universal(rf_ + o.rf_);
        case SemifieldKind::Tropical: return tropical(mono_.oplus(o.mono_));
        case SemifieldKind::Trivial: return trivialUnit();
    }
    return trivialUnit();
}

SemifieldValue SemifieldValue::oplusOne() const {
    switch (kind_) {
        case SemifieldKind::Universal:
            return universal(rf_ + RationalFunction::one(rf_.nvars()));
        case SemifieldKind::Tropical: {
            LaurentMonomial r = mono_;
            for (auto& e : r.exps) e = std::min<int64_t>(e, 0);
            return tropical(std::move(r));
        }
        case SemifieldKind::Trivial:
            return trivialUnit();
    }
    return trivialUnit();
}

bool SemifieldValue::operator==(const SemifieldValue& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case SemifieldKind::Universal: return rf_ == o.rf_;
        case SemifieldKind::Tropical: return mono_ == o.mono_;
        case SemifieldKind::Trivial: return true;
    }
    return false;
}

int SemifieldValue::cmp(const SemifieldValue& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_ ? -1 : 1;
    switch (kind_) {
        case SemifieldKind::Universal: return rf_.cmp(o.rf_);
        case SemifieldKind::Tropical: return mono_.cmp(o.mono_);
        case SemifieldKind::Trivial: return 0;
    }
    return 0;
}

size_t SemifieldValue::hash() const {
    size_t h = static_cast<size_t>(kind_) * 0xff51afd7ed558ccdULL;
    switch (kind_) {
        case SemifieldKind::Universal: hashCombine(h, rf_.hash()); break;
        case SemifieldKind::Tropical: hashCombine(h, mono_.hash()); break;
        case SemifieldKind::Trivial: break;
    }
    return h;
}

std::string SemifieldValue::str() const {
    switch (kind_) {
        case SemifieldKind::Universal: return rf_.str();
        case SemifieldKind::Tropical: return mono_.str();
        case SemifieldKind::Trivial: return "1";
    }
    return "?";
}

} // namespace xpat
