#include "xpat/seed.hpp"

#include <cassert>
#include <stdexcept>

namespace xpat {

RationalFunction ASeed::embed(const SemifieldValue& v) const {
    const int nv = ambientVars();
    switch (v.kind()) {
        case SemifieldKind::Trivial:
            return RationalFunction::one(nv);
        case SemifieldKind::Universal: {
            // substitute generator i -> embedding
            const RationalFunction& r = v.rf();
            int k = r.nvars();
            std::vector<RationalFunction> gens(k);
            for (int i = 0; i < k; ++i) {
                if (!coeffEmbed.empty()) {
                    gens[i] = coeffEmbed[i];
                } else {
                    gens[i] = RationalFunction::variable(nv, static_cast<int>(a.size()) + i);
                }
            }
            auto evalPoly = [&](const Polynomial& p) {
                RationalFunction acc = RationalFunction(Polynomial::zero(nv));
                for (const auto& t : p.terms()) {
                    RationalFunction m(Polynomial::constant(nv, t.coef));
                    for (int i = 0; i < k; ++i)
                        if (t.exp[i]) m = m * gens[i].pow(t.exp[i]);
                    acc = acc + m;
                }
                return acc;
            };
            return evalPoly(r.num()) / evalPoly(r.den());
        }
        case SemifieldKind::Tropical: {
            const LaurentMonomial& m = v.mono();
            RationalFunction acc = RationalFunction::one(nv);
            for (int i = 0; i < m.k(); ++i) {
                if (!m.exps[i]) continue;
                RationalFunction g = !coeffEmbed.empty()
                                         ? coeffEmbed[i]
                                         : RationalFunction::variable(nv, static_cast<int>(a.size()) + i);
                acc = acc * g.pow(m.exps[i]);
            }
            return acc;
        }
    }
    throw VariantError("unknown semifield kind");
}

XSeed mutateX(const XSeed& s, int k) {
    const int n = s.rank();
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    XSeed r;
    r.B = s.B.mutated(k);
    r.x = s.x;
    // factors (x_k (+) 1) and (x_k^{-1} (+) 1), computed on demand
    bool havePlus = false, haveMinus = false;
    SemifieldValue fPlus, fMinus;
    for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        int64_t bkj = s.B.at(k, j);
        if (bkj == 0) continue; // sgn(0) case: exponent -b_kj = 0, factor is 1
        long e = static_cast<long>(-bkj);
        if (e > 0) {
            if (!havePlus) {
                fPlus = s.x[k].oplusOne();
                havePlus = true;
            }
            r.x[j] = s.x[j].mul(fPlus.pow(e));
        } else {
            if (!haveMinus) {
                fMinus = s.x[k].inv().oplusOne();
                haveMinus = true;
            }
            r.x[j] = s.x[j].mul(fMinus.pow(e));
        }
    }
    r.x[k] = s.x[k].inv();
    return r;
}

ASeed mutateA(const ASeed& s, int k) {
    const int n = s.rank();
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    const int nv = s.ambientVars();

    RationalFunction mPlus = RationalFunction::one(nv);
    RationalFunction mMinus = RationalFunction::one(nv);
    for (int i = 0; i < n; ++i) {
        int64_t bik = s.B.at(i, k);
        if (bik > 0) mPlus = mPlus * s.a[i].pow(bik);
        if (bik < 0) mMinus = mMinus * s.a[i].pow(-bik);
    }
    RationalFunction num = s.embed(s.x[k]) * mPlus + mMinus;
    RationalFunction den = s.a[k] * s.embed(s.x[k].oplusOne());
    RationalFunction aNew = num / den;

    XSeed xs{s.x, s.B};
    XSeed xsNew = mutateX(xs, k);

    ASeed r;
    r.a = s.a;
    r.a[k] = std::move(aNew);
    r.x = std::move(xsNew.x);
    r.B = std::move(xsNew.B);
    r.coeffEmbed = s.coeffEmbed;
    return r;
}

ASeed coefficientFreeASeed(const ExchangeMatrix& B) {
    const int n = B.rank();
    ASeed s;
    s.B = B;
    s.a.reserve(n);
    for (int i = 0; i < n; ++i) s.a.push_back(RationalFunction::variable(n, i));
    s.x.assign(n, SemifieldValue::trivialUnit());
    return s;
}

ASeed principalASeed(const ExchangeMatrix& B) {
    const int n = B.rank();
    ASeed s;
    s.B = B;
    s.a.reserve(n);
    for (int i = 0; i < n; ++i) s.a.push_back(RationalFunction::variable(2 * n, i));
    s.x.reserve(n);
    for (int i = 0; i < n; ++i)
        s.x.push_back(SemifieldValue::tropicalGenerator(n, i));
    return s;
}

ASeed universalASeed(const ExchangeMatrix& B) {
    const int n = B.rank();
    ASeed s;
    s.B = B;
    s.a.reserve(n);
    for (int i = 0; i < n; ++i) s.a.push_back(RationalFunction::variable(2 * n, i));
    s.x.reserve(n);
    for (int i = 0; i < n; ++i)
        s.x.push_back(SemifieldValue::universalGenerator(n, i));
    return s;
}

XSeed hatSeed(const ASeed& s) {
    const int n = s.rank();
    const int nv = s.ambientVars();
    XSeed r;
    r.B = s.B;
    r.x.reserve(n);
    for (int j = 0; j < n; ++j) {
        RationalFunction v = s.embed(s.x[j]);
        for (int i = 0; i < n; ++i) {
            int64_t bij = s.B.at(i, j);
            if (bij) v = v * s.a[i].pow(bij);
        }
        (void)nv;
        r.x.push_back(SemifieldValue::universal(std::move(v)));
    }
    return r;
}

XSeed universalXSeed(const ExchangeMatrix& B) {
    const int n = B.rank();
    XSeed s;
    s.B = B;
    s.x.reserve(n);
    for (int i = 0; i < n; ++i) s.x.push_back(SemifieldValue::universalGenerator(n, i));
    return s;
}

XSeed principalXSeed(const ExchangeMatrix& B) {
    const int n = B.rank();
    XSeed s;
    s.B = B;
    s.x.reserve(n);
    for (int i = 0; i < n; ++i) s.x.push_back(SemifieldValue::tropicalGenerator(n, i));
    return s;
}

} // namespace xpat
