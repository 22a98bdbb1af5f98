#include "xpat/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace xpat {

namespace {

struct ExpVecHash {
    size_t operator()(const ExpVec& e) const {
        size_t h = 1469598103934665603ULL;
        for (int32_t v : e) {
            h ^= static_cast<size_t>(v) + 0x9e37;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

bool termGreater(const Term& a, const Term& b) {
    return Polynomial::gradedLexCmp(a.exp, b.exp) > 0;
}

} // namespace

int Polynomial::gradedLexCmp(const ExpVec& a, const ExpVec& b) {
    assert(a.size() == b.size());
    int64_t da = 0, db = 0;
    for (int32_t v : a) da += v;
    for (int32_t v : b) db += v;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Polynomial Polynomial::constant(int nvars, Int c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({ExpVec(nvars, 0), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int idx, int power) {
    if (idx < 0 || idx >= nvars) throw DimensionError("variable index out of range");
    Polynomial p(nvars);
    ExpVec e(nvars, 0);
    e[idx] = power;
    p.terms_.push_back({std::move(e), Int(1)});
    return p;
}

Polynomial Polynomial::monomial(int nvars, ExpVec e, Int c) {
    if (static_cast<int>(e.size()) != nvars) throw DimensionError("exponent length mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

Polynomial Polynomial::fromTerms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), termGreater);
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (static_cast<int>(t.exp.size()) != nvars)
            throw DimensionError("exponent length mismatch");
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::isConstant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && totalDegree() == 0;
}

bool Polynomial::isOne() const {
    return terms_.size() == 1 && terms_[0].coef == 1 && totalDegree() == 0;
}

int64_t Polynomial::totalDegree() const {
    if (terms_.empty()) return -1;
    int64_t d = 0;
    for (int32_t v : terms_.front().exp) d += v;
    return d;
}

int Polynomial::degreeIn(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exp[var]));
    return d;
}

int Polynomial::leadingSign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.front().coef);
}

void Polynomial::checkSameVars(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("mismatched indeterminate counts");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    checkSameVars(o);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = gradedLexCmp(terms_[i].exp, o.terms_[j].exp);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Int s = terms_[i].coef + o.terms_[j].coef;
            if (s != 0) r.terms_.push_back({terms_[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coef});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mulMonomial(const ExpVec& e, const Int& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        ExpVec ne = t.exp;
        for (size_t k = 0; k < ne.size(); ++k) ne[k] += e[k];
        r.terms_.push_back({std::move(ne), t.coef * c});
    }
    return r;
}

namespace {

// exponent vectors with <= 8 entries, all < 128, pack into one uint64
// (8-bit lanes; lane sums stay below 256, so packed addition is exact)
bool packable(const Polynomial& p) {
    if (p.nvars() > 8) return false;
    for (const auto& t : p.terms())
        for (int32_t e : t.exp)
            if (e >= 128) return false;
    return true;
}

uint64_t packExp(const ExpVec& e) {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k |= static_cast<uint64_t>(e[i]) << (8 * i);
    return k;
}

ExpVec unpackExp(uint64_t k, int nvars) {
    ExpVec e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<int32_t>((k >> (8 * i)) & 0xff);
    return e;
}

struct IdentityHash {
    size_t operator()(uint64_t v) const {
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 29;
        return static_cast<size_t>(v);
    }
};

} // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
    checkSameVars(o);
    if (isZero() || o.isZero()) return Polynomial(nvars_);
    if (terms_.size() == 1) return o.mulMonomial(terms_[0].exp, terms_[0].coef);
    if (o.terms_.size() == 1) return mulMonomial(o.terms_[0].exp, o.terms_[0].coef);

    Polynomial r(nvars_);
    if (packable(*this) && packable(o)) {
        std::unordered_map<uint64_t, Int, IdentityHash> acc;
        acc.reserve(terms_.size() + o.terms_.size() + terms_.size() * o.terms_.size() / 4);
        std::vector<uint64_t> pb;
        pb.reserve(o.terms_.size());
        for (const auto& tb : o.terms_) pb.push_back(packExp(tb.exp));
        for (const auto& ta : terms_) {
            uint64_t pa = packExp(ta.exp);
            for (size_t b = 0; b < pb.size(); ++b) {
                auto [it, fresh] = acc.try_emplace(pa + pb[b]);
                if (fresh)
                    it->second = ta.coef * o.terms_[b].coef;
                else
                    it->second += ta.coef * o.terms_[b].coef;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [key, coef] : acc)
            if (coef != 0) r.terms_.push_back({unpackExp(key, nvars_), std::move(coef)});
    } else {
        std::unordered_map<ExpVec, Int, ExpVecHash> acc;
        acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
        ExpVec e(nvars_);
        for (const auto& ta : terms_) {
            for (const auto& tb : o.terms_) {
                for (int k = 0; k < nvars_; ++k) e[k] = ta.exp[k] + tb.exp[k];
                auto it = acc.find(e);
                if (it == acc.end()) {
                    acc.emplace(e, ta.coef * tb.coef);
                } else {
                    it->second += ta.coef * tb.coef;
                }
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [exp, coef] : acc)
            if (coef != 0) r.terms_.push_back({exp, std::move(coef)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), termGreater);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

int Polynomial::cmp(const Polynomial& o) const {
    checkSameVars(o);
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = gradedLexCmp(terms_[i].exp, o.terms_[i].exp);
        if (c != 0) return c;
        int s = ::cmp(terms_[i].coef, o.terms_[i].coef);
        if (s != 0) return s;
    }
    if (terms_.size() != o.terms_.size())
        return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

Int Polynomial::content() const {
    Int g = 0;
    for (const auto& t : terms_) {
        g = intGcd(g, t.coef);
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitivePart() const {
    if (isZero()) return *this;
    Int c = content();
    if (leadingSign() < 0) c = -c;
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp, intDivExact(t.coef, c)});
    return r;
}

namespace {

struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return Polynomial::gradedLexCmp(a, b) > 0;
    }
};

} // namespace

std::optional<Polynomial> Polynomial::dividedBy(const Polynomial& d) const {
    checkSameVars(d);
    if (d.isZero()) throw DivisionError("division by zero polynomial");
    if (isZero()) return Polynomial(nvars_);
    if (d.isOne()) return *this;
    if (totalDegree() < d.totalDegree()) return std::nullopt;

    // leading and trailing terms of a product are the products of the
    // leading and trailing terms; both give O(1) rejections
    const Term& dl = d.leading();
    const Term& dt = d.terms().back();
    const Term& pl = leading();
    const Term& pt = terms().back();
    for (int k = 0; k < nvars_; ++k) {
        if (pl.exp[k] < dl.exp[k]) return std::nullopt;
        if (pt.exp[k] < dt.exp[k]) return std::nullopt;
    }
    if (!intDivisible(pl.coef, dl.coef)) return std::nullopt;
    if (!intDivisible(pt.coef, dt.coef)) return std::nullopt;

    if (d.termCount() == 1) {
        std::vector<Term> q;
        q.reserve(terms_.size());
        for (const auto& t : terms_) {
            ExpVec e(nvars_);
            for (int k = 0; k < nvars_; ++k) {
                e[k] = t.exp[k] - dl.exp[k];
                if (e[k] < 0) return std::nullopt;
            }
            if (!intDivisible(t.coef, dl.coef)) return std::nullopt;
            q.push_back({std::move(e), intDivExact(t.coef, dl.coef)});
        }
        Polynomial res(nvars_);
        res.terms_ = std::move(q);
        return res;
    }

    std::map<ExpVec, Int, GradedLexGreater> rem;
    for (const auto& t : terms_) rem.emplace(t.exp, t.coef);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto lead = rem.begin();
        ExpVec e(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            e[k] = lead->first[k] - dl.exp[k];
            if (e[k] < 0) return std::nullopt;
        }
        if (!intDivisible(lead->second, dl.coef)) return std::nullopt;
        Int c = intDivExact(lead->second, dl.coef);
        for (const auto& t : d.terms_) {
            ExpVec te = t.exp;
            for (int k = 0; k < nvars_; ++k) te[k] += e[k];
            auto it = rem.find(te);
            if (it == rem.end()) {
                rem.emplace(std::move(te), -(t.coef * c));
            } else {
                it->second -= t.coef * c;
                if (it->second == 0) rem.erase(it);
            }
        }
        q.push_back({std::move(e), std::move(c)});
    }
    Polynomial res(nvars_);
    res.terms_ = std::move(q); // decreasing order by construction
    return res;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point length mismatch");
    Rat acc = 0;
    for (const auto& t : terms_) {
        Rat m(t.coef);
        for (int k = 0; k < nvars_; ++k) {
            for (int32_t e = 0; e < t.exp[k]; ++e) m *= point[k];
        }
        acc += m;
    }
    acc.canonicalize();
    return acc;
}

uint64_t mulMod(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

uint64_t powMod(uint64_t base, uint64_t e, uint64_t mod) {
    uint64_t r = 1 % mod;
    base %= mod;
    while (e) {
        if (e & 1) r = mulMod(r, base, mod);
        base = mulMod(base, base, mod);
        e >>= 1;
    }
    return r;
}

uint64_t invMod(uint64_t a, uint64_t prime) {
    return powMod(a % prime, prime - 2, prime);
}

uint64_t Polynomial::evalMod(const std::vector<uint64_t>& point, uint64_t prime) const {
    uint64_t acc = 0;
    for (const auto& t : terms_) {
        uint64_t m = intMod(t.coef, prime);
        for (int k = 0; k < nvars_; ++k)
            if (t.exp[k]) m = mulMod(m, powMod(point[k], t.exp[k], prime), prime);
        acc = (acc + m) % prime;
    }
    return acc;
}

size_t Polynomial::hash() const {
    size_t h = static_cast<size_t>(nvars_) * 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        size_t th = ExpVecHash{}(t.exp);
        hashCombine(th, intHash(t.coef));
        hashCombine(h, th);
    }
    return h;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.coef;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else {
            first = false;
        }
        bool hasVar = false;
        for (int32_t e : t.exp)
            if (e) hasVar = true;
        if (!hasVar || c != 1) os << c.get_str();
        bool emitted = !hasVar || c != 1;
        for (int k = 0; k < nvars_; ++k) {
            if (!t.exp[k]) continue;
            if (emitted) os << "*";
            if (static_cast<size_t>(k) < names.size())
                os << names[k];
            else
                os << "t" << (k + 1);
            if (t.exp[k] != 1) os << "^" << t.exp[k];
            emitted = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD: primitive pseudo-remainder sequences, recursing on the variable set.
// A modular coprimality certificate handles the dominant coprime case without
// running the remainder sequence at all.

namespace {

constexpr uint64_t kGcdPrime = 2305843009213693951ULL; // 2^61 - 1

uint64_t splitmixStep(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// univariate gcd over F_p, coefficient vectors indexed by degree
int uniGcdDegree(std::vector<uint64_t> a, std::vector<uint64_t> b) {
    auto deg = [](const std::vector<uint64_t>& v) {
        for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
            if (v[d]) return d;
        return -1;
    };
    int da = deg(a), db = deg(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db >= 0) {
        uint64_t inv = invMod(b[db], kGcdPrime);
        while (da >= db) {
            uint64_t c = mulMod(a[da], inv, kGcdPrime);
            if (c) {
                for (int t = 0; t <= db; ++t) {
                    uint64_t sub = mulMod(c, b[t], kGcdPrime);
                    uint64_t& slot = a[t + da - db];
                    slot = (slot + kGcdPrime - sub) % kGcdPrime;
                }
            }
            --da;
            while (da >= 0 && a[da] == 0) --da;
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    return da;
}

// restriction of p to a univariate polynomial in `var`, all other variables
// evaluated at `pts` (power tables per variable provided)
std::vector<uint64_t> restrictToVar(const Polynomial& p, int var,
                                    const std::vector<std::vector<uint64_t>>& powers) {
    std::vector<uint64_t> out(p.degreeIn(var) + 1, 0);
    for (const auto& t : p.terms()) {
        uint64_t c = intMod(t.coef, kGcdPrime);
        for (int v = 0; v < p.nvars(); ++v) {
            if (v == var || t.exp[v] == 0) continue;
            c = mulMod(c, powers[v][t.exp[v]], kGcdPrime);
        }
        uint64_t& slot = out[t.exp[var]];
        slot = (slot + c) % kGcdPrime;
    }
    return out;
}

// True only when gcd(a, b) is certainly an integer: for every shared
// variable, a univariate restriction with non-vanishing leading coefficient
// has a constant gcd mod p, which bounds the true gcd's degree by zero.
bool certainlyCoprime(const Polynomial& a, const Polynomial& b) {
    const int nv = a.nvars();
    std::vector<char> open; // variables not yet proven absent from the gcd
    for (int v = 0; v < nv; ++v)
        if (a.degreeIn(v) > 0 && b.degreeIn(v) > 0) open.push_back(static_cast<char>(v));
    if (open.empty()) return true;

    int maxDeg = 1;
    for (const auto& t : a.terms())
        for (int32_t e : t.exp) maxDeg = std::max(maxDeg, static_cast<int>(e));
    for (const auto& t : b.terms())
        for (int32_t e : t.exp) maxDeg = std::max(maxDeg, static_cast<int>(e));

    uint64_t seed = 0xc0ffee ^ (static_cast<uint64_t>(nv) << 32);
    for (int trial = 0; trial < 3 && !open.empty(); ++trial) {
        // fixed pseudo-random evaluation points; power tables per variable
        std::vector<std::vector<uint64_t>> powers(nv);
        for (int v = 0; v < nv; ++v) {
            uint64_t x = 2 + splitmixStep(seed) % (kGcdPrime - 3);
            powers[v].resize(maxDeg + 1);
            powers[v][0] = 1;
            for (int d = 1; d <= maxDeg; ++d)
                powers[v][d] = mulMod(powers[v][d - 1], x, kGcdPrime);
        }
        std::vector<char> still;
        for (char vc : open) {
            int v = vc;
            std::vector<uint64_t> ua = restrictToVar(a, v, powers);
            std::vector<uint64_t> ub = restrictToVar(b, v, powers);
            // the reduction is valid when a leading coefficient survives
            bool valid = (ua.back() != 0 && static_cast<int>(ua.size()) - 1 == a.degreeIn(v)) ||
                         (ub.back() != 0 && static_cast<int>(ub.size()) - 1 == b.degreeIn(v));
            if (valid && uniGcdDegree(std::move(ua), std::move(ub)) <= 0) continue;
            still.push_back(vc);
        }
        open = std::move(still);
    }
    return open.empty();
}

} // namespace

namespace {

// View of p as a univariate polynomial in `var` with Polynomial coefficients
// (the coefficients have exponent 0 in `var`).
std::vector<Polynomial> coeffsIn(const Polynomial& p, int var) {
    int d = p.degreeIn(var);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : p.terms()) {
        Term s = t;
        int e = s.exp[var];
        s.exp[var] = 0;
        buckets[e].push_back(std::move(s));
    }
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (auto& b : buckets) out.push_back(Polynomial::fromTerms(p.nvars(), std::move(b)));
    return out;
}

Polynomial assembleIn(const std::vector<Polynomial>& cs, int var) {
    if (cs.empty()) return Polynomial();
    std::vector<Term> terms;
    for (size_t e = 0; e < cs.size(); ++e) {
        for (const auto& t : cs[e].terms()) {
            Term s = t;
            s.exp[var] += static_cast<int32_t>(e);
            terms.push_back(std::move(s));
        }
    }
    return Polynomial::fromTerms(cs[0].nvars(), std::move(terms));
}

int degIn(const std::vector<Polynomial>& cs) {
    for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
        if (!cs[d].isZero()) return d;
    return -1;
}

void trimIn(std::vector<Polynomial>& cs) {
    while (!cs.empty() && cs.back().isZero()) cs.pop_back();
}

// r := lc(b) * r - lc(r) * b * x^(dr-db); one reduction step of pseudo-division.
void pseudoStep(std::vector<Polynomial>& r, const std::vector<Polynomial>& b) {
    int dr = static_cast<int>(r.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    const Polynomial& lr = r[dr];
    const Polynomial& lb = b[db];
    std::vector<Polynomial> out(std::max(dr, 0));
    out.resize(dr); // dropping the leading term
    for (int i = 0; i < dr; ++i) {
        Polynomial v = r[i] * lb;
        int j = i - (dr - db);
        if (j >= 0 && j < db) v = v - lr * b[j];
        out[i] = std::move(v);
    }
    r = std::move(out);
    trimIn(r);
}

Polynomial gcdList(const std::vector<Polynomial>& ps);
Polynomial gcdFull(const Polynomial& a, const Polynomial& b);

// gcd of two nonzero primitive inputs, recursive over used variables.
Polynomial gcdInner(Polynomial a, Polynomial b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a == b) return a;

    int nv = a.nvars();
    int mainVar = -1;
    for (int v = 0; v < nv && mainVar < 0; ++v)
        if (a.degreeIn(v) > 0 || b.degreeIn(v) > 0) mainVar = v;
    if (mainVar < 0) return Polynomial::constant(nv, 1); // both constants, primitive

    if (a.degreeIn(mainVar) == 0 || b.degreeIn(mainVar) == 0) {
        // One input is free of the main variable: gcd divides that input's
        // coefficient gcd in the other's coefficient ring.
        auto ca = coeffsIn(a, mainVar);
        auto cb = coeffsIn(b, mainVar);
        std::vector<Polynomial> all;
        all.insert(all.end(), ca.begin(), ca.end());
        all.insert(all.end(), cb.begin(), cb.end());
        return gcdList(all);
    }

    auto ca = coeffsIn(a, mainVar);
    auto cb = coeffsIn(b, mainVar);
    Polynomial contA = gcdList(ca);
    Polynomial contB = gcdList(cb);
    Polynomial cont = gcdFull(contA, contB).primitivePart();

    auto divOut = [&](std::vector<Polynomial>& cs, const Polynomial& g) {
        for (auto& c : cs) {
            if (c.isZero()) continue;
            auto q = c.dividedBy(g);
            assert(q.has_value());
            c = std::move(*q);
        }
    };
    divOut(ca, contA);
    divOut(cb, contB);

    std::vector<Polynomial>* u = &ca;
    std::vector<Polynomial>* v = &cb;
    if (degIn(*u) < degIn(*v)) std::swap(u, v);
    while (true) {
        // pseudo-remainder of u by v
        std::vector<Polynomial> r = *u;
        while (degIn(r) >= degIn(*v) && degIn(r) >= 0) pseudoStep(r, *v);
        if (degIn(r) < 0) break;
        // primitive part of r w.r.t. main variable
        Polynomial rc = gcdList(r);
        divOut(r, rc);
        *u = std::move(*v);
        *v = std::move(r);
    }
    Polynomial g = assembleIn(*v, mainVar).primitivePart();
    return (g * cont).primitivePart();
}

// Full gcd of two polynomials (integer content included), positive leading.
Polynomial gcdFull(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() && b.isZero()) return Polynomial(a.nvars());
    if (a.isZero()) return b.primitivePart().mulMonomial(ExpVec(b.nvars(), 0), b.content());
    if (b.isZero()) return a.primitivePart().mulMonomial(ExpVec(a.nvars(), 0), a.content());
    Int ic = intGcd(a.content(), b.content());
    // the remainder sequence is the expensive path exactly when both inputs
    // are large; a modular certificate settles the (dominant) coprime case
    if (a.termCount() >= 12 && b.termCount() >= 12 && certainlyCoprime(a, b))
        return Polynomial::constant(a.nvars(), ic);
    Polynomial g = gcdInner(a.primitivePart(), b.primitivePart());
    return g.mulMonomial(ExpVec(a.nvars(), 0), ic);
}

// Full gcd of a list; zero polynomial when all entries are zero.
Polynomial gcdList(const std::vector<Polynomial>& ps) {
    Polynomial g;
    bool started = false;
    for (const auto& p : ps) {
        if (p.isZero()) continue;
        if (!started) {
            g = p.primitivePart().mulMonomial(ExpVec(p.nvars(), 0), p.content());
            started = true;
        } else {
            g = gcdFull(g, p);
        }
        if (g.isOne()) break;
    }
    if (!started) return Polynomial();
    return g;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("mismatched indeterminate counts");
    if (a.isZero() && b.isZero()) throw UndefinedInputError("gcd(0, 0) is undefined");
    return gcdFull(a, b);
}

} // namespace xpat
