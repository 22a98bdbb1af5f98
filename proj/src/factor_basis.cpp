#include "xpat/factor_basis.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace xpat {

namespace {

// Fixed 62-bit prime for fingerprinting.
constexpr uint64_t kPrime = 4611686018427387847ULL; // 2^62 - 57

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

FactorExps mergeExps(const FactorExps& a, const FactorExps& b, int bScale) {
    FactorExps r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            r.push_back({b[j].first, b[j].second * bScale});
            ++j;
        } else {
            int e = a[i].second + b[j].second * bScale;
            if (e != 0) r.push_back({a[i].first, e});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].first, b[j].second * bScale});
    return r;
}

FactorExps scaleExps(const FactorExps& a, int s) {
    if (s == 0) return {};
    FactorExps r = a;
    for (auto& [id, e] : r) e *= s;
    return r;
}

FactorBasis::FactorBasis(int nvars) : nvars_(nvars), prime_(kPrime) {
    uint64_t seed = 0x5eedba5e + static_cast<uint64_t>(nvars) * 7919;
    evalPoint_.resize(nvars);
    for (int i = 0; i < nvars; ++i)
        evalPoint_[i] = 2 + splitmix64(seed) % (prime_ - 3);
}

int FactorBasis::newNode(Polynomial p) {
    Node n;
    n.fp = p.evalMod(evalPoint_, prime_);
    n.p = std::move(p);
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

namespace {

// restriction along the line x_i = alpha_i t over F_p; a ring homomorphism,
// so divisibility failures of the restrictions certainly reject divisors
std::vector<uint64_t> lineRestriction(const Polynomial& p,
                                      const std::vector<std::vector<uint64_t>>& powers,
                                      uint64_t prime) {
    std::vector<uint64_t> out(std::max<int64_t>(p.totalDegree(), 0) + 1, 0);
    for (const auto& t : p.terms()) {
        uint64_t c = intMod(t.coef, prime);
        int64_t d = 0;
        for (int v = 0; v < p.nvars(); ++v) {
            if (!t.exp[v]) continue;
            c = mulMod(c, powers[v][t.exp[v]], prime);
            d += t.exp[v];
        }
        out[d] = (out[d] + c) % prime;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// remainder of a by b over F_p is nonzero (b nonzero)
bool uniRemainderNonzero(std::vector<uint64_t> a, const std::vector<uint64_t>& b,
                         uint64_t prime) {
    const int db = static_cast<int>(b.size()) - 1;
    uint64_t inv = invMod(b.back(), prime);
    int da = static_cast<int>(a.size()) - 1;
    while (da >= 0 && a[da] == 0) --da;
    while (da >= db) {
        uint64_t c = mulMod(a[da], inv, prime);
        if (c) {
            for (int t = 0; t <= db; ++t) {
                uint64_t sub = mulMod(c, b[t], prime);
                uint64_t& slot = a[t + da - db];
                slot = (slot + prime - sub) % prime;
            }
        }
        --da;
        while (da >= 0 && a[da] == 0) --da;
    }
    return da >= 0;
}

} // namespace

FactorBasis::Partial FactorBasis::reducePartial(const Polynomial& p,
                                                const std::vector<int>* skipIds) const {
    if (p.isZero()) throw UndefinedInputError("cannot factor the zero polynomial");
    Partial out;
    Int c = p.content();
    if (p.leadingSign() < 0) c = -c;
    out.content = Rat(c);
    Polynomial rest = p.primitivePart();
    int64_t deg = rest.totalDegree();

    // univariate pre-filter, worthwhile once the dividend is large
    const bool useFilter = rest.termCount() >= 64;
    std::vector<std::vector<uint64_t>> powers;
    std::vector<uint64_t> restRes;
    bool restResFresh = false;
    if (useFilter) {
        powers.resize(nvars_);
        int maxDeg = static_cast<int>(deg);
        for (int v = 0; v < nvars_; ++v) {
            uint64_t x = 2 + evalPoint_[v] % (prime_ - 3);
            powers[v].resize(maxDeg + 1);
            powers[v][0] = 1;
            for (int d = 1; d <= maxDeg; ++d)
                powers[v][d] = mulMod(powers[v][d - 1], x, prime_);
        }
    }

    for (int id = 0; id < size() && deg > 0; ++id) {
        if (!isLive(id)) continue;
        if (skipIds && std::binary_search(skipIds->begin(), skipIds->end(), id)) continue;
        const Polynomial& f = nodes_[id].p;
        if (f.totalDegree() > deg) continue;
        if (useFilter && f.totalDegree() > 0) {
            if (!restResFresh) {
                restRes = lineRestriction(rest, powers, prime_);
                restResFresh = true;
            }
            std::vector<uint64_t> fRes = lineRestriction(f, powers, prime_);
            if (!fRes.empty() && !restRes.empty() &&
                uniRemainderNonzero(restRes, fRes, prime_))
                continue; // certainly not a divisor
        }
        int e = 0;
        while (true) {
            auto q = rest.dividedBy(f);
            if (!q) break;
            rest = std::move(*q);
            ++e;
        }
        if (e) {
            out.exps.push_back({id, e});
            deg = rest.totalDegree();
            restResFresh = false;
        }
    }
    out.cofactor = std::move(rest);
    return out;
}

void FactorBasis::refineLeafPair(int i, int j) {
    if (i == j) return;
    Polynomial g = Polynomial::gcd(nodes_[i].p, nodes_[j].p);
    if (g.totalDegree() <= 0) return;
    if (g == nodes_[i].p) {
        auto q = nodes_[j].p.dividedBy(nodes_[i].p);
        assert(q.has_value());
        int idq = newNode(q->primitivePart());
        nodes_[j].child[0] = i;
        nodes_[j].child[1] = idq;
        refineLeafPair(i, idq);
        return;
    }
    if (g == nodes_[j].p) {
        refineLeafPair(j, i);
        return;
    }
    auto qi = nodes_[i].p.dividedBy(g);
    auto qj = nodes_[j].p.dividedBy(g);
    assert(qi && qj);
    int idg = newNode(g.primitivePart());
    int idqi = newNode(qi->primitivePart());
    int idqj = newNode(qj->primitivePart());
    nodes_[i].child[0] = idg;
    nodes_[i].child[1] = idqi;
    nodes_[j].child[0] = idg;
    nodes_[j].child[1] = idqj;
    refineLeafPair(idg, idqi);
    refineLeafPair(idg, idqj);
    refineLeafPair(idqi, idqj);
}

void FactorBasis::addFactored(Polynomial c, int mult, FactorExps& out) {
    // worklist of primitive positive non-constant polynomials
    std::vector<std::pair<Polynomial, int>> work;
    work.push_back({std::move(c), mult});
    FactorExps acc;
    while (!work.empty()) {
        auto [cur, m] = std::move(work.back());
        work.pop_back();
        if (cur.totalDegree() <= 0) continue;
        bool consumed = false;
        for (int id = 0; id < size(); ++id) {
            if (!isLive(id)) continue;
            const Polynomial& f = nodes_[id].p;
            Polynomial g = Polynomial::gcd(cur, f);
            if (g.totalDegree() <= 0) continue;
            if (g == f) {
                int e = 0;
                while (true) {
                    auto q = cur.dividedBy(f);
                    if (!q) break;
                    cur = std::move(*q);
                    ++e;
                }
                assert(e > 0);
                acc.push_back({id, e * m});
                if (cur.totalDegree() <= 0) {
                    consumed = true;
                    break;
                }
                continue;
            }
            // proper split of f into g * (f/g); the children may still share
            // factors with each other, refineLeafPair restores coprimality.
            // cur keeps scanning: the new leaves have larger ids.
            Polynomial fCopy = f;
            auto h = fCopy.dividedBy(g);
            assert(h.has_value());
            int idg = newNode(g.primitivePart());
            int idh = newNode(h->primitivePart());
            nodes_[id].child[0] = idg;
            nodes_[id].child[1] = idh;
            refineLeafPair(idg, idh);
        }
        if (!consumed && cur.totalDegree() > 0) {
            // coprime to every live leaf now
            int id = newNode(cur.primitivePart());
            acc.push_back({id, m});
        }
    }
    for (auto& [id, e] : acc) {
        FactorExps single{{id, e}};
        out = mergeExps(out, pushDown(single));
    }
}

FactorBasis::Reduction FactorBasis::finish(Partial&& pr) {
    Reduction red;
    red.content = std::move(pr.content);
    red.exps = pr.exps;
    if (pr.cofactor.totalDegree() > 0) {
        addFactored(std::move(pr.cofactor), 1, red.exps);
    } else if (!pr.cofactor.isOne() && !pr.cofactor.isZero()) {
        // constant cofactor folds into content (can appear when the partial
        // was computed against an older basis snapshot)
        red.content *= Rat(pr.cofactor.leading().coef);
        red.content.canonicalize();
    }
    red.exps = pushDown(red.exps);
    return red;
}

FactorBasis::Reduction FactorBasis::reduce(const Polynomial& p) {
    Partial pr = reducePartial(p);
    return finish(std::move(pr));
}

FactorExps FactorBasis::pushDown(const FactorExps& exps) const {
    std::map<int, int> acc;
    std::vector<std::pair<int, int>> stack(exps.begin(), exps.end());
    while (!stack.empty()) {
        auto [id, e] = stack.back();
        stack.pop_back();
        if (e == 0) continue;
        if (isLive(id)) {
            acc[id] += e;
        } else {
            stack.push_back({nodes_[id].child[0], e});
            stack.push_back({nodes_[id].child[1], e});
        }
    }
    FactorExps out;
    out.reserve(acc.size());
    for (auto& [id, e] : acc)
        if (e != 0) out.push_back({id, e});
    return out;
}

uint64_t FactorBasis::fingerprint(const Rat& content, const FactorExps& exps) const {
    uint64_t num = intMod(content.get_num(), prime_);
    uint64_t den = intMod(content.get_den(), prime_);
    if (den == 0) return 0;
    uint64_t acc = mulMod(num, invMod(den, prime_), prime_);
    for (const auto& [id, e] : exps) {
        uint64_t f = nodes_[id].fp % prime_;
        if (f == 0) return 0;
        uint64_t p = powMod(f, static_cast<uint64_t>(e < 0 ? -e : e), prime_);
        if (e < 0) p = invMod(p, prime_);
        acc = mulMod(acc, p, prime_);
    }
    return acc;
}

Polynomial FactorBasis::expandPart(const FactorExps& exps, bool positive) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    // multiply smallest factors first
    std::vector<std::pair<int64_t, std::pair<int, int>>> parts;
    for (const auto& [id, e] : exps) {
        if (positive ? e > 0 : e < 0)
            parts.push_back({nodes_[id].p.totalDegree(), {id, e < 0 ? -e : e}});
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [deg, ie] : parts) r = r * nodes_[ie.first].p.pow(ie.second);
    return r;
}

RationalFunction FactorBasis::expand(const Rat& content, const FactorExps& exps) const {
    Polynomial num = expandPart(exps, true);
    Polynomial den = expandPart(exps, false);
    Rat c = content;
    c.canonicalize();
    num = num.mulMonomial(ExpVec(nvars_, 0), Int(c.get_num()));
    den = den.mulMonomial(ExpVec(nvars_, 0), Int(c.get_den()));
    // live leaves are pairwise coprime and the content is canonical, so the
    // fraction is already reduced
    return RationalFunction::fromReduced(std::move(num), std::move(den));
}

} // namespace xpat
