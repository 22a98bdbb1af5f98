// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// The two hours-scale universal runs (E7, E8) only execute when the
// environment variable XPAT_ALLOW_LONG is set; otherwise that criterion is
// evaluated on the remaining types and the long runs are reported as skipped.

#include "xpat/bijection.hpp"
#include "xpat/explorer.hpp"
#include "xpat/geometric.hpp"
#include "xpat/json_io.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

using namespace xpat;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << criterion << " (" << what
              << "): " << detail << std::endl;
    if (!pass) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

ExploreLimits defaultLimits() {
    ExploreLimits lim;
    lim.threads = 2;
    lim.storeRepresentatives = false;
    return lim;
}

// ---------------------------------------------------------------------- 1, 2

struct CountCase {
    DynkinType t;
    int n;
    size_t expect;
};

void criterionCounts(int num, CoefficientChoice coeffs, const std::vector<CountCase>& cases,
                     const char* label) {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        size_t got = countXVars(c.t, c.n, coeffs, defaultLimits());
        bool ok = got == c.expect;
        pass = pass && ok;
        detail << dynkinTypeChar(c.t) << c.n << "=" << got;
        if (!ok) detail << "(want " << c.expect << ")";
        detail << " ";
    }
    bool allowLong = std::getenv("XPAT_ALLOW_LONG") != nullptr;
    if (coeffs == CoefficientChoice::Universal) {
        if (allowLong) {
            for (auto [n, expect] : std::vector<std::pair<int, size_t>>{{7, 2100}, {8, 6240}}) {
                size_t got = countXVars(DynkinType::E, n, coeffs, defaultLimits());
                bool ok = got == expect;
                pass = pass && ok;
                detail << "E" << n << "=" << got;
                if (!ok) detail << "(want " << expect << ")";
                detail << " ";
            }
        } else {
            detail << "[E7,E8 skipped; set XPAT_ALLOW_LONG] ";
        }
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(num, label, pass, detail.str());
}

// ------------------------------------------------------------------------- 3

void criterion3() {
    Timer timer;
    IntMatrix m(3);
    m.at(0, 1) = 1;
    m.at(1, 0) = -1;
    m.at(1, 2) = 1;
    m.at(2, 1) = -1;
    ExchangeMatrix B(std::move(m));

    RationalFunction x1 = RationalFunction::variable(3, 0);
    RationalFunction x2 = RationalFunction::variable(3, 1);
    RationalFunction x3 = RationalFunction::variable(3, 2);
    RationalFunction one = RationalFunction::one(3);

    // S2 = ((x1,x2,x3), B): mu_1 gives (1/x1, x1 x2/(1+x1), x3)
    XSeed s2 = universalXSeed(B);
    XSeed m2 = mutateX(s2, 0);
    bool step2 = m2.x[0].rf() == x1.inverse() && m2.x[1].rf() == x1 * x2 / (one + x1) &&
                 m2.x[2].rf() == x3;

    // S1 = ((1/x2, x1/x3, x2), B): mu_1 gives (x2, x1/(x3(1+x2)), x2)
    XSeed s1;
    s1.B = B;
    s1.x = {SemifieldValue::universal(x2.inverse()), SemifieldValue::universal(x1 / x3),
            SemifieldValue::universal(x2)};
    XSeed m1 = mutateX(s1, 0);
    bool step1 = m1.x[0].rf() == x2 && m1.x[1].rf() == x1 / (x3 * (one + x2)) &&
                 m1.x[2].rf() == x2;

    size_t c2 = explore(s2, defaultLimits()).xvars.size();
    size_t c1 = explore(s1, defaultLimits()).xvars.size();

    bool pass = step1 && step2 && c2 == 30 && c1 == 18;
    std::ostringstream detail;
    detail << "|X(S2)|=" << c2 << " |X(S1)|=" << c1 << " one-step mutations "
           << (step1 && step2 ? "exact" : "WRONG") << " (" << static_cast<int>(timer.secs())
           << "s)";
    report(3, "degenerate-seed example", pass, detail.str());
}

// ------------------------------------------------------------------------- 4

void criterion4() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    auto checkP = [&](MarkedPolygon P) {
        size_t got = enumerateQuadrilaterals(P).size();
        size_t want = 2 * static_cast<size_t>(closedFormQuadCount(P));
        if (got != want) {
            pass = false;
            detail << P.str() << "=" << got << "(want " << want << ") ";
        } else {
            detail << P.str() << "=" << got << " ";
        }
    };
    for (int n = 1; n <= 6; ++n) checkP({PolyKind::Plain, n + 3});
    for (int n = 3; n <= 6; ++n) checkP({PolyKind::Punctured, n});
    for (int n = 2; n <= 4; ++n) checkP({PolyKind::FoldedPlain, 2 * n + 2});
    for (int n = 2; n <= 4; ++n) checkP({PolyKind::FoldedPunctured, n + 1});

    // half-disk decomposition of the plain (2n+2)-gon quadrilaterals
    for (int n = 2; n <= 4; ++n) {
        const int M = 2 * n + 2;
        long long q1 = 0, q2 = 0, fixed = 0;
        std::vector<int> idx(4);
        for (idx[0] = 1; idx[0] <= M; ++idx[0])
            for (idx[1] = idx[0] + 1; idx[1] <= M; ++idx[1])
                for (idx[2] = idx[1] + 1; idx[2] <= M; ++idx[2])
                    for (idx[3] = idx[2] + 1; idx[3] <= M; ++idx[3]) {
                        std::set<int> s(idx.begin(), idx.end());
                        bool isFixed = true;
                        for (int v : idx) isFixed = isFixed && s.count((v - 1 + n + 1) % M + 1);
                        if (isFixed) {
                            ++fixed;
                            continue;
                        }
                        bool inHalf = false;
                        for (int start = 1; start <= M && !inHalf; ++start) {
                            bool all = true;
                            for (int v : idx) all = all && (v - start + M) % M <= n + 1;
                            inHalf = all;
                        }
                        (inHalf ? q1 : q2)++;
                    }
        long long expectQ1 = (binomial(M, 4) - binomial(n + 1, 2)) / 2;
        bool ok = q1 == expectQ1 && q2 == q1 && fixed == binomial(n + 1, 2);
        pass = pass && ok;
        detail << "C" << n << ":|Q1|=" << q1 << (ok ? " " : "(MISMATCH) ");
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(4, "quadrilateral counts", pass, detail.str());
}

// ------------------------------------------------------------------------- 5

void criterion5() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::pair<DynkinType, int>> cases = {
        {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4}, {DynkinType::A, 5},
        {DynkinType::B, 2}, {DynkinType::B, 3}, {DynkinType::C, 2}, {DynkinType::C, 3},
        {DynkinType::D, 4}, {DynkinType::D, 5}};
    for (auto [t, n] : cases) {
        BijectionReport r = verifyBijection(t, n);
        pass = pass && r.ok;
        detail << dynkinTypeChar(t) << n << (r.ok ? "" : "(FAIL:" + r.failure + ")") << "="
               << r.quadKeys << " ";
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(5, "bijection single-valuedness/injectivity/inverses", pass, detail.str());
}

// ------------------------------------------------------------------------- 6

ExchangeMatrix acceptanceDynkin(std::mt19937& rng) {
    static const std::vector<std::pair<DynkinType, int>> kTypes = {
        {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4}, {DynkinType::B, 2},
        {DynkinType::B, 3}, {DynkinType::C, 2}, {DynkinType::C, 3}, {DynkinType::D, 4},
        {DynkinType::F, 4}, {DynkinType::G, 2}};
    auto [t, n] = kTypes[rng() % kTypes.size()];
    return dynkinInitialMatrix(t, n);
}

void criterion6() {
    Timer timer;
    std::ostringstream detail;
    std::mt19937 rng(20260808);
    size_t checks = 0;
    bool pass = true;
    auto expect = [&](bool ok, const char* what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail << "first failure: " << what << " ";
        }
    };

    // involutivity: 1000 random cases per mutation kind
    for (int it = 0; it < 1000; ++it) {
        ExchangeMatrix B = acceptanceDynkin(rng);
        int n = B.rank();
        int k = static_cast<int>(rng() % n);
        expect(B.mutated(k).mutated(k).matrix() == B.matrix(), "matrix involution");
    }
    for (int it = 0; it < 1000; ++it) {
        ExchangeMatrix B = acceptanceDynkin(rng);
        int n = B.rank();
        XSeed s = (it % 2) ? universalXSeed(B) : principalXSeed(B);
        for (int w = 0; w < 2; ++w) s = mutateX(s, static_cast<int>(rng() % n));
        int k = static_cast<int>(rng() % n);
        XSeed ss = mutateX(mutateX(s, k), k);
        expect(ss.x == s.x && ss.B.matrix() == s.B.matrix(), "x-mutation involution");
    }
    for (int it = 0; it < 1000; ++it) {
        ExchangeMatrix B = dynkinInitialMatrix(it % 2 ? DynkinType::A : DynkinType::B,
                                               2 + it % 2);
        int n = B.rank();
        ASeed s = it % 3 == 0   ? coefficientFreeASeed(B)
                  : it % 3 == 1 ? principalASeed(B)
                                : universalASeed(B);
        s = mutateA(s, static_cast<int>(rng() % n));
        int k = static_cast<int>(rng() % n);
        ASeed ss = mutateA(mutateA(s, k), k);
        expect(ss.a == s.a && ss.x == s.x && ss.B.matrix() == s.B.matrix(),
               "a-mutation involution");
    }

    // hat commutation
    for (int it = 0; it < 200; ++it) {
        ExchangeMatrix B = dynkinInitialMatrix(it % 2 ? DynkinType::A : DynkinType::C,
                                               2 + it % 2);
        int n = B.rank();
        ASeed s = universalASeed(B);
        for (int w = 0; w < 2; ++w) s = mutateA(s, static_cast<int>(rng() % n));
        int k = static_cast<int>(rng() % n);
        XSeed lhs = hatSeed(mutateA(s, k));
        XSeed rhs = mutateX(hatSeed(s), k);
        expect(lhs.x == rhs.x && lhs.B.matrix() == rhs.B.matrix(), "hat commutation");
    }

    // flip/matrix-mutation commutation over entire flip graphs
    for (MarkedPolygon P : {MarkedPolygon{PolyKind::Plain, 6},
                            MarkedPolygon{PolyKind::Punctured, 4},
                            MarkedPolygon{PolyKind::FoldedPlain, 8},
                            MarkedPolygon{PolyKind::FoldedPunctured, 4}}) {
        for (const Triangulation& T : enumerateTriangulations(P)) {
            ExchangeMatrix B = exchangeMatrix(T);
            for (int k = 0; k < static_cast<int>(T.slots.size()); ++k)
                expect(exchangeMatrix(flipArc(T, k).T).matrix() == B.mutated(k).matrix(),
                       "flip/matrix commutation");
        }
    }

    // semifield axioms on sampled canonical values
    {
        RationalFunction x = RationalFunction::variable(2, 0);
        RationalFunction y = RationalFunction::variable(2, 1);
        std::vector<SemifieldValue> pool = {
            SemifieldValue::universal(x), SemifieldValue::universal(y),
            SemifieldValue::universal((x + y) / (x * y)),
            SemifieldValue::universal(x * x / (x + y)),
            SemifieldValue::universal(RationalFunction::constant(2, Rat(3, 7)))};
        for (int it = 0; it < 300; ++it) {
            const auto& a = pool[rng() % pool.size()];
            const auto& b = pool[rng() % pool.size()];
            const auto& c = pool[rng() % pool.size()];
            expect(a.oplus(b) == b.oplus(a), "oplus commutative");
            expect(a.oplus(b).oplus(c) == a.oplus(b.oplus(c)), "oplus associative");
            expect(a.mul(b.oplus(c)) == a.mul(b).oplus(a.mul(c)), "distributivity");
        }
        for (int it = 0; it < 300; ++it) {
            LaurentMonomial a{{static_cast<int64_t>(rng() % 7) - 3,
                               static_cast<int64_t>(rng() % 7) - 3}};
            LaurentMonomial b{{static_cast<int64_t>(rng() % 7) - 3,
                               static_cast<int64_t>(rng() % 7) - 3}};
            LaurentMonomial c{{static_cast<int64_t>(rng() % 7) - 3,
                               static_cast<int64_t>(rng() % 7) - 3}};
            SemifieldValue ta = SemifieldValue::tropical(a);
            SemifieldValue tb = SemifieldValue::tropical(b);
            SemifieldValue tc = SemifieldValue::tropical(c);
            expect(ta.oplus(tb) == tb.oplus(ta), "tropical oplus commutative");
            expect(ta.mul(tb.oplus(tc)) == ta.mul(tb).oplus(ta.mul(tc)),
                   "tropical distributivity");
        }
    }

    // positivity of universal X-variables at positive points
    {
        ExchangeGraph g = explore(universalXSeed(dynkinInitialMatrix(DynkinType::B, 3)));
        std::vector<Rat> pt = {Rat(2, 3), Rat(5, 2), Rat(7, 4)};
        for (const auto& v : g.xvars) {
            auto val = v.rf().evaluate(pt);
            expect(val.has_value() && *val > 0, "positivity at positive points");
        }
    }

    // Remark 4.4 locality
    for (int it = 0; it < 500; ++it) {
        ExchangeMatrix B = acceptanceDynkin(rng);
        int n = B.rank();
        XSeed s = universalXSeed(B);
        for (int w = 0; w < 2; ++w) s = mutateX(s, static_cast<int>(rng() % n));
        int k = static_cast<int>(rng() % n);
        XSeed m = mutateX(s, k);
        for (int j = 0; j < n; ++j) {
            if (j == k || s.B.at(k, j) != 0) continue;
            expect(m.x[j] == s.x[j], "locality of x_j");
            for (int i = 0; i < n; ++i) {
                if (i == k || i == j) continue;
                expect(m.B.at(i, j) == s.B.at(i, j) && m.B.at(j, i) == s.B.at(j, i),
                       "locality of row/column j");
            }
        }
    }

    std::ostringstream d2;
    d2 << checks << " property checks, " << (pass ? "all passed" : detail.str()) << " ("
       << static_cast<int>(timer.secs()) << "s)";
    report(6, "property suites", pass, d2.str());
}

// ------------------------------------------------------------------------- 7

void criterion7() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::pair<DynkinType, int>> cases = {
        {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4}, {DynkinType::B, 2},
        {DynkinType::B, 3}, {DynkinType::C, 2}, {DynkinType::C, 3}, {DynkinType::D, 4},
        {DynkinType::G, 2}};
    for (auto [t, n] : cases) {
        PairCensus c = exchangeablePairs(t, n, defaultLimits());
        size_t expect = countXVars(t, n, CoefficientChoice::Universal, defaultLimits());
        bool ok = c.ordered == expect && c.ordered == 2 * c.unordered;
        pass = pass && ok;
        detail << dynkinTypeChar(t) << n << "=" << c.ordered;
        if (!ok) detail << "(want " << expect << ")";
        detail << " ";
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(7, "exchangeable-pair counts", pass, detail.str());
}

// ------------------------------------------------------------------------- 8

void criterion8() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (auto [t, n] : std::vector<std::pair<DynkinType, int>>{
             {DynkinType::A, 3}, {DynkinType::B, 3}, {DynkinType::D, 4}}) {
        ExchangeMatrix B = dynkinInitialMatrix(t, n);
        ExploreLimits lim;
        lim.threads = 2;
        ExchangeGraph ga = explore(coefficientFreeASeed(B), lim);
        ExchangeGraph gx = explore(universalXSeed(B), lim);
        bool ok = graphsIsomorphic(ga, gx) && ga.nodes.size() == gx.nodes.size() &&
                  ga.edges.size() == gx.edges.size();
        pass = pass && ok;
        detail << dynkinTypeChar(t) << n << (ok ? "=coincide " : "=DIFFER ");
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(8, "exchange-graph coincidence", pass, detail.str());
}

// ------------------------------------------------------------------------- 9

void criterion9() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (auto [t, n] : std::vector<std::pair<DynkinType, int>>{{DynkinType::A, 3},
                                                               {DynkinType::A, 4},
                                                               {DynkinType::B, 3},
                                                               {DynkinType::C, 3},
                                                               {DynkinType::D, 4}}) {
        DistinctnessReport r = verifyDistinctness(t, n, 100, 20240811);
        pass = pass && r.ok;
        detail << dynkinTypeChar(t) << n << ":" << r.separated << "/" << r.pairsTotal
               << (r.ok ? " " : "(FAIL) ");
    }
    detail << "(" << static_cast<int>(timer.secs()) << "s)";
    report(9, "geometric distinctness", pass, detail.str());
}

} // namespace

int main() {
    criterionCounts(1, CoefficientChoice::Universal,
                    {{DynkinType::A, 2, 10},
                     {DynkinType::A, 3, 30},
                     {DynkinType::A, 4, 70},
                     {DynkinType::A, 5, 140},
                     {DynkinType::A, 6, 252},
                     {DynkinType::B, 2, 12},
                     {DynkinType::B, 3, 44},
                     {DynkinType::B, 4, 120},
                     {DynkinType::C, 2, 12},
                     {DynkinType::C, 3, 44},
                     {DynkinType::C, 4, 120},
                     {DynkinType::D, 4, 104},
                     {DynkinType::D, 5, 260},
                     {DynkinType::G, 2, 16},
                     {DynkinType::F, 4, 196},
                     {DynkinType::E, 6, 770}},
                    "Table 1 universal counts");
    criterionCounts(2, CoefficientChoice::Principal,
                    {{DynkinType::A, 2, 6},
                     {DynkinType::A, 3, 12},
                     {DynkinType::A, 4, 20},
                     {DynkinType::A, 5, 30},
                     {DynkinType::A, 6, 42},
                     {DynkinType::B, 2, 8},
                     {DynkinType::B, 3, 18},
                     {DynkinType::B, 4, 32},
                     {DynkinType::C, 2, 8},
                     {DynkinType::C, 3, 18},
                     {DynkinType::C, 4, 32},
                     {DynkinType::D, 4, 24},
                     {DynkinType::D, 5, 40},
                     {DynkinType::G, 2, 12},
                     {DynkinType::F, 4, 48},
                     {DynkinType::E, 6, 72},
                     {DynkinType::E, 7, 126},
                     {DynkinType::E, 8, 240}},
                    "Table 1 principal counts");
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    if (failures == 0) {
        std::cout << "ACCEPTANCE: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
