#include "xpat/canonical_key.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace xpat {

void appendU8(std::string& s, uint8_t v) { s.push_back(static_cast<char>(v)); }

void appendI64(std::string& s, int64_t v) {
    uint64_t u = static_cast<uint64_t>(v) + 0x8000000000000000ULL;
    for (int b = 7; b >= 0; --b) s.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
}

void appendSized(std::string& s, const std::string& v) {
    appendI64(s, static_cast<int64_t>(v.size()));
    s += v;
}

void appendPolyBytes(std::string& s, const Polynomial& p) {
    appendI64(s, p.nvars());
    appendI64(s, static_cast<int64_t>(p.termCount()));
    for (const auto& t : p.terms()) {
        for (int32_t e : t.exp) appendI64(s, e);
        appendSized(s, t.coef.get_str(16));
    }
}

void appendRFBytes(std::string& s, const RationalFunction& v) {
    appendPolyBytes(s, v.num());
    appendPolyBytes(s, v.den());
}

void appendValueBytes(std::string& s, const SemifieldValue& v) {
    appendU8(s, static_cast<uint8_t>(v.kind()));
    switch (v.kind()) {
        case SemifieldKind::Universal:
            appendRFBytes(s, v.rf());
            break;
        case SemifieldKind::Tropical:
            appendI64(s, v.mono().k());
            for (int64_t e : v.mono().exps) appendI64(s, e);
            break;
        case SemifieldKind::Trivial:
            break;
    }
}

std::string toHex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

namespace {

std::string indexSignature(const SeedKeyView& view, int i) {
    std::string sig;
    appendSized(sig, view.slotCodes[i]);
    appendI64(sig, view.B->symmetrizer()[i]);
    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int j = 0; j < view.n; ++j) {
        if (j == i) continue;
        pairs.push_back({view.B->at(i, j), view.B->at(j, i)});
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto& [x, y] : pairs) {
        appendI64(sig, x);
        appendI64(sig, y);
    }
    return sig;
}

std::vector<std::string> refineSignatures(const SeedKeyView& view,
                                          const std::vector<std::string>& sig) {
    std::vector<std::string> out(view.n);
    for (int i = 0; i < view.n; ++i) {
        std::string s;
        appendSized(s, sig[i]);
        std::vector<std::string> neigh;
        for (int j = 0; j < view.n; ++j) {
            if (j == i) continue;
            std::string t;
            appendI64(t, view.B->at(i, j));
            appendI64(t, view.B->at(j, i));
            appendSized(t, sig[j]);
            neigh.push_back(std::move(t));
        }
        std::sort(neigh.begin(), neigh.end());
        for (auto& t : neigh) appendSized(s, t);
        out[i] = std::move(s);
    }
    return out;
}

std::string buildKey(const SeedKeyView& view, const std::vector<int>& perm) {
    std::string key;
    appendI64(key, view.n);
    for (int i = 0; i < view.n; ++i) {
        appendSized(key, view.slotCodes[perm[i]]);
        appendI64(key, view.B->symmetrizer()[perm[i]]);
    }
    for (int i = 0; i < view.n; ++i)
        for (int j = 0; j < view.n; ++j) appendI64(key, view.B->at(perm[i], perm[j]));
    return key;
}

} // namespace

std::string minimizeSeedKey(const SeedKeyView& view, int rankBound) {
    const int n = view.n;
    if (n > rankBound)
        throw CapabilityError("rank exceeds canonicalization bound");
    assert(view.B && static_cast<int>(view.slotCodes.size()) == n);

    std::vector<std::string> sig(n);
    for (int i = 0; i < n; ++i) sig[i] = indexSignature(view, i);
    sig = refineSignatures(view, sig);
    sig = refineSignatures(view, sig);

    // order indices by signature; permutations only permute equal signatures
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::sort(base.begin(), base.end(), [&](int a, int b) {
        if (sig[a] != sig[b]) return sig[a] < sig[b];
        return a < b;
    });

    // group boundaries
    std::vector<std::pair<int, int>> groups; // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && sig[base[j]] == sig[base[i]]) ++j;
        groups.push_back({i, j});
        i = j;
    }

    std::string best = buildKey(view, base);
    std::vector<int> perm = base;

    // cartesian product of in-group permutations
    std::vector<std::vector<int>> groupPerms; // flattened index lists per group
    size_t total = 1;
    for (auto [b, e] : groups) {
        size_t f = 1;
        for (int k = 2; k <= e - b; ++k) f *= k;
        total *= f;
        if (total > 4000000) throw CapabilityError("canonicalization search too large");
    }
    if (total == 1) return best;

    // enumerate: for simplicity, recursively permute groups in place
    std::vector<std::vector<int>> groupVals;
    for (auto [b, e] : groups)
        groupVals.push_back(std::vector<int>(base.begin() + b, base.begin() + e));

    std::vector<size_t> idx(groups.size(), 0);
    // iterate over the product of permutations using next_permutation per group
    // (group values start sorted; lexicographic cycling covers all orders)
    for (auto& g : groupVals) std::sort(g.begin(), g.end());
    while (true) {
        // assemble perm
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            auto [b, e] = groups[gi];
            for (int k = b; k < e; ++k) perm[k] = groupVals[gi][k - b];
        }
        std::string key = buildKey(view, perm);
        if (key < best) best = std::move(key);
        // advance odometer
        size_t gi = 0;
        for (; gi < groupVals.size(); ++gi) {
            if (std::next_permutation(groupVals[gi].begin(), groupVals[gi].end())) break;
            // wrapped to sorted order, carry to next group
        }
        if (gi == groupVals.size()) break;
    }
    return best;
}

std::string canonicalKey(const XSeed& s, int rankBound) {
    SeedKeyView v;
    v.n = s.rank();
    v.B = &s.B;
    v.slotCodes.resize(v.n);
    for (int i = 0; i < v.n; ++i) appendValueBytes(v.slotCodes[i], s.x[i]);
    return minimizeSeedKey(v, rankBound);
}

std::string canonicalKey(const ASeed& s, int rankBound) {
    SeedKeyView v;
    v.n = s.rank();
    v.B = &s.B;
    v.slotCodes.resize(v.n);
    for (int i = 0; i < v.n; ++i) {
        appendRFBytes(v.slotCodes[i], s.a[i]);
        appendValueBytes(v.slotCodes[i], s.x[i]);
    }
    return minimizeSeedKey(v, rankBound);
}

} // namespace xpat
