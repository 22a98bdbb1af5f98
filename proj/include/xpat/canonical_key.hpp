#pragma once

#include "xpat/seed.hpp"

#include <string>
#include <vector>

namespace xpat {

// Byte-encoding helpers used for canonical keys (order-preserving, injective).
void appendU8(std::string& s, uint8_t v);
void appendI64(std::string& s, int64_t v); // big-endian, sign-biased
void appendSized(std::string& s, const std::string& v);
void appendValueBytes(std::string& s, const SemifieldValue& v);
void appendRFBytes(std::string& s, const RationalFunction& v);
void appendPolyBytes(std::string& s, const Polynomial& p);

std::string toHex(const std::string& bytes);

// Canonical key input: per-index opaque slot codes (injective encodings of
// the cluster entries at that index) plus the exchange matrix.
struct SeedKeyView {
    int n = 0;
    const ExchangeMatrix* B = nullptr;
    std::vector<std::string> slotCodes;
};

// Minimum over all simultaneous index permutations of a deterministic byte
// encoding. Two views produce equal keys iff they are related by a
// simultaneous relabeling. Throws CapabilityError above the rank bound.
std::string minimizeSeedKey(const SeedKeyView& view, int rankBound = 9);

// Keys for labeled seeds up to simultaneous relabeling.
std::string canonicalKey(const XSeed& s, int rankBound = 9);
std::string canonicalKey(const ASeed& s, int rankBound = 9);

} // namespace xpat
