#pragma once

#include "xpat/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xpat {

struct IntMatrix {
    int n = 0;
    std::vector<int64_t> a; // row-major

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
    int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
    std::string str() const;
};

// Positive integer diagonal D with D*B skew-symmetric, minimal per connected
// component; nullopt when B is not skew-symmetrizable.
std::optional<std::vector<int64_t>> findSkewSymmetrizer(const IntMatrix& b);

// Skew-symmetrizable integer matrix together with a symmetrizer witness.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    // Validates; throws UndefinedInputError when not skew-symmetrizable.
    explicit ExchangeMatrix(IntMatrix b);
    ExchangeMatrix(IntMatrix b, std::vector<int64_t> d);

    int rank() const { return b_.n; }
    int64_t at(int i, int j) const { return b_.at(i, j); }
    const IntMatrix& matrix() const { return b_; }
    const std::vector<int64_t>& symmetrizer() const { return d_; }

    // Matrix mutation in direction k (0-based); involutive, same witness D.
    ExchangeMatrix mutated(int k) const;

    // a_ii = 2, a_ij = -|b_ij|.
    IntMatrix cartanCounterpart() const;

    bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    ExchangeMatrix permuted(const std::vector<int>& perm) const;

private:
    IntMatrix b_;
    std::vector<int64_t> d_;
};

} // namespace xpat
