#include "xpat/exchange_matrix.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

namespace xpat {

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::optional<std::vector<int64_t>> findSkewSymmetrizer(const IntMatrix& b) {
    const int n = b.n;
    for (int i = 0; i < n; ++i) {
        if (b.at(i, i) != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            bool zi = b.at(i, j) == 0, zj = b.at(j, i) == 0;
            if (zi != zj) return std::nullopt;
            if (!zi && i != j && (b.at(i, j) > 0) == (b.at(j, i) > 0)) return std::nullopt;
        }
    }
    // assign rational weights per connected component: d_j/d_i = |b_ij|/|b_ji|
    std::vector<Rat> w(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        w[s] = 1;
        std::queue<int> q;
        q.push(s);
        std::vector<int> members{s};
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                if (i == j || b.at(i, j) == 0) continue;
                Rat wj = w[i] * Rat(static_cast<long>(std::llabs(b.at(i, j)))) / Rat(static_cast<long>(std::llabs(b.at(j, i))));
                wj.canonicalize();
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    w[j] = wj;
                    members.push_back(j);
                    q.push(j);
                } else if (w[j] != wj) {
                    return std::nullopt; // inconsistent cycle
                }
            }
        }
        // scale the component to minimal positive integers
        Int l = 1;
        for (int m : members) {
            Int den = w[m].get_den();
            l = l / intGcd(l, den) * den;
        }
        Int g = 0;
        for (int m : members) {
            w[m] *= Rat(l);
            w[m].canonicalize();
            g = intGcd(g, w[m].get_num());
        }
        for (int m : members) {
            w[m] /= Rat(g);
            w[m].canonicalize();
        }
        ++ncomp;
    }
    std::vector<int64_t> d(n);
    for (int i = 0; i < n; ++i) {
        assert(w[i].get_den() == 1);
        if (!w[i].get_num().fits_slong_p()) return std::nullopt;
        d[i] = w[i].get_num().get_si();
    }
    // verify
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i] * b.at(i, j) != -d[j] * b.at(j, i)) return std::nullopt;
    return d;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b) {
    auto d = findSkewSymmetrizer(b);
    if (!d) throw UndefinedInputError("matrix is not skew-symmetrizable");
    b_ = std::move(b);
    d_ = std::move(*d);
}

ExchangeMatrix::ExchangeMatrix(IntMatrix b, std::vector<int64_t> d) : b_(std::move(b)), d_(std::move(d)) {
    for (int i = 0; i < b_.n; ++i)
        for (int j = 0; j < b_.n; ++j)
            if (d_[i] * b_.at(i, j) != -d_[j] * b_.at(j, i))
                throw UndefinedInputError("invalid skew-symmetrizer witness");
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const {
    const int n = b_.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int64_t v = b_.at(i, j);
            if (i == k || j == k) {
                r.at(i, j) = -v;
            } else if (b_.at(i, k) * b_.at(k, j) > 0) {
                r.at(i, j) = v + b_.at(i, k) * std::llabs(b_.at(k, j));
            } else {
                r.at(i, j) = v;
            }
        }
    }
    ExchangeMatrix m;
    m.b_ = std::move(r);
    m.d_ = d_; // mutation preserves the witness
    return m;
}

IntMatrix ExchangeMatrix::cartanCounterpart() const {
    const int n = b_.n;
    IntMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = i == j ? 2 : -std::llabs(b_.at(i, j));
    return a;
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<int>& perm) const {
    const int n = b_.n;
    IntMatrix r(n);
    std::vector<int64_t> d(n);
    for (int i = 0; i < n; ++i) {
        d[i] = d_[perm[i]];
        for (int j = 0; j < n; ++j) r.at(i, j) = b_.at(perm[i], perm[j]);
    }
    ExchangeMatrix m;
    m.b_ = std::move(r);
    m.d_ = std::move(d);
    return m;
}

} // namespace xpat
