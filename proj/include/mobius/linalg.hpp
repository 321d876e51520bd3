#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mobius/error.hpp"

namespace mobius {

bool is_prime(std::uint64_t n);

// GF(p) for a runtime prime p < 2^31.
class PrimeField {
public:
    using value = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (p >= (1U << 31) || !is_prime(p)) throw BadArgument("characteristic must be a prime below 2^31");
    }

    std::uint32_t characteristic() const { return p_; }
    value zero() const { return 0; }
    value one() const { return 1; }
    value from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<value>(r < 0 ? r + p_ : r);
    }
    bool is_zero(value a) const { return a == 0; }
    value add(value a, value b) const {
        value s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value sub(value a, value b) const { return a >= b ? a - b : a + p_ - b; }
    value neg(value a) const { return a ? p_ - a : 0; }
    value mul(value a, value b) const { return static_cast<value>(std::uint64_t{a} * b % p_); }
    value inv(value a) const;
    // Integer representative in (-p/2, p/2].
    long long to_int(value a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using value = boost::multiprecision::cpp_rational;

    std::uint32_t characteristic() const { return 0; }
    value zero() const { return 0; }
    value one() const { return 1; }
    value from_int(long long x) const { return value(x); }
    bool is_zero(const value& a) const { return a == 0; }
    value add(const value& a, const value& b) const { return a + b; }
    value sub(const value& a, const value& b) const { return a - b; }
    value neg(const value& a) const { return -a; }
    value mul(const value& a, const value& b) const { return a * b; }
    value inv(const value& a) const {
        if (a == 0) throw BadArgument("division by zero");
        return 1 / a;
    }
};

// Sparse vector with strictly increasing indices and nonzero values.
template <class V>
struct SparseVec {
    std::vector<int> idx;
    std::vector<V> val;

    bool empty() const { return idx.empty(); }
    std::size_t size() const { return idx.size(); }
    void push(int i, V v) {
        idx.push_back(i);
        val.push_back(std::move(v));
    }
    bool operator==(const SparseVec&) const = default;
};

// out = a + c * b.
template <class F>
void axpy(const F& f, const SparseVec<typename F::value>& a, const typename F::value& c,
          const SparseVec<typename F::value>& b, SparseVec<typename F::value>& out) {
    out.idx.clear();
    out.val.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a.idx[i] < b.idx[j])) {
            out.push(a.idx[i], a.val[i]);
            ++i;
        } else if (i == a.size() || b.idx[j] < a.idx[i]) {
            out.push(b.idx[j], f.mul(c, b.val[j]));
            ++j;
        } else {
            auto s = f.add(a.val[i], f.mul(c, b.val[j]));
            if (!f.is_zero(s)) out.push(a.idx[i], std::move(s));
            ++i;
            ++j;
        }
    }
}

template <class F>
void scale(const F& f, SparseVec<typename F::value>& v, const typename F::value& c) {
    for (auto& x : v.val) x = f.mul(x, c);
}

// Builds a sparse vector from unsorted (index, value) pairs, summing repeats.
template <class F>
SparseVec<typename F::value> make_sparse(const F& f, std::vector<std::pair<int, typename F::value>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<typename F::value> v;
    for (std::size_t k = 0; k < terms.size();) {
        auto s = f.zero();
        std::size_t l = k;
        for (; l < terms.size() && terms[l].first == terms[k].first; ++l) s = f.add(s, terms[l].second);
        if (!f.is_zero(s)) v.push(terms[k].first, std::move(s));
        k = l;
    }
    return v;
}

// Incremental row echelon form keyed by leading index. With tracking on,
// every stored row remembers the combination of inserted vectors it came
// from, so vectors that reduce to zero yield linear dependencies.
template <class F>
class Echelon {
public:
    using value = typename F::value;
    using Vec = SparseVec<value>;

    explicit Echelon(F field, bool track = false) : f_(std::move(field)), track_(track) {}

    std::size_t rank() const { return rows_.size(); }
    const F& field() const { return f_; }

    // Reduces v; returns true and stores it when independent. `tag` is the
    // index used for v in combinations (tracking mode only).
    bool insert(Vec v, int tag = -1) {
        Vec combo;
        if (track_) combo.push(tag, f_.one());
        reduce(v, combo);
        if (v.empty()) {
            if (track_) dependencies_.push_back(std::move(combo));
            return false;
        }
        const value inv = f_.inv(v.val[0]);
        scale(f_, v, inv);
        if (track_) scale(f_, combo, inv);
        pivot_.emplace(v.idx[0], static_cast<int>(rows_.size()));
        rows_.push_back(std::move(v));
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }

    // True when v lies in the span.
    bool contains(Vec v) const {
        Vec combo;
        reduce_impl(v, combo, false);
        return v.empty();
    }

    Vec reduced(Vec v) const {
        Vec combo;
        reduce_impl(v, combo, false);
        return v;
    }

    // Combinations (over tags) of inserted vectors that vanish.
    const std::vector<Vec>& dependencies() const { return dependencies_; }
    std::vector<Vec> take_dependencies() { return std::move(dependencies_); }

private:
    void reduce(Vec& v, Vec& combo) const { reduce_impl(v, combo, track_); }

    void reduce_impl(Vec& v, Vec& combo, bool track) const {
        Vec tmp;
        while (!v.empty()) {
            auto it = pivot_.find(v.idx[0]);
            if (it == pivot_.end()) return;
            const value c = f_.neg(v.val[0]);
            axpy(f_, v, c, rows_[it->second], tmp);
            std::swap(v, tmp);
            if (track) {
                axpy(f_, combo, c, combos_[it->second], tmp);
                std::swap(combo, tmp);
            }
        }
    }

    F f_;
    bool track_;
    std::vector<Vec> rows_;
    std::vector<Vec> combos_;
    std::unordered_map<int, int> pivot_;
    std::vector<Vec> dependencies_;
};

}  // namespace mobius
