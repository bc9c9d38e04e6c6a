#ifndef QBRACKET_PARTITION_HPP
#define QBRACKET_PARTITION_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qbracket/polynomial.hpp"
#include "qbracket/rational.hpp"

namespace qbracket {

// An integer partition: nonincreasing positive parts. The empty partition is
// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    // Throws DomainError unless parts are positive and nonincreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Multiset of hook numbers, stored sorted ascending.
class HookMultiset {
public:
    HookMultiset() = default;
    explicit HookMultiset(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    std::size_t multiplicity(int h) const;

    friend bool operator==(const HookMultiset&, const HookMultiset&) = default;

private:
    std::vector<int> values_;
};

inline constexpr int kDefaultPartitionCap = 60;

// All partitions of n in lexicographically decreasing order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

// Calls f(std::span<const int>) for every partition of n, same order as
// enumerate_partitions, without materializing them.
template <class F>
void for_each_partition(int n, F&& f);

// Partitions of n whose largest part is exactly `largest` (n = 0 only with
// largest = 0). These prefix classes partition the enumeration and are the
// unit of work for the parallel kernels.
template <class F>
void for_each_partition_with_largest(int n, int largest, F&& f);

// Column lengths lambda'_j written into cols (resized to lambda_1).
void conjugate_columns(std::span<const int> parts, std::vector<int>& cols);

// Calls f(h) for each cell's hook number h = lambda_l - l + lambda'_j - j + 1.
template <class F>
void for_each_hook(std::span<const int> parts, std::vector<int>& cols, F&& f);

HookMultiset hook_multiset(const Partition& p);
HookMultiset t_hook_multiset(const Partition& p, int t);

// t^{a-1} * sum over t-hooks h of h^{-a}, exact for every integer a.
Rational f_hook(const Partition& p, long a, int t);
// Same statistic for complex a via h^{-a} = exp(-a log h).
std::complex<double> f_hook_numeric(const Partition& p, std::complex<double> a, int t);

// S_{2k}(lambda) = sum_j lambda_j^{2k-1}.
Integer moment_S(const Partition& p, int k);

// D_alpha(lambda) = prod over hooks of (1 - alpha/h^2), expanded in alpha.
Polynomial nekrasov_okounkov_D(const Partition& p);
Polynomial nekrasov_okounkov_D(std::span<const int> parts, std::vector<int>& cols);

// ---------------------------------------------------------------------------

namespace detail {

template <class F>
void partitions_rec(std::vector<int>& parts, int remaining, int max_part, F& f) {
    if (remaining == 0) {
        f(std::span<const int>(parts));
        return;
    }
    for (int p = remaining < max_part ? remaining : max_part; p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(parts, remaining - p, p, f);
        parts.pop_back();
    }
}

}  // namespace detail

template <class F>
void for_each_partition_with_largest(int n, int largest, F&& f) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n) + 1);
    if (n == 0) {
        if (largest == 0) f(std::span<const int>(parts));
        return;
    }
    if (largest < 1 || largest > n) return;
    parts.push_back(largest);
    detail::partitions_rec(parts, n - largest, largest, f);
}

template <class F>
void for_each_partition(int n, F&& f) {
    if (n == 0) {
        for_each_partition_with_largest(0, 0, f);
        return;
    }
    for (int largest = n; largest >= 1; --largest) {
        for_each_partition_with_largest(n, largest, f);
    }
}

template <class F>
void for_each_hook(std::span<const int> parts, std::vector<int>& cols, F&& f) {
    conjugate_columns(parts, cols);
    const int rows = static_cast<int>(parts.size());
    for (int l = 0; l < rows; ++l) {
        for (int j = 0; j < parts[l]; ++j) {
            f(parts[l] - l + cols[j] - j - 1);
        }
    }
}

}  // namespace qbracket

#endif
