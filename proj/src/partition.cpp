#include "qbracket/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbracket/errors.hpp"

namespace qbracket {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw DomainError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be nonincreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    conjugate_columns(parts_, cols);
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

HookMultiset::HookMultiset(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

std::size_t HookMultiset::multiplicity(int h) const {
    auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), h);
    return static_cast<std::size_t>(hi - lo);
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    if (n > cap) {
        throw ResourceLimitError("partition enumeration of n = " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
    }
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

void conjugate_columns(std::span<const int> parts, std::vector<int>& cols) {
    const int width = parts.empty() ? 0 : parts[0];
    cols.assign(static_cast<std::size_t>(width), 0);
    // parts are nonincreasing, so row l contributes to columns 0..parts[l]-1
    for (std::size_t l = 0; l < parts.size(); ++l) {
        for (int j = 0; j < parts[l]; ++j) ++cols[j];
    }
}

HookMultiset hook_multiset(const Partition& p) {
    std::vector<int> cols, hooks;
    hooks.reserve(static_cast<std::size_t>(p.size()));
    for_each_hook(p.parts(), cols, [&](int h) { hooks.push_back(h); });
    return HookMultiset(std::move(hooks));
}

HookMultiset t_hook_multiset(const Partition& p, int t) {
    if (t < 1) throw DomainError("t must be a positive integer");
    std::vector<int> cols, hooks;
    for_each_hook(p.parts(), cols, [&](int h) {
        if (h % t == 0) hooks.push_back(h);
    });
    return HookMultiset(std::move(hooks));
}

Rational f_hook(const Partition& p, long a, int t) {
    const HookMultiset hooks = t_hook_multiset(p, t);
    Rational sum;
    for (int h : hooks.values()) {
        sum += rational_pow(Rational(h), -a);
    }
    return sum * rational_pow(Rational(t), a - 1);
}

std::complex<double> f_hook_numeric(const Partition& p, std::complex<double> a, int t) {
    const HookMultiset hooks = t_hook_multiset(p, t);
    std::complex<double> sum = 0.0;
    for (int h : hooks.values()) {
        sum += std::exp(-a * std::log(static_cast<double>(h)));
    }
    return sum * std::exp((a - 1.0) * std::log(static_cast<double>(t)));
}

Integer moment_S(const Partition& p, int k) {
    if (k < 1) throw DomainError("moment_S needs k >= 1");
    Integer sum;
    for (int part : p.parts()) {
        sum += integer_pow(Integer(part), static_cast<unsigned long>(2 * k - 1));
    }
    return sum;
}

Polynomial nekrasov_okounkov_D(std::span<const int> parts, std::vector<int>& cols) {
    // Expand prod (1 - alpha/h^2) in place; degree grows by one per cell.
    std::size_t cells = 0;
    for (int part : parts) cells += static_cast<std::size_t>(part);
    std::vector<Rational> c(cells + 1);
    c[0] = 1;
    std::size_t deg = 0;
    for_each_hook(parts, cols, [&](int h) {
        const Rational w = make_rational(-1, static_cast<long>(h) * h);
        ++deg;
        for (std::size_t i = deg; i >= 1; --i) c[i] += w * c[i - 1];
    });
    return Polynomial(std::move(c));
}

Polynomial nekrasov_okounkov_D(const Partition& p) {
    std::vector<int> cols;
    return nekrasov_okounkov_D(p.parts(), cols);
}

}  // namespace qbracket
