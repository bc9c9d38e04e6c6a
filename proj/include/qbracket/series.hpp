#ifndef QBRACKET_SERIES_HPP
#define QBRACKET_SERIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qbracket/errors.hpp"
#include "qbracket/exec.hpp"
#include "qbracket/polynomial.hpp"
#include "qbracket/rational.hpp"

namespace qbracket {

// Coefficient-ring hooks used by the generic series code.
inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const Polynomial& c) { return c.is_zero(); }

inline Rational unit_inverse(const Rational& c) {
    if (c == 0) throw UnitError("constant term is zero");
    return 1 / c;
}

inline Polynomial unit_inverse(const Polynomial& c) {
    if (!c.is_constant() || c.is_zero()) {
        throw UnitError("constant term is not a nonzero constant polynomial");
    }
    return Polynomial(Rational(1 / c.coeff(0)));
}

// Truncated formal power series q^offset * sum_{n=0}^{N} c_n q^n with exact
// coefficients. The offset is a single rational (in practice a multiple of
// 1/24) so eta-type prefactors are carried without fractional exponents.
template <class C>
class Series {
public:
    using coeff_type = C;

    explicit Series(std::size_t order, Rational offset = 0)
        : coeffs_(order + 1), offset_(std::move(offset)) {}

    Series(std::vector<C> coeffs, Rational offset) : coeffs_(std::move(coeffs)), offset_(std::move(offset)) {
        if (coeffs_.empty()) throw DomainError("series needs at least the q^0 coefficient");
    }

    static Series one(std::size_t order) {
        Series s(order);
        s.coeffs_[0] = C(1);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& offset() const { return offset_; }
    void set_offset(Rational r) { offset_ = std::move(r); }

    const C& operator[](std::size_t n) const { return coeffs_[n]; }
    C& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    Series truncated(std::size_t order) const {
        if (order > this->order()) throw AlignmentError("cannot extend a truncated series");
        return Series(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1), offset_);
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<C> coeffs_;
    Rational offset_;
};

using QSeries = Series<Rational>;
using AlphaSeries = Series<Polynomial>;
using BivariateQSeries = Series<Polynomial>;

namespace detail {

template <class C>
void require_same_order(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order()) {
        throw AlignmentError("truncation orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
    }
}

template <class C>
void require_aligned(const Series<C>& a, const Series<C>& b) {
    require_same_order(a, b);
    if (a.offset() != b.offset()) {
        throw AlignmentError("q-offsets differ: " + a.offset().get_str() + " vs " + b.offset().get_str());
    }
}

}  // namespace detail

// Truncated Cauchy product of coefficient vectors. Each output coefficient is
// an independent reduction, so the parallel kernel splits over n; exact
// arithmetic makes the result independent of the schedule.
template <class C>
std::vector<C> convolve(const std::vector<C>& a, const std::vector<C>& b, std::size_t order,
                        Exec exec = Exec::parallel) {
    std::vector<C> out(order + 1);
    const long n_out = static_cast<long>(order) + 1;
    auto cell = [&](long n) {
        C acc(0);
        for (long i = 0; i <= n; ++i) {
            if (static_cast<std::size_t>(i) >= a.size() || static_cast<std::size_t>(n - i) >= b.size()) continue;
            if (is_zero(a[i]) || is_zero(b[n - i])) continue;
            acc += a[i] * b[n - i];
        }
        out[n] = std::move(acc);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long n = 0; n < n_out; ++n) cell(n);
    } else {
        for (long n = 0; n < n_out; ++n) cell(n);
    }
    return out;
}

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    detail::require_aligned(a, b);
    Series<C> r = a;
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] += b[n];
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    detail::require_aligned(a, b);
    Series<C> r = a;
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] -= b[n];
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a) {
    Series<C> r(a.order(), a.offset());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] -= a[n];
    return r;
}

template <class C>
Series<C> multiply(const Series<C>& a, const Series<C>& b, Exec exec = Exec::parallel) {
    detail::require_same_order(a, b);
    return Series<C>(convolve(a.coeffs(), b.coeffs(), a.order(), exec), Rational(a.offset() + b.offset()));
}

template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    return multiply(a, b);
}

template <class C>
Series<C> operator*(Series<C> a, const C& c) {
    for (std::size_t n = 0; n <= a.order(); ++n) a[n] *= c;
    return a;
}

// a / b by coefficient recurrence against b's constant term.
template <class C>
Series<C> operator/(const Series<C>& a, const Series<C>& b) {
    detail::require_same_order(a, b);
    const C inv = unit_inverse(b[0]);
    Series<C> q(a.order(), Rational(a.offset() - b.offset()));
    for (std::size_t n = 0; n <= a.order(); ++n) {
        C acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(b[k]) || is_zero(q[n - k])) continue;
            acc -= b[k] * q[n - k];
        }
        q[n] = acc * inv;
    }
    return q;
}

template <class C>
Series<C> power(const Series<C>& a, long e) {
    if (e < 0) return power(Series<C>::one(a.order()) / a, -e);
    Series<C> result = Series<C>::one(a.order());
    Series<C> base = a;
    Rational offset = a.offset() * e;
    base.set_offset(0);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    result.set_offset(offset);
    return result;
}

// Formal exponential; requires offset 0 and zero constant term.
// Uses n b_n = sum_{k=1}^n k a_k b_{n-k}.
template <class C>
Series<C> exp_series(const Series<C>& a) {
    if (a.offset() != 0 || !is_zero(a[0])) throw UnitError("exp needs offset 0 and zero constant term");
    Series<C> b(a.order());
    b[0] = C(1);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(a[k]) || is_zero(b[n - k])) continue;
            acc += (a[k] * b[n - k]) * Rational(static_cast<long>(k));
        }
        b[n] = acc * make_rational(1, static_cast<long>(n));
    }
    return b;
}

// Formal logarithm; requires offset 0 and constant term 1.
// Uses n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
template <class C>
Series<C> log_series(const Series<C>& a) {
    if (a.offset() != 0 || !(a[0] == C(1))) throw UnitError("log needs offset 0 and constant term 1");
    Series<C> l(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc = a[n] * Rational(static_cast<long>(n));
        for (std::size_t k = 1; k < n; ++k) {
            if (is_zero(l[k]) || is_zero(a[n - k])) continue;
            acc -= (l[k] * a[n - k]) * Rational(static_cast<long>(k));
        }
        l[n] = acc * make_rational(1, static_cast<long>(n));
    }
    return l;
}

template <class D, class C, class F>
Series<D> map_coeffs(const Series<C>& s, F&& f) {
    std::vector<D> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) out.push_back(f(c));
    return Series<D>(std::move(out), s.offset());
}

}  // namespace qbracket

#endif
