#include "qbracket/qseries.hpp"

#include <stdexcept>
#include <string>

#include "qbracket/errors.hpp"
#include "qbracket/special.hpp"

namespace qbracket {
namespace {

void check_order(std::size_t order, std::size_t min = 0) {
    if (order < min) throw DomainError("truncation order must be at least " + std::to_string(min));
    if (order > static_cast<std::size_t>(kDefaultPartitionCap) * 4) {
        throw ResourceLimitError("truncation order too large");
    }
}

void check_partition_order(std::size_t order) {
    if (order > static_cast<std::size_t>(kDefaultPartitionCap)) {
        throw ResourceLimitError("partition sums are capped at order " + std::to_string(kDefaultPartitionCap));
    }
}

// Fills report.pass / first_discrepancy by comparing coefficientwise.
template <class C, class Show>
void compare_into(VerificationReport& report, const Series<C>& lhs, const Series<C>& rhs, Show&& show) {
    report.order = lhs.order();
    report.coefficients_checked = 0;
    if (lhs.offset() != rhs.offset()) {
        report.pass = false;
        report.notes.push_back("offsets differ: " + to_string(lhs.offset()) + " vs " + to_string(rhs.offset()));
    }
    for (std::size_t n = 0; n <= lhs.order() && n <= rhs.order(); ++n) {
        ++report.coefficients_checked;
        if (!(lhs[n] == rhs[n])) {
            report.pass = false;
            report.first_discrepancy = VerificationReport::Discrepancy{n, show(lhs[n]), show(rhs[n])};
            return;
        }
    }
}

// Divides numerator coefficients (offset 0) by the partition generating function.
template <class C>
Series<C> divide_by_euler(const Series<C>& numerator) {
    // multiplying by prod(1-q^n) is the same as dividing by sum p(n) q^n
    const QSeries eta = eta_series(numerator.order());
    Series<C> out(numerator.order(), numerator.offset());
    for (std::size_t n = 0; n <= numerator.order(); ++n) {
        C acc(0);
        for (std::size_t j = 0; j <= n; ++j) {
            if (eta[j] == 0 || is_zero(numerator[n - j])) continue;
            acc += numerator[n - j] * eta[j];
        }
        out[n] = std::move(acc);
    }
    return out;
}

}  // namespace

QSeries euler_series(std::size_t order) {
    check_order(order);
    QSeries s = QSeries::one(order);
    // multiply by 1/(1-q^n) in place
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t m = n; m <= order; ++m) s[m] += s[m - n];
    }
    return s;
}

QSeries eta_series(std::size_t order) {
    check_order(order);
    QSeries s = QSeries::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t m = order; m >= n; --m) s[m] -= s[m - n];
    }
    s.set_offset(make_rational(1, 24));
    return s;
}

Rational sigma(long l, long n) {
    if (n < 1) throw DomainError("sigma needs n >= 1");
    Rational sum;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        sum += rational_pow(Rational(d), l);
        if (d * d != n) sum += rational_pow(Rational(n / d), l);
    }
    return sum;
}

QSeries eichler_lambert(long a, std::size_t order) {
    check_order(order, 1);
    QSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const Rational c = rational_pow(Rational(static_cast<long>(n)), 1 - a);
        for (std::size_t m = n; m <= order; m += n) s[m] += c;
    }
    return s;
}

QSeries eichler_divisor(long a, std::size_t order) {
    check_order(order, 1);
    QSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s[n] = sigma(1 - a, static_cast<long>(n));
    return s;
}

QSeries eichler_coeffs(long a, std::size_t order) {
    QSeries lambert = eichler_lambert(a, order);
    if (!(lambert == eichler_divisor(a, order))) {
        throw std::logic_error("Lambert and divisor-sum expansions disagree");
    }
    return lambert;
}

QSeries q_bracket(const std::function<Rational(const Partition&)>& f, std::size_t order) {
    check_partition_order(order);
    QSeries num(order);
    for (std::size_t n = 0; n <= order; ++n) {
        for_each_partition(static_cast<int>(n), [&](std::span<const int> parts) {
            num[n] += f(Partition(std::vector<int>(parts.begin(), parts.end())));
        });
    }
    return divide_by_euler(num);
}

QSeries q_bracket(const std::map<Partition, Rational>& values, std::size_t order) {
    return q_bracket(
        [&](const Partition& p) {
            auto it = values.find(p);
            if (it == values.end()) throw DomainError("q_bracket: no value for partition " + p.to_string());
            return it->second;
        },
        order);
}

QSeries hook_bracket(long a, int t, std::size_t order, const HookHistogram* histogram) {
    if (t < 1) throw DomainError("t must be a positive integer");
    check_partition_order(order);
    HookHistogram local;
    if (!histogram || histogram->max_n < static_cast<int>(order)) {
        local = hook_histogram(static_cast<int>(order));
        histogram = &local;
    }
    // h^{-a} for every hook length that can occur
    std::vector<Rational> weight(order + 1);
    for (std::size_t h = static_cast<std::size_t>(t); h <= order; h += static_cast<std::size_t>(t)) {
        weight[h] = rational_pow(Rational(static_cast<long>(h)), -a);
    }
    QSeries num(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto& cells = histogram->cells[n];
        for (std::size_t h = static_cast<std::size_t>(t); h < cells.size(); h += static_cast<std::size_t>(t)) {
            if (cells[h]) num[n] += weight[h] * Rational(Integer(static_cast<unsigned long>(cells[h])));
        }
        num[n] *= rational_pow(Rational(t), a - 1);
    }
    return divide_by_euler(num);
}

QSeries theorem1_rhs(long a, int t, std::size_t order) {
    if (t < 1) throw DomainError("t must be a positive integer");
    QSeries s(order);
    for (std::size_t m = 1; m * static_cast<std::size_t>(t) <= order; ++m) {
        s[m * static_cast<std::size_t>(t)] = sigma(1 - a, static_cast<long>(m));
    }
    return s;
}

VerificationReport verify_theorem1(long a, int t, std::size_t order, const HookHistogram* histogram) {
    if (t < 1) throw DomainError("t must be a positive integer");
    if (order < static_cast<std::size_t>(t)) throw DomainError("order must be at least t");
    VerificationReport r;
    r.identity = "theorem1";
    r.params = {{"a", a}, {"t", t}};
    compare_into(r, hook_bracket(a, t, order, histogram), theorem1_rhs(a, t, order),
                 [](const Rational& c) { return to_string(c); });
    return r;
}

BivariateQSeries hanji_lhs(long k, int t, std::size_t order) {
    if (t < 1) throw DomainError("t must be a positive integer");
    check_partition_order(order);
    const THookHistogram hist = t_hook_histogram(static_cast<int>(order), t);
    const Rational scale = rational_pow(Rational(t), k - 1);
    BivariateQSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<Rational> xcoeffs(hist.cells[n].size());
        for (std::size_t m = 0; m < hist.cells[n].size(); ++m) {
            const auto& cells = hist.cells[n][m];
            for (std::size_t h = 1; h < cells.size(); ++h) {
                if (cells[h]) {
                    xcoeffs[m] += rational_pow(Rational(static_cast<long>(h)), -k) *
                                  Rational(Integer(static_cast<unsigned long>(cells[h])));
                }
            }
            xcoeffs[m] *= scale;
        }
        s[n] = Polynomial(std::move(xcoeffs));
    }
    return s;
}

BivariateQSeries hanji_rhs(long k, int t, std::size_t order) {
    if (t < 1) throw DomainError("t must be a positive integer");
    check_order(order);
    const std::size_t ts = static_cast<std::size_t>(t);
    // prod (1-q^{tn})^t / (1-x^n q^{tn})^t, built in place
    BivariateQSeries prod = BivariateQSeries::one(order);
    for (std::size_t n = 1; n * ts <= order; ++n) {
        const std::size_t step = n * ts;
        const Polynomial xn = Polynomial::monomial(n);
        for (int rep = 0; rep < t; ++rep) {
            for (std::size_t m = order; m >= step; --m) prod[m] -= prod[m - step];
            for (std::size_t m = step; m <= order; ++m) prod[m] += xn * prod[m - step];
        }
    }
    // times 1/prod(1-q^n)
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t m = n; m <= order; ++m) prod[m] += prod[m - n];
    }
    // sum_n n^{1-k} sum_{j>=1} x^{nj} q^{tnj}
    BivariateQSeries lambert(order);
    for (std::size_t n = 1; n * ts <= order; ++n) {
        const Rational c = rational_pow(Rational(static_cast<long>(n)), 1 - k);
        for (std::size_t j = 1; n * j * ts <= order; ++j) lambert[n * j * ts] += Polynomial::monomial(n * j, c);
    }
    return prod * lambert;
}

VerificationReport verify_hanji(long k, int t, std::size_t order) {
    if (t < 1) throw DomainError("t must be a positive integer");
    if (order < static_cast<std::size_t>(t)) throw DomainError("order must be at least t");
    VerificationReport r;
    r.identity = "hanji";
    r.params = {{"k", k}, {"t", t}};
    const auto lhs = hanji_lhs(k, t, order);
    const auto rhs = hanji_rhs(k, t, order);
    compare_into(r, lhs, rhs, [](const Polynomial& p) { return p.to_string('x'); });
    for (std::size_t n = 0; n <= order; ++n) {
        const long bound = static_cast<long>(n) / t;
        if (lhs[n].degree() > bound || rhs[n].degree() > bound) {
            r.pass = false;
            r.notes.push_back("x-degree above n/t at q^" + std::to_string(n));
            break;
        }
    }
    return r;
}

AlphaSeries nekrasov_okounkov_lhs(std::size_t order) {
    check_partition_order(order);
    const auto nums = nekrasov_okounkov_numerators(static_cast<int>(order));
    AlphaSeries num(order);
    for (std::size_t n = 0; n <= order; ++n) num[n] = nums[n];
    return divide_by_euler(num);
}

AlphaSeries nekrasov_okounkov_rhs(std::size_t order) {
    QSeries prod = eta_series(order);
    prod.set_offset(0);
    const QSeries l = log_series(prod);
    const AlphaSeries alpha_log =
        map_coeffs<Polynomial>(l, [](const Rational& c) { return Polynomial::monomial(1, c); });
    return exp_series(alpha_log);
}

VerificationReport verify_nekrasov_okounkov(std::size_t order) {
    if (order < 1) throw DomainError("order must be at least 1");
    VerificationReport r;
    r.identity = "nekrasov-okounkov";
    r.params = nlohmann::json::object();
    compare_into(r, nekrasov_okounkov_lhs(order), nekrasov_okounkov_rhs(order),
                 [](const Polynomial& p) { return p.to_string('a'); });
    r.notes.push_back("q-offsets: both sides carry q^{alpha/24}; compared with the offset stripped");
    return r;
}

QSeries eisenstein_series(int k, std::size_t order) {
    if (k < 1) throw DomainError("k must be positive");
    const Rational c = Rational(4 * k) / bernoulli(2 * k);
    QSeries e = QSeries::one(order);
    for (std::size_t n = 1; n <= order; ++n) e[n] = -c * sigma(2 * k - 1, static_cast<long>(n));
    return e;
}

VerificationReport verify_S2k_bracket(int k, std::size_t order) {
    if (k < 1) throw DomainError("k must be positive");
    check_partition_order(order);
    VerificationReport r;
    r.identity = "s2k";
    r.params = {{"k", k}};

    const PartHistogram hist = part_histogram(static_cast<int>(order));
    QSeries num(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Integer acc;
        for (std::size_t j = 1; j < hist.parts[n].size(); ++j) {
            if (hist.parts[n][j]) {
                acc += Integer(static_cast<unsigned long>(hist.parts[n][j])) *
                       integer_pow(Integer(static_cast<unsigned long>(j)), static_cast<unsigned long>(2 * k - 1));
            }
        }
        num[n] = Rational(acc);
    }
    const QSeries bracket = divide_by_euler(num);
    const QSeries divisor = eichler_divisor(2 - 2 * k, order);
    compare_into(r, bracket, divisor, [](const Rational& c) { return to_string(c); });
    if (!r.pass) return r;

    // B_{2k}(1 - E_{2k})/4k
    const QSeries e = eisenstein_series(k, order);
    QSeries from_e = (QSeries::one(order) - e) * Rational(bernoulli(2 * k) / (4 * k));
    VerificationReport second;
    compare_into(second, divisor, from_e, [](const Rational& c) { return to_string(c); });
    if (!second.pass) {
        r.pass = false;
        r.first_discrepancy = second.first_discrepancy;
        r.notes.push_back("divisor sums differ from the Eisenstein form");
    }
    return r;
}

nlohmann::json to_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return {{"offset", to_string(s.offset())}, {"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const AlphaSeries& s, char var) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string(var));
    return {{"offset", to_string(s.offset())}, {"order", s.order()}, {"coeffs", coeffs}};
}

}  // namespace qbracket
