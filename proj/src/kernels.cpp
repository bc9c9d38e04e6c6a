#include "qbracket/kernels.hpp"

#include <utility>

#include "qbracket/errors.hpp"
#include "qbracket/partition.hpp"

namespace qbracket {
namespace {

struct WorkItem {
    int n;
    int largest;
};

std::vector<WorkItem> prefix_classes(int max_n) {
    std::vector<WorkItem> items{{0, 0}};
    for (int n = 1; n <= max_n; ++n) {
        for (int largest = n; largest >= 1; --largest) items.push_back({n, largest});
    }
    return items;
}

void check_cap(int max_n) {
    if (max_n < 0) throw DomainError("max_n must be nonnegative");
    if (max_n > kDefaultPartitionCap) {
        throw ResourceLimitError("partition kernels are capped at n = " + std::to_string(kDefaultPartitionCap));
    }
}

// Runs body(item) -> Result for every prefix class, then folds the results in
// item order with merge(item, result).
template <class Result, class Body, class Merge>
void run_classes(int max_n, Exec exec, Body&& body, Merge&& merge) {
    const auto items = prefix_classes(max_n);
    std::vector<Result> results(items.size());
    const long count = static_cast<long>(items.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) results[i] = body(items[i]);
    } else {
        for (long i = 0; i < count; ++i) results[i] = body(items[i]);
    }
    for (std::size_t i = 0; i < items.size(); ++i) merge(items[i], std::move(results[i]));
}

}  // namespace

HookHistogram hook_histogram(int max_n, Exec exec) {
    check_cap(max_n);
    HookHistogram out;
    out.max_n = max_n;
    out.cells.assign(static_cast<std::size_t>(max_n) + 1, {});
    for (int n = 0; n <= max_n; ++n) out.cells[n].assign(static_cast<std::size_t>(n) + 1, 0);

    using Local = std::vector<std::uint64_t>;
    run_classes<Local>(
        max_n, exec,
        [](WorkItem w) {
            Local hist(static_cast<std::size_t>(w.n) + 1, 0);
            std::vector<int> cols;
            for_each_partition_with_largest(w.n, w.largest, [&](std::span<const int> parts) {
                for_each_hook(parts, cols, [&](int h) { ++hist[h]; });
            });
            return hist;
        },
        [&](WorkItem w, Local&& hist) {
            for (std::size_t h = 0; h < hist.size(); ++h) out.cells[w.n][h] += hist[h];
        });
    return out;
}

THookHistogram t_hook_histogram(int max_n, int t, Exec exec) {
    check_cap(max_n);
    if (t < 1) throw DomainError("t must be a positive integer");
    THookHistogram out;
    out.max_n = max_n;
    out.t = t;
    out.partitions.resize(static_cast<std::size_t>(max_n) + 1);
    out.cells.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        const std::size_t m_max = static_cast<std::size_t>(n / t);
        out.partitions[n].assign(m_max + 1, 0);
        out.cells[n].assign(m_max + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    }

    struct Local {
        std::vector<std::uint64_t> partitions;
        std::vector<std::vector<std::uint64_t>> cells;
    };
    run_classes<Local>(
        max_n, exec,
        [t](WorkItem w) {
            const std::size_t m_max = static_cast<std::size_t>(w.n / t);
            Local local{std::vector<std::uint64_t>(m_max + 1, 0),
                        std::vector<std::vector<std::uint64_t>>(
                            m_max + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(w.n) + 1, 0))};
            std::vector<int> cols, t_hooks;
            for_each_partition_with_largest(w.n, w.largest, [&](std::span<const int> parts) {
                t_hooks.clear();
                for_each_hook(parts, cols, [&](int h) {
                    if (h % t == 0) t_hooks.push_back(h);
                });
                const std::size_t m = t_hooks.size();
                if (m > m_max) throw std::logic_error("more than n/t hooks divisible by t");
                ++local.partitions[m];
                for (int h : t_hooks) ++local.cells[m][h];
            });
            return local;
        },
        [&](WorkItem w, Local&& local) {
            for (std::size_t m = 0; m < local.partitions.size(); ++m) {
                out.partitions[w.n][m] += local.partitions[m];
                for (std::size_t h = 0; h < local.cells[m].size(); ++h) out.cells[w.n][m][h] += local.cells[m][h];
            }
        });
    return out;
}

PartHistogram part_histogram(int max_n, Exec exec) {
    check_cap(max_n);
    PartHistogram out;
    out.max_n = max_n;
    out.parts.assign(static_cast<std::size_t>(max_n) + 1, {});
    for (int n = 0; n <= max_n; ++n) out.parts[n].assign(static_cast<std::size_t>(n) + 1, 0);

    using Local = std::vector<std::uint64_t>;
    run_classes<Local>(
        max_n, exec,
        [](WorkItem w) {
            Local hist(static_cast<std::size_t>(w.n) + 1, 0);
            for_each_partition_with_largest(w.n, w.largest, [&](std::span<const int> parts) {
                for (int p : parts) ++hist[p];
            });
            return hist;
        },
        [&](WorkItem w, Local&& hist) {
            for (std::size_t j = 0; j < hist.size(); ++j) out.parts[w.n][j] += hist[j];
        });
    return out;
}

std::vector<Polynomial> nekrasov_okounkov_numerators(int max_n, Exec exec) {
    check_cap(max_n);
    std::vector<Polynomial> out(static_cast<std::size_t>(max_n) + 1);
    run_classes<Polynomial>(
        max_n, exec,
        [](WorkItem w) {
            Polynomial sum;
            std::vector<int> cols;
            for_each_partition_with_largest(w.n, w.largest, [&](std::span<const int> parts) {
                sum += nekrasov_okounkov_D(parts, cols);
            });
            return sum;
        },
        [&](WorkItem w, Polynomial&& p) { out[w.n] += p; });
    return out;
}

}  // namespace qbracket
