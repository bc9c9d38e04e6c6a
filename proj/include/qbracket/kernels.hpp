#ifndef QBRACKET_KERNELS_HPP
#define QBRACKET_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "qbracket/exec.hpp"
#include "qbracket/polynomial.hpp"

namespace qbracket {

// Aggregated partition statistics for every n <= max_n. Each kernel visits
// all partitions of size <= max_n once; the parallel variant splits the work
// into prefix classes (n, largest part) and reduces the per-class results in
// a fixed order, so both paths return identical values.

// cells[n][h]: number of pairs (lambda, cell) with |lambda| = n and hook h.
struct HookHistogram {
    int max_n = 0;
    std::vector<std::vector<std::uint64_t>> cells;
};

// For fixed t, indexed by n and m = |H_t(lambda)|:
//   partitions[n][m]  number of lambda |- n with exactly m t-hooks;
//   cells[n][m][h]    number of t-hooks equal to h over those lambda.
struct THookHistogram {
    int max_n = 0;
    int t = 1;
    std::vector<std::vector<std::uint64_t>> partitions;
    std::vector<std::vector<std::vector<std::uint64_t>>> cells;
};

// parts[n][j]: total number of parts equal to j over all lambda |- n.
struct PartHistogram {
    int max_n = 0;
    std::vector<std::vector<std::uint64_t>> parts;
};

HookHistogram hook_histogram(int max_n, Exec exec = Exec::parallel);
THookHistogram t_hook_histogram(int max_n, int t, Exec exec = Exec::parallel);
PartHistogram part_histogram(int max_n, Exec exec = Exec::parallel);

// sum over lambda |- n of D_alpha(lambda), for n = 0..max_n.
std::vector<Polynomial> nekrasov_okounkov_numerators(int max_n, Exec exec = Exec::parallel);

}  // namespace qbracket

#endif
