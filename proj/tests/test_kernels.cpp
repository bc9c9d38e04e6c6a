#include <doctest.h>

#include "oracles.hpp"
#include "qbracket/kernels.hpp"
#include "qbracket/partition.hpp"

using namespace qbracket;

TEST_SUITE("kernels") {

TEST_CASE("hook histogram matches the diagram oracle") {
    const int N = 12;
    const auto h = hook_histogram(N, Exec::parallel);
    REQUIRE(h.cells.size() == N + 1);
    for (int n = 0; n <= N; ++n) {
        std::vector<std::uint64_t> ref(n + 1, 0);
        for (const auto& p : oracle::partitions(n)) {
            for (int x : oracle::hooks(p)) ++ref[x];
        }
        std::vector<std::uint64_t> got = h.cells[n];
        got.resize(n + 1, 0);
        CHECK(got == ref);
    }
}

TEST_CASE("t-hook histogram matches the diagram oracle") {
    const int N = 12;
    for (int t : {1, 2, 3}) {
        const auto h = t_hook_histogram(N, t, Exec::parallel);
        for (int n = 0; n <= N; ++n) {
            std::vector<std::uint64_t> parts(n / t + 1, 0);
            for (const auto& p : oracle::partitions(n)) {
                int m = 0;
                for (int x : oracle::hooks(p)) m += x % t == 0;
                ++parts[m];
            }
            std::vector<std::uint64_t> got = h.partitions[n];
            got.resize(parts.size(), 0);
            CHECK(got == parts);
        }
    }
}

TEST_CASE("part histogram matches the oracle") {
    const int N = 14;
    const auto h = part_histogram(N, Exec::parallel);
    for (int n = 1; n <= N; ++n) {
        std::vector<std::uint64_t> ref(n + 1, 0);
        for (const auto& p : oracle::partitions(n)) {
            for (int x : p) ++ref[x];
        }
        std::vector<std::uint64_t> got = h.parts[n];
        got.resize(n + 1, 0);
        CHECK(got == ref);
    }
}

TEST_CASE("D_alpha numerators match per-partition products") {
    const int N = 9;
    const auto num = nekrasov_okounkov_numerators(N, Exec::parallel);
    for (int n = 0; n <= N; ++n) {
        Polynomial ref;
        for (const auto& p : enumerate_partitions(n)) ref += nekrasov_okounkov_D(p);
        CHECK(num[n] == ref);
    }
}

TEST_CASE("serial and parallel paths agree exactly") {
    CHECK(hook_histogram(20, Exec::serial).cells == hook_histogram(20, Exec::parallel).cells);
    const auto a = t_hook_histogram(20, 2, Exec::serial), b = t_hook_histogram(20, 2, Exec::parallel);
    CHECK(a.partitions == b.partitions);
    CHECK(a.cells == b.cells);
    CHECK(part_histogram(20, Exec::serial).parts == part_histogram(20, Exec::parallel).parts);
    CHECK(nekrasov_okounkov_numerators(12, Exec::serial) == nekrasov_okounkov_numerators(12, Exec::parallel));
}

}  // TEST_SUITE
