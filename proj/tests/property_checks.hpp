#ifndef QBRACKET_TESTS_PROPERTY_CHECKS_HPP
#define QBRACKET_TESTS_PROPERTY_CHECKS_HPP

#include <string>

// Randomized and exhaustive invariant checks shared by the unit tests and the
// acceptance runner. Each returns pass plus a short description of the first
// failure (empty on pass).
namespace props {

struct Result {
    bool pass = true;
    std::string detail;
    int cases = 0;
};

Result series_ring_laws(unsigned seed = 1, int trials = 20);
Result exp_log_roundtrip(unsigned seed = 2, int trials = 10);
Result qbracket_linearity(unsigned seed = 3, int trials = 5);
Result hook_invariants(int max_n = 14);
Result hurwitz_shift(unsigned seed = 4, int trials = 200);
Result bernoulli_recurrence(int max_n = 60);
Result character_sums(long max_abs_d = 400);
Result kernels_serial_parallel(int max_n = 22);

}  // namespace props

#endif
