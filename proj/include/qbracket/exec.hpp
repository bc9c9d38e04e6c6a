#ifndef QBRACKET_EXEC_HPP
#define QBRACKET_EXEC_HPP

namespace qbracket {

// Selects between the OpenMP kernel and its serial reference. Results are
// identical either way; the serial path exists for testing and benchmarks.
enum class Exec { serial, parallel };

}  // namespace qbracket

#endif
