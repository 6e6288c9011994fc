#ifndef GSTONE_KERNELS_HPP_
#define GSTONE_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

// Exhaustive table scans shared by the validators. Each kernel comes in a
// serial reference version and an OpenMP version; the unsuffixed name
// dispatches to the parallel one when OpenMP is available. Both versions
// return identical, canonically ordered results, so the dispatch never
// changes observable behaviour. tools/gstone-bench compares the two.

namespace gstone::kernels {

// Row-major n*n multiplication table of element indices.
using MulTable = std::vector<int>;
// Row-major n*n order relation, leq[a*n+b] != 0 iff a <= b.
using LeqTable = std::vector<std::uint8_t>;

struct Triple {
  int a, b, c;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Triples with (a*b)*c != a*(b*c), sorted, at most max_witnesses of them.
std::vector<Triple> associativity_violations_serial(const MulTable& mul, int n,
                                                    std::size_t max_witnesses);
std::vector<Triple> associativity_violations_parallel(const MulTable& mul,
                                                      int n,
                                                      std::size_t max_witnesses);
std::vector<Triple> associativity_violations(const MulTable& mul, int n,
                                             std::size_t max_witnesses = 16);

// All-pairs greatest lower bounds (resp. least upper bounds) of a poset,
// -1 where none exists.
std::vector<int> meet_table_serial(const LeqTable& leq, int n);
std::vector<int> meet_table_parallel(const LeqTable& leq, int n);
std::vector<int> meet_table(const LeqTable& leq, int n);

std::vector<int> join_table_serial(const LeqTable& leq, int n);
std::vector<int> join_table_parallel(const LeqTable& leq, int n);
std::vector<int> join_table(const LeqTable& leq, int n);

// arrow[s*n+t] != 0 iff every nonzero r <= s has r ^ t != 0. Requires a
// complete meet table (every entry defined).
std::vector<std::uint8_t> arrow_table_serial(const LeqTable& leq,
                                             const std::vector<int>& meet,
                                             int n, int zero);
std::vector<std::uint8_t> arrow_table_parallel(const LeqTable& leq,
                                               const std::vector<int>& meet,
                                               int n, int zero);
std::vector<std::uint8_t> arrow_table(const LeqTable& leq,
                                      const std::vector<int>& meet, int n,
                                      int zero);

// Natural partial order of an inverse semigroup: s <= t iff s = t*u for an
// idempotent u.
LeqTable natural_order_serial(const MulTable& mul, int n,
                              const std::vector<int>& idempotents);
LeqTable natural_order_parallel(const MulTable& mul, int n,
                                const std::vector<int>& idempotents);
LeqTable natural_order(const MulTable& mul, int n,
                       const std::vector<int>& idempotents);

}  // namespace gstone::kernels

#endif  // GSTONE_KERNELS_HPP_
