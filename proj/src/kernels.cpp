#include "gstone/kernels.hpp"

#include <algorithm>
#include <bit>

#include "gstone/parallel.hpp"

namespace gstone::kernels {

namespace {

// Packed bit rows of the order relation; row k of `down` is {x | x <= k},
// row k of `up` is {x | k <= x ... i.e. x >= k}? No: up[k] = {x | k <= x}.
struct BitRows {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitRows(int n_) : n(n_), words((n_ + 63) / 64), bits() {
    bits.assign(static_cast<std::size_t>(n) * words, 0);
  }

  void set(int row, int col) {
    bits[static_cast<std::size_t>(row) * words + col / 64] |=
        std::uint64_t{1} << (col % 64);
  }

  const std::uint64_t* row(int r) const {
    return bits.data() + static_cast<std::size_t>(r) * words;
  }
};

BitRows down_rows(const LeqTable& leq, int n) {
  BitRows rows(n);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (leq[static_cast<std::size_t>(x) * n + k]) rows.set(k, x);
    }
  }
  return rows;
}

BitRows up_rows(const LeqTable& leq, int n) {
  BitRows rows(n);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (leq[static_cast<std::size_t>(k) * n + x]) rows.set(k, x);
    }
  }
  return rows;
}

int popcount_row(const std::uint64_t* row, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
  return c;
}

template <typename Fn>
void for_each_bit(const std::uint64_t* a, const std::uint64_t* b, int words,
                  Fn&& fn) {
  for (int w = 0; w < words; ++w) {
    std::uint64_t word = a[w] & b[w];
    while (word) {
      int bit = std::countr_zero(word);
      if (!fn(w * 64 + bit)) return;
      word &= word - 1;
    }
  }
}

// glb of (i, j): the unique k <= i, j whose down-set exhausts all common
// lower bounds. down(k) is always contained in the common lower bound set,
// so a popcount comparison suffices.
int bound_of_pair(const BitRows& rows, const std::vector<int>& counts, int i,
                  int j) {
  const std::uint64_t* a = rows.row(i);
  const std::uint64_t* b = rows.row(j);
  int common = 0;
  for (int w = 0; w < rows.words; ++w) common += std::popcount(a[w] & b[w]);
  int found = -1;
  for_each_bit(a, b, rows.words, [&](int k) {
    if (counts[k] == common) {
      found = k;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<int> bound_table(const LeqTable& leq, int n, bool meets,
                             bool parallel) {
  BitRows rows = meets ? down_rows(leq, n) : up_rows(leq, n);
  std::vector<int> counts(n);
  for (int k = 0; k < n; ++k) counts[k] = popcount_row(rows.row(k), rows.words);
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        table[static_cast<std::size_t>(i) * n + j] =
            bound_of_pair(rows, counts, i, j);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        table[static_cast<std::size_t>(i) * n + j] =
            bound_of_pair(rows, counts, i, j);
      }
    }
  }
  return table;
}

}  // namespace

std::vector<Triple> associativity_violations_serial(const MulTable& mul, int n,
                                                    std::size_t max_witnesses) {
  std::vector<Triple> out;
  for (int a = 0; a < n && out.size() < max_witnesses; ++a) {
    for (int b = 0; b < n && out.size() < max_witnesses; ++b) {
      const int ab = mul[static_cast<std::size_t>(a) * n + b];
      for (int c = 0; c < n && out.size() < max_witnesses; ++c) {
        const int bc = mul[static_cast<std::size_t>(b) * n + c];
        if (mul[static_cast<std::size_t>(ab) * n + c] !=
            mul[static_cast<std::size_t>(a) * n + bc]) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

std::vector<Triple> associativity_violations_parallel(
    const MulTable& mul, int n, std::size_t max_witnesses) {
  std::vector<Triple> out;
#pragma omp parallel
  {
    std::vector<Triple> local;
#pragma omp for schedule(static) nowait
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = mul[static_cast<std::size_t>(a) * n + b];
        for (int c = 0; c < n; ++c) {
          const int bc = mul[static_cast<std::size_t>(b) * n + c];
          if (mul[static_cast<std::size_t>(ab) * n + c] !=
              mul[static_cast<std::size_t>(a) * n + bc]) {
            if (local.size() < max_witnesses) local.push_back({a, b, c});
          }
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  if (out.size() > max_witnesses) out.resize(max_witnesses);
  return out;
}

std::vector<Triple> associativity_violations(const MulTable& mul, int n,
                                             std::size_t max_witnesses) {
  return par::enabled()
             ? associativity_violations_parallel(mul, n, max_witnesses)
             : associativity_violations_serial(mul, n, max_witnesses);
}

std::vector<int> meet_table_serial(const LeqTable& leq, int n) {
  return bound_table(leq, n, true, false);
}
std::vector<int> meet_table_parallel(const LeqTable& leq, int n) {
  return bound_table(leq, n, true, true);
}
std::vector<int> meet_table(const LeqTable& leq, int n) {
  return bound_table(leq, n, true, par::enabled());
}

std::vector<int> join_table_serial(const LeqTable& leq, int n) {
  return bound_table(leq, n, false, false);
}
std::vector<int> join_table_parallel(const LeqTable& leq, int n) {
  return bound_table(leq, n, false, true);
}
std::vector<int> join_table(const LeqTable& leq, int n) {
  return bound_table(leq, n, false, par::enabled());
}

namespace {

bool arrow_holds(const LeqTable& leq, const std::vector<int>& meet, int n,
                 int zero, int s, int t) {
  for (int r = 0; r < n; ++r) {
    if (r == zero || !leq[static_cast<std::size_t>(r) * n + s]) continue;
    if (meet[static_cast<std::size_t>(r) * n + t] == zero) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint8_t> arrow_table_serial(const LeqTable& leq,
                                             const std::vector<int>& meet,
                                             int n, int zero) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      out[static_cast<std::size_t>(s) * n + t] =
          arrow_holds(leq, meet, n, zero, s, t) ? 1 : 0;
    }
  }
  return out;
}

std::vector<std::uint8_t> arrow_table_parallel(const LeqTable& leq,
                                               const std::vector<int>& meet,
                                               int n, int zero) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n, 0);
#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      out[static_cast<std::size_t>(s) * n + t] =
          arrow_holds(leq, meet, n, zero, s, t) ? 1 : 0;
    }
  }
  return out;
}

std::vector<std::uint8_t> arrow_table(const LeqTable& leq,
                                      const std::vector<int>& meet, int n,
                                      int zero) {
  return par::enabled() ? arrow_table_parallel(leq, meet, n, zero)
                        : arrow_table_serial(leq, meet, n, zero);
}

namespace {

bool below(const MulTable& mul, int n, const std::vector<int>& idempotents,
           int s, int t) {
  for (int u : idempotents) {
    if (mul[static_cast<std::size_t>(t) * n + u] == s) return true;
  }
  return false;
}

}  // namespace

LeqTable natural_order_serial(const MulTable& mul, int n,
                              const std::vector<int>& idempotents) {
  LeqTable out(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      out[static_cast<std::size_t>(s) * n + t] =
          below(mul, n, idempotents, s, t) ? 1 : 0;
    }
  }
  return out;
}

LeqTable natural_order_parallel(const MulTable& mul, int n,
                                const std::vector<int>& idempotents) {
  LeqTable out(static_cast<std::size_t>(n) * n, 0);
#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      out[static_cast<std::size_t>(s) * n + t] =
          below(mul, n, idempotents, s, t) ? 1 : 0;
    }
  }
  return out;
}

LeqTable natural_order(const MulTable& mul, int n,
                       const std::vector<int>& idempotents) {
  return par::enabled() ? natural_order_parallel(mul, n, idempotents)
                        : natural_order_serial(mul, n, idempotents);
}

}  // namespace gstone::kernels
