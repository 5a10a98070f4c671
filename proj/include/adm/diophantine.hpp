#ifndef ADM_DIOPHANTINE_HPP
#define ADM_DIOPHANTINE_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace adm {

/// One nonnegative-integer solution (n_1, ..., n_{m-k+1}) of
///
///   sum_i n_i = k    and    sum_i i * n_i = m,
///
/// stored sparsely: only indices with multiplicity >= 1 appear, in strictly
/// increasing index order. Equivalently, a partition of m into exactly k
/// parts written in multiplicity form.
class MultiplicityVector {
 public:
  struct Entry {
    int index;         // the subscript i of u_i
    int multiplicity;  // the exponent n_i, always >= 1

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Validates the class invariants (positive entries, increasing indices,
  /// sums matching m and k, max index <= m-k+1); throws std::invalid_argument
  /// when they do not hold.
  MultiplicityVector(int m, int k, std::vector<Entry> entries);

  int m() const { return m_; }
  int k() const { return k_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// The exponent n_index, zero when the index is not stored.
  int multiplicity_of(int index) const;

  /// The underlying partition of m, parts in non-increasing order.
  std::vector<int> partition() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  int m_;
  int k_;
  std::vector<Entry> entries_;
};

/// Canonical order: a precedes b when a's underlying partition is
/// lexicographically greater (largest-part-first). Total within fixed (m, k).
bool canonical_less(const MultiplicityVector& a, const MultiplicityVector& b);

/// All solutions of the reduced system over n_1..n_{m-k+1}, each exactly
/// once, in canonical order. Empty when k > m. Throws on m < 1 or k < 1.
std::vector<MultiplicityVector> enumerate(int m, int k);

/// All solutions of the full system over n_1..n_m. Same solution set as
/// enumerate(m, k); implemented by direct bounded search over the whole
/// index range so the equivalence is a checkable theorem, not a tautology.
std::vector<MultiplicityVector> enumerate_full(int m, int k);

/// |enumerate(m, k)| = number of partitions of m into exactly k parts,
/// computed by recurrence without enumerating. Throws on m < 1 or k < 1.
std::uint64_t count(int m, int k);

}  // namespace adm

#endif  // ADM_DIOPHANTINE_HPP
