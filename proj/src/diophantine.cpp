#include "adm/diophantine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adm {

namespace {

void require_domain(int m, int k) {
  if (m < 1 || k < 1) {
    throw std::invalid_argument("require m >= 1 and k >= 1, got m=" +
                                std::to_string(m) + " k=" + std::to_string(k));
  }
}

// Converts a partition with parts in non-increasing order to sparse
// multiplicity form (entries ascending by index).
MultiplicityVector to_multiplicities(int m, int k, const std::vector<int>& parts) {
  std::vector<MultiplicityVector::Entry> entries;
  for (auto it = parts.rbegin(); it != parts.rend();) {
    const int value = *it;
    int run = 0;
    for (; it != parts.rend() && *it == value; ++it) ++run;
    entries.push_back({value, run});
  }
  return MultiplicityVector(m, k, std::move(entries));
}

// Partitions of `remaining` into exactly `parts_left` parts, each in
// [1, max_part], parts chosen largest-first. Emits in decreasing
// lexicographic order of the partition.
void descend_partitions(int remaining, int parts_left, int max_part,
                        std::vector<int>& stack, int m, int k,
                        std::vector<MultiplicityVector>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(to_multiplicities(m, k, stack));
    return;
  }
  const int hi = std::min(max_part, remaining - (parts_left - 1));
  const int lo = (remaining + parts_left - 1) / parts_left;  // ceil
  for (int part = hi; part >= lo; --part) {
    stack.push_back(part);
    descend_partitions(remaining - part, parts_left - 1, part, stack, m, k, out);
    stack.pop_back();
  }
}

// Direct search over the full system: choose n_i for i = m down to 1 with
// remaining power sum `rem_k` and subscript sum `rem_m`. Any surviving index
// above m-k+1 would be found here, so comparing against enumerate() tests
// the tail-vanishing result rather than assuming it.
void search_full(int index, int rem_k, int rem_m,
                 std::vector<MultiplicityVector::Entry>& chosen, int m, int k,
                 std::vector<MultiplicityVector>& out) {
  if (rem_k > rem_m || rem_m > index * rem_k) return;  // indices are 1..index
  if (index == 0) {
    // rem_k == rem_m == 0 exactly here, by the pruning above.
    std::vector<MultiplicityVector::Entry> entries(chosen.rbegin(), chosen.rend());
    out.push_back(MultiplicityVector(m, k, std::move(entries)));
    return;
  }
  const int max_n = std::min(rem_k, rem_m / index);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) chosen.push_back({index, n});
    search_full(index - 1, rem_k - n, rem_m - index * n, chosen, m, k, out);
    if (n > 0) chosen.pop_back();
  }
}

}  // namespace

MultiplicityVector::MultiplicityVector(int m, int k, std::vector<Entry> entries)
    : m_(m), k_(k), entries_(std::move(entries)) {
  require_domain(m, k);
  int power_sum = 0;
  int subscript_sum = 0;
  int previous_index = 0;
  for (const Entry& e : entries_) {
    if (e.index <= previous_index || e.multiplicity < 1) {
      throw std::invalid_argument("multiplicity entries must be positive with strictly increasing indices");
    }
    previous_index = e.index;
    power_sum += e.multiplicity;
    subscript_sum += e.index * e.multiplicity;
  }
  if (power_sum != k_ || subscript_sum != m_) {
    throw std::invalid_argument("multiplicities do not solve the (m, k) system");
  }
  if (!entries_.empty() && entries_.back().index > m_ - k_ + 1) {
    throw std::invalid_argument("index exceeds m - k + 1");
  }
}

int MultiplicityVector::multiplicity_of(int index) const {
  for (const Entry& e : entries_) {
    if (e.index == index) return e.multiplicity;
    if (e.index > index) break;
  }
  return 0;
}

std::vector<int> MultiplicityVector::partition() const {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(k_));
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    parts.insert(parts.end(), static_cast<std::size_t>(it->multiplicity), it->index);
  }
  return parts;
}

bool canonical_less(const MultiplicityVector& a, const MultiplicityVector& b) {
  const std::vector<int> pa = a.partition();
  const std::vector<int> pb = b.partition();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<MultiplicityVector> enumerate(int m, int k) {
  require_domain(m, k);
  std::vector<MultiplicityVector> out;
  if (k > m) return out;
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(k));
  // The bound m-k+1 on the largest part is implied by "exactly k parts".
  descend_partitions(m, k, m - k + 1, stack, m, k, out);
  return out;
}

std::vector<MultiplicityVector> enumerate_full(int m, int k) {
  require_domain(m, k);
  std::vector<MultiplicityVector> out;
  if (k > m) return out;
  std::vector<MultiplicityVector::Entry> chosen;
  search_full(m, k, m, chosen, m, k, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t count(int m, int k) {
  require_domain(m, k);
  if (k > m) return 0;
  // p(m, k) = p(m-1, k-1) + p(m-k, k), row-by-row over k.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;  // p(j, 0) = [j == 0]
  std::vector<std::uint64_t> next(row.size());
  for (int parts = 1; parts <= k; ++parts) {
    for (int total = 0; total <= m; ++total) {
      std::uint64_t value = 0;
      if (total >= 1) value += row[static_cast<std::size_t>(total) - 1];
      if (total >= parts) value += next[static_cast<std::size_t>(total - parts)];
      next[static_cast<std::size_t>(total)] = value;
    }
    row.swap(next);
    std::fill(next.begin(), next.end(), 0);
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace adm
