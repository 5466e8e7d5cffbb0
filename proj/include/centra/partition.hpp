#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace centra {

using Partition = std::vector<std::size_t>;

/// Bookkeeping for a Segre characteristic alpha (a partition of r into m
/// nonincreasing parts) and the sequences used to reorder its chains.
struct SegreData {
  Partition alpha;                 ///< alpha_1 >= ... >= alpha_m >= 1
  Partition tau;                   ///< conjugate partition, length alpha_1
  std::vector<std::size_t> beta;   ///< distinct values of alpha, decreasing
  std::vector<std::size_t> freq;   ///< multiplicity of each beta
  std::vector<std::size_t> cumfreq;
  std::vector<std::size_t> sigma;  ///< prefix sums of alpha

  std::size_t r() const { return sigma.empty() ? 0 : sigma.back(); }
  std::size_t m() const { return alpha.size(); }
  std::size_t h() const { return beta.size(); }
  std::size_t levels() const { return alpha.empty() ? 0 : alpha.front(); }
};

/// Drops zero parts; the caller's order is kept.
Partition normalize_partition(std::span<const long> parts);

/// Throws NonPositivePart or NotSortedDescending.
void validate_partition(std::span<const std::size_t> alpha);

Partition conjugate_partition(std::span<const std::size_t> alpha);

SegreData segre_indexing(std::span<const std::size_t> alpha);

/// sum_i (2i - 1) alpha_i
std::size_t segre_weighted_sum(std::span<const std::size_t> alpha);

/// sum_j tau_j^2
std::size_t sum_of_squares(std::span<const std::size_t> tau);

/// All partitions of n, each nonincreasing, in reverse lexicographic order.
std::vector<Partition> partitions_of(std::size_t n);

/// Comma-separated parts, e.g. "5,4,3,1,1".
std::string format_partition(std::span<const std::size_t> parts);

/// Parses "5,4,3,1,1" and validates strictly; use normalize_partition to drop zero parts.
Partition parse_partition(const std::string& text);

}  // namespace centra
