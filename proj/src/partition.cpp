#include "centra/partition.hpp"

#include <charconv>
#include <functional>

#include "centra/error.hpp"

namespace centra {

Partition normalize_partition(std::span<const long> parts) {
  Partition out;
  for (long p : parts) {
    if (p < 0) fail(ErrorCode::NonPositivePart, "negative part " + std::to_string(p));
    if (p > 0) out.push_back(std::size_t(p));
  }
  return out;
}

void validate_partition(std::span<const std::size_t> alpha) {
  if (alpha.empty()) fail(ErrorCode::NonPositivePart, "empty partition");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) fail(ErrorCode::NonPositivePart, "part " + std::to_string(i + 1) + " is zero");
    if (i > 0 && alpha[i] > alpha[i - 1])
      fail(ErrorCode::NotSortedDescending, "parts must be nonincreasing: " + format_partition(alpha));
  }
}

Partition conjugate_partition(std::span<const std::size_t> alpha) {
  validate_partition(alpha);
  Partition tau(alpha.front(), 0);
  for (std::size_t j = 0; j < tau.size(); ++j)
    for (auto a : alpha)
      if (a >= j + 1) ++tau[j];
  return tau;
}

SegreData segre_indexing(std::span<const std::size_t> alpha) {
  validate_partition(alpha);
  SegreData d;
  d.alpha.assign(alpha.begin(), alpha.end());
  d.tau = conjugate_partition(alpha);
  std::size_t running = 0;
  for (auto a : alpha) {
    running += a;
    d.sigma.push_back(running);
    if (d.beta.empty() || d.beta.back() != a) {
      d.beta.push_back(a);
      d.freq.push_back(0);
    }
    ++d.freq.back();
  }
  std::size_t cum = 0;
  for (auto n : d.freq) d.cumfreq.push_back(cum += n);
  return d;
}

std::size_t segre_weighted_sum(std::span<const std::size_t> alpha) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) total += (2 * i + 1) * alpha[i];
  return total;
}

std::size_t sum_of_squares(std::span<const std::size_t> tau) {
  std::size_t total = 0;
  for (auto t : tau) total += t * t;
  return total;
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  if (n > 0) extend(n, n);
  return out;
}

std::string format_partition(std::span<const std::size_t> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition alpha;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string_view token(text.data() + start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      fail(ErrorCode::ParseError, "bad partition '" + text + "'");
    if (value <= 0) fail(ErrorCode::NonPositivePart, "part " + std::to_string(value) + " in '" + text + "'");
    alpha.push_back(std::size_t(value));
    start = end + 1;
  }
  validate_partition(alpha);
  return alpha;
}

}  // namespace centra
