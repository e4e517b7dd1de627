#include "equipart/core.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>

namespace equipart {

ProblemInstance make_instance(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) {
    throw Error("instance requires n >= 1 and k >= 1");
  }
  if (k > n) {
    throw Error("instance requires k <= n");
  }
  if (n > kMaxN) {
    throw Overflow("n exceeds the exact-arithmetic bound 2^20");
  }
  const std::int64_t total = n * (n + 1) / 2;
  if (total % k != 0) {
    throw NonIntegralTarget("2k does not divide n(n+1); no balanced partition exists");
  }
  return ProblemInstance{n, k, total / k};
}

AscendingPartition::AscendingPartition(std::vector<std::int64_t> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw Error("partition must have at least one part");
  }
  std::int64_t prev = 0;
  for (std::int64_t p : parts_) {
    if (p < 1) {
      throw Error("parts must be positive");
    }
    if (p < prev) {
      throw NotAscending("parts must be nondecreasing");
    }
    prev = p;
    n_ += p;
  }
}

std::vector<Block> AscendingPartition::blocks() const {
  std::vector<Block> out;
  for (std::int64_t p : parts_) {
    if (!out.empty() && out.back().value == p) {
      ++out.back().count;
    } else {
      out.push_back(Block{p, 1});
    }
  }
  return out;
}

std::string AscendingPartition::to_string() const {
  std::string out;
  for (const Block& b : blocks()) {
    if (!out.empty()) out += ',';
    out += std::to_string(b.value);
    if (b.count > 1) {
      out += '^';
      out += std::to_string(b.count);
    }
  }
  return out;
}

std::string format_partition(const AscendingPartition& p) { return p.to_string(); }

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    throw SyntaxError("expected a positive integer in partition text");
  }
  pos += static_cast<std::size_t>(ptr - begin);
  if (value < 1) {
    throw SyntaxError("partition values must be positive");
  }
  return value;
}

}  // namespace

AscendingPartition parse_partition(std::string_view text) {
  if (text.empty()) {
    throw SyntaxError("empty partition text");
  }
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  std::int64_t prev_value = 0;
  while (true) {
    const std::int64_t value = parse_int(text, pos);
    std::int64_t count = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      count = parse_int(text, pos);
    }
    if (value <= prev_value) {
      throw NotAscending("block values must be strictly increasing");
    }
    prev_value = value;
    for (std::int64_t i = 0; i < count; ++i) parts.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw SyntaxError("unexpected character in partition text");
    }
    ++pos;
    if (pos == text.size()) {
      throw SyntaxError("trailing comma in partition text");
    }
  }
  return AscendingPartition(std::move(parts));
}

Assignment::Assignment(ProblemInstance inst, std::vector<std::vector<int>> parts)
    : inst_(inst), parts_(std::move(parts)) {
  if (static_cast<std::int64_t>(parts_.size()) != inst_.k) {
    throw Error("assignment part count does not match instance");
  }
  part_of_.assign(static_cast<std::size_t>(inst_.n) + 1, -1);
  sums_.resize(parts_.size());
  std::size_t prev_size = 0;
  bool first = true;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto& part = parts_[i];
    if (part.empty()) {
      throw Error("assignment parts must be nonempty");
    }
    if (!first && part.size() < prev_size) {
      throw Error("assignment parts must be ordered by nondecreasing size");
    }
    first = false;
    prev_size = part.size();
    std::sort(part.begin(), part.end());
    std::int64_t sum = 0;
    for (int e : part) {
      if (e < 1 || e > inst_.n) {
        throw Error("assignment element outside [1, n]");
      }
      if (part_of_[static_cast<std::size_t>(e)] != -1) {
        throw Error("assignment element repeated");
      }
      part_of_[static_cast<std::size_t>(e)] = static_cast<std::int32_t>(i);
      sum += e;
    }
    sums_[i] = sum;
  }
  for (std::int64_t e = 1; e <= inst_.n; ++e) {
    if (part_of_[static_cast<std::size_t>(e)] == -1) {
      throw Error("assignment does not cover [1, n]");
    }
  }
  d_ = recompute_d();
}

std::int64_t Assignment::recompute_d() const {
  // Deviations fit in int64; the squared sum is overflow-checked so the
  // cached d stays exact even for adversarial assignments near kMaxN.
  std::int64_t d = 0;
  for (std::int64_t sum : sums_) {
    const std::int64_t dev = sum - inst_.s;
    std::int64_t sq = 0;
    if (__builtin_mul_overflow(dev, dev, &sq) || __builtin_add_overflow(d, sq, &d)) {
      throw Overflow("d-value exceeds the exact signed 64-bit range");
    }
  }
  return d;
}

int Assignment::part_of(int element) const {
  if (element < 1 || element > inst_.n) {
    throw ElementNotFound("element outside [1, n]");
  }
  return part_of_[static_cast<std::size_t>(element)];
}

AscendingPartition Assignment::shape() const {
  std::vector<std::int64_t> sizes;
  sizes.reserve(parts_.size());
  for (const auto& part : parts_) sizes.push_back(static_cast<std::int64_t>(part.size()));
  return AscendingPartition(std::move(sizes));
}

bool Assignment::implements(const AscendingPartition& p) const {
  if (p.k() != inst_.k) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (static_cast<std::int64_t>(parts_[i].size()) != p.parts()[i]) return false;
  }
  return true;
}

std::int64_t Assignment::predicted_delta(int a, int b) const {
  const int i = part_of(a);
  const int j = part_of(b);
  if (i == j) return 0;
  const std::int64_t t = static_cast<std::int64_t>(b) - a;
  const std::int64_t u = sums_[static_cast<std::size_t>(j)] - sums_[static_cast<std::size_t>(i)];
  return -2 * t * (u - t);
}

void Assignment::apply_exchange(int a, int b) {
  const int i = part_of(a);
  const int j = part_of(b);
  if (i == j) return;

  auto& pi = parts_[static_cast<std::size_t>(i)];
  auto& pj = parts_[static_cast<std::size_t>(j)];
  pi.erase(std::lower_bound(pi.begin(), pi.end(), a));
  pi.insert(std::upper_bound(pi.begin(), pi.end(), b), b);
  pj.erase(std::lower_bound(pj.begin(), pj.end(), b));
  pj.insert(std::upper_bound(pj.begin(), pj.end(), a), a);

  part_of_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(j);
  part_of_[static_cast<std::size_t>(b)] = static_cast<std::int32_t>(i);

  const std::int64_t t = static_cast<std::int64_t>(b) - a;
  const std::int64_t u = sums_[static_cast<std::size_t>(j)] - sums_[static_cast<std::size_t>(i)];
  sums_[static_cast<std::size_t>(i)] += t;
  sums_[static_cast<std::size_t>(j)] -= t;
  d_ += -2 * t * (u - t);
  assert(d_ == recompute_d());
}

}  // namespace equipart
