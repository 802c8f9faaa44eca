#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "bottres/error.hpp"

namespace bottres {

/// An unordered multiset of positive integers, stored descending. The weight
/// is the sum of the parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(Errc::BadParams, "partition must have at least one part");
    for (int p : parts_) {
      if (p < 1) fail(Errc::BadParams, "partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int largest_part() const { return parts_.front(); }

  /// Comma-joined parts, e.g. "2,1".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (token.empty()) fail(Errc::ParseError, "empty part in partition '" + std::string(text) + "'");
      int value = 0;
      for (char ch : token) {
        if (ch < '0' || ch > '9') fail(Errc::ParseError, "bad partition part '" + std::string(token) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1000000) fail(Errc::ParseError, "partition part too large");
      }
      if (value < 1) fail(Errc::ParseError, "partition parts must be positive");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

namespace detail {
inline void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    emit_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}
}  // namespace detail

/// All partitions of m in reverse-lexicographic order: (m) first, (1,..,1) last.
inline std::vector<Partition> partitions_of(int m) {
  if (m < 1) fail(Errc::BadParams, "partitions_of requires m >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  detail::emit_partitions(m, m, current, out);
  return out;
}

}  // namespace bottres
