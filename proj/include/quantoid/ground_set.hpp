#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quantoid/bits.hpp"

namespace quantoid {

/// Ordered, labeled finite ground set. Element i corresponds to bit i of a
/// subset mask.
class GroundSet {
 public:
  /// Limit for set functions read from documents or built by users.
  static constexpr int kMaxSize = 16;
  /// Hard limit for internally constructed ground sets (free expansions).
  static constexpr int kMaxExpandedSize = 24;

  GroundSet() = default;

  /// Throws DuplicateLabel, InvalidLabel (empty or containing ','), or
  /// GroundSetTooLarge when more than `max_size` labels are given.
  explicit GroundSet(std::vector<std::string> labels, int max_size = kMaxSize);

  /// Labels "1", "2", ..., "n".
  static GroundSet numbered(int n);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Mask full() const noexcept { return full_mask(size()); }
  std::size_t subset_count() const noexcept { return std::size_t{1} << size(); }

  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<int> find(std::string_view label) const;
  /// Throws UnknownElement.
  int index_of(std::string_view label) const;

  /// Serialized subset key: labels in ground-set order joined by ','.
  std::string key(Mask subset) const;
  /// Inverse of key(). Labels may appear in any order but not twice.
  /// Throws UnknownElement or MalformedDocument.
  Mask parse_key(std::string_view key) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace quantoid
