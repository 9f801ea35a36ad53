#include "quantoid/ground_set.hpp"

#include <algorithm>

#include "quantoid/error.hpp"

namespace quantoid {

GroundSet::GroundSet(std::vector<std::string> labels, int max_size) : labels_(std::move(labels)) {
  const int hard_limit = std::min(max_size, kMaxExpandedSize);
  if (size() > hard_limit) {
    throw Error(Errc::GroundSetTooLarge, std::to_string(size()) + " elements, limit " +
                                             std::to_string(hard_limit));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const std::string& label = labels_[i];
    if (label.empty() || label.find(',') != std::string::npos) {
      throw Error(Errc::InvalidLabel, "\"" + label + "\"");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[j] == label) throw Error(Errc::DuplicateLabel, label);
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels), kMaxExpandedSize);
}

std::optional<int> GroundSet::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(Errc::UnknownElement, std::string(label));
}

std::string GroundSet::key(Mask subset) const {
  std::string out;
  for_each_element(subset, [&](int i) {
    if (!out.empty()) out += ',';
    out += label(i);
  });
  return out;
}

Mask GroundSet::parse_key(std::string_view key) const {
  Mask mask = 0;
  if (key.empty()) return mask;
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    const std::string_view part = key.substr(start, comma - start);
    const int i = index_of(part);
    if (contains(mask, i)) {
      throw Error(Errc::MalformedDocument, "element " + std::string(part) +
                                               " repeated in subset key \"" + std::string(key) + "\"");
    }
    mask |= bit(i);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return mask;
}

}  // namespace quantoid
