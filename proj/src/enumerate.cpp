#include "quantoid/enumerate.hpp"

namespace quantoid {

Enumerator::Enumerator(Kind kind, int n, int cap)
    : kind_(kind), ground_(GroundSet::numbered(n)), cap_(cap), values_(ground_.subset_count(), 0) {
  if (n < 0 || n > GroundSet::kMaxSize) {
    throw Error(Errc::GroundSetTooLarge, "enumeration over " + std::to_string(n) + " elements");
  }
  if (cap < 0) exhausted_ = true;
}

// Checks every axiom instance whose largest subset is m; all other subsets it
// mentions have smaller masks and are already assigned.
bool Enumerator::feasible(Mask m) const {
  const int v = values_[m];
  if (m == 0) return v == 0;

  if (kind_ == Kind::polymatroid) {
    bool ok = true;
    for_each_element(m, [&](int i) { ok = ok && values_[m ^ bit(i)] <= v; });
    if (!ok) return false;
  } else {
    const Mask complement = ground_.full() ^ m;
    if (complement < m && values_[complement] != v) return false;
  }

  const int n = ground_.size();
  for (int i = 0; i < n; ++i) {
    if (!contains(m, i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!contains(m, j)) continue;
      if (v + values_[m ^ bit(i) ^ bit(j)] > values_[m ^ bit(i)] + values_[m ^ bit(j)]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<SetFunction> Enumerator::next() {
  if (exhausted_) return std::nullopt;
  const int last = static_cast<int>(values_.size()) - 1;
  int m = last;
  if (!started_) {
    started_ = true;
    m = 0;
    values_[0] = -1;
  }
  while (true) {
    auto& slot = values_[static_cast<std::size_t>(m)];
    ++slot;
    while (slot <= cap_ && !feasible(static_cast<Mask>(m))) ++slot;
    if (slot > cap_) {
      if (m == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      --m;
      continue;
    }
    if (m == last) break;
    ++m;
    values_[static_cast<std::size_t>(m)] = -1;
  }
  std::vector<Rational> table;
  table.reserve(values_.size());
  for (int v : values_) table.emplace_back(v);
  return SetFunction(ground_, std::move(table));
}

std::vector<SetFunction> enumerate(Kind kind, int n, int cap) {
  std::vector<SetFunction> out;
  Enumerator it(kind, n, cap);
  while (auto f = it.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace quantoid
