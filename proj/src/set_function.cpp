#include "quantoid/set_function.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace quantoid {

SetFunction build(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& values) {
  GroundSet ground(std::move(labels));
  std::vector<std::optional<Rational>> table(ground.subset_count());
  for (const auto& [key, text] : values) {
    const Mask m = ground.parse_key(key);
    if (table[m]) throw Error(Errc::DuplicateSubset, ground.key(m));
    table[m] = parse_rational(text);
  }
  std::vector<Rational> dense;
  dense.reserve(table.size());
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (!table[m]) throw Error(Errc::MissingSubset, ground.key(static_cast<Mask>(m)));
    dense.push_back(std::move(*table[m]));
  }
  return SetFunction(std::move(ground), std::move(dense));
}

SetFunction build(std::vector<std::string> labels, std::vector<Rational> values) {
  GroundSet ground(std::move(labels));
  if (values.size() != ground.subset_count()) {
    throw Error(Errc::MissingSubset, "expected " + std::to_string(ground.subset_count()) +
                                         " values, got " + std::to_string(values.size()));
  }
  return SetFunction(std::move(ground), std::move(values));
}

bool isomorphic(const SetFunction& f, const SetFunction& g) {
  const int n = f.size();
  if (n != g.size()) return false;
  if (n > 10) throw Error(Errc::InvalidArgument, "isomorphism test limited to 10 elements");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t m = 0; same && m < f.ground().subset_count(); ++m) {
      Mask image = 0;
      for_each_element(static_cast<Mask>(m), [&](int i) { image |= bit(perm[static_cast<std::size_t>(i)]); });
      same = f[static_cast<Mask>(m)] == g[image];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string to_string(const SetFunction& f) {
  std::ostringstream out;
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    out << '{' << f.ground().key(static_cast<Mask>(m)) << "}: " << to_string(f[static_cast<Mask>(m)])
        << '\n';
  }
  return out.str();
}

}  // namespace quantoid
