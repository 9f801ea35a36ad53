#include "quantoid/expansion.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "quantoid/classify.hpp"
#include "quantoid/correspondence.hpp"

namespace quantoid {
namespace {

enum class Distance { difference, symmetric };

// Evaluates min_J [f(J) + distance(K, blocks of J)] where the distance only
// depends on the per-block counts c_i = |block(i) & K|:
//   difference: unit * sum_{i not in J} c_i
//   symmetric:  sum_{i in J} (size_i - c_i) + sum_{i not in J} c_i
class Minimizer {
 public:
  Minimizer(std::vector<long> source, std::vector<int> sizes, Distance distance, long unit)
      : source_(std::move(source)), sizes_(std::move(sizes)), distance_(distance), unit_(unit) {}

  struct Result {
    long value;
    Mask argmin;
  };

  Result minimize(const std::vector<int>& counts, Minimization method) const {
    const int n = static_cast<int>(sizes_.size());
    Mask lower = 0, upper = 0;
    for (int i = 0; i < n; ++i) {
      if (counts[i] > 0) upper |= bit(i);
      if (sizes_[i] > 0 && counts[i] == sizes_[i]) lower |= bit(i);
    }
    if (method == Minimization::full) {
      lower = 0;
      upper = full_mask(n);
    }
    const Mask free = upper & ~lower;
    Result best{std::numeric_limits<long>::max(), 0};
    Mask sub = 0;
    do {
      const Mask j = lower | sub;
      const long value = cost(j, counts);
      if (value < best.value) best = {value, j};
      sub = (sub - free) & free;
    } while (sub != 0);
    return best;
  }

 private:
  long cost(Mask j, const std::vector<int>& counts) const {
    long total = source_[j];
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      const bool in = contains(j, static_cast<int>(i));
      if (distance_ == Distance::difference) {
        if (!in) total += unit_ * counts[i];
      } else {
        total += in ? sizes_[i] - counts[i] : counts[i];
      }
    }
    return total;
  }

  std::vector<long> source_;
  std::vector<int> sizes_;
  Distance distance_;
  long unit_;
};

std::vector<long> integer_values(const SetFunction& f) {
  std::vector<long> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.push_back(v.get_num().get_si());
  return out;
}

void check_cap(long size, int cap) {
  if (size > cap || size > GroundSet::kMaxExpandedSize) {
    throw Error(Errc::ExpansionTooLarge,
                std::to_string(size) + " expanded elements exceed the cap of " +
                    std::to_string(std::min(cap, GroundSet::kMaxExpandedSize)));
  }
}

void require_integer(const SetFunction& f, Kind kind) {
  const Classification c = classify(f);
  if (c.integer && c.is(kind)) return;
  const Errc code =
      kind == Kind::polymatroid ? Errc::NotIntegerPolymatroid : Errc::NotIntegerPolyquantoid;
  throw Error(code, c.is(kind) ? "values are not all integers"
                               : "not a " + std::string(kind_name(kind)));
}

void check_blocks(const SetFunction& f, const BlockMap& map, const std::vector<int>& sizes) {
  if (!(map.source == f.ground())) {
    throw Error(Errc::InvalidArgument, "block map source differs from the ground set");
  }
  map.validate();
  for (int i = 0; i < f.size(); ++i) {
    if (map.block_size(i) != sizes[static_cast<std::size_t>(i)]) {
      throw Error(Errc::InvalidArgument, "block of " + f.ground().label(i) + " has " +
                                             std::to_string(map.block_size(i)) +
                                             " elements, expected " +
                                             std::to_string(sizes[static_cast<std::size_t>(i)]));
    }
  }
}

// Tabulates the minimization over every subset K of the expanded ground set.
Expansion tabulate(BlockMap map, const Minimizer& minimizer, ExpansionKind kind,
                   const ExpansionOptions& options) {
  const int n = map.source.size();
  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(map.block_mask(i));

  // Values depend on K only through the counts; memoize on the mixed-radix
  // code of the count vector.
  std::vector<std::size_t> radix(static_cast<std::size_t>(n), 1);
  std::size_t states = 1;
  for (int i = 0; i < n; ++i) {
    radix[static_cast<std::size_t>(i)] = states;
    states *= static_cast<std::size_t>(map.block_size(i) + 1);
  }
  const Minimization other =
      options.method == Minimization::adapted ? Minimization::full : Minimization::adapted;
  std::vector<long> memo(states, std::numeric_limits<long>::min());
  std::vector<Mask> memo_argmin(states, 0);

  const std::size_t count = map.expanded.subset_count();
  std::vector<Rational> values;
  values.reserve(count);
  std::vector<Mask> minimizers;
  if (options.record_minimizers) minimizers.reserve(count);
  std::vector<int> counts(static_cast<std::size_t>(n));

  for (std::size_t k = 0; k < count; ++k) {
    std::size_t code = 0;
    for (int i = 0; i < n; ++i) {
      counts[static_cast<std::size_t>(i)] = cardinality(static_cast<Mask>(k) & blocks[static_cast<std::size_t>(i)]);
      code += radix[static_cast<std::size_t>(i)] * static_cast<std::size_t>(counts[static_cast<std::size_t>(i)]);
    }
    if (memo[code] == std::numeric_limits<long>::min()) {
      const auto result = minimizer.minimize(counts, options.method);
      if (options.cross_check && minimizer.minimize(counts, other).value != result.value) {
        throw Error(Errc::InternalInvariant, "adapted and full minimization disagree at {" +
                                                 map.expanded.key(static_cast<Mask>(k)) + "}");
      }
      memo[code] = result.value;
      memo_argmin[code] = result.argmin;
    }
    values.emplace_back(memo[code]);
    if (options.record_minimizers) minimizers.push_back(memo_argmin[code]);
  }

  Expansion out;
  out.expanded = SetFunction(map.expanded, std::move(values));
  out.map = std::move(map);
  out.kind = kind;
  out.minimizers = std::move(minimizers);

  if (options.cross_check) {
    const Classification c = classify(out.expanded);
    const bool ok = kind == ExpansionKind::matroid   ? c.matroid
                    : kind == ExpansionKind::quantoid ? c.quantoid
                                                      : c.polymatroid;
    if (!ok) {
      throw Error(Errc::InternalInvariant,
                  std::string(expansion_kind_name(kind)) + " expansion fails its classification");
    }
  }
  return out;
}

std::vector<int> singleton_sizes(const SetFunction& f) {
  std::vector<int> sizes;
  for (int i = 0; i < f.size(); ++i) sizes.push_back(static_cast<int>(f.singleton(i).get_num().get_si()));
  return sizes;
}

long total(const std::vector<int>& sizes) {
  long sum = 0;
  for (int s : sizes) sum += s;
  return sum;
}

}  // namespace

BlockMap BlockMap::canonical(const GroundSet& source, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != source.size()) {
    throw Error(Errc::InvalidArgument, "one block size per source element required");
  }
  BlockMap map;
  map.source = source;
  std::vector<std::string> names;
  for (int i = 0; i < source.size(); ++i) {
    std::vector<int> block;
    for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k) {
      block.push_back(static_cast<int>(names.size()));
      names.push_back(source.label(i) + "." + std::to_string(k));
    }
    map.blocks.push_back(std::move(block));
  }
  map.expanded = GroundSet(std::move(names), GroundSet::kMaxExpandedSize);
  return map;
}

void BlockMap::validate() const {
  if (static_cast<int>(blocks.size()) != source.size()) {
    throw Error(Errc::InvalidArgument, "one block per source element required");
  }
  Mask seen = 0;
  for (const auto& block : blocks) {
    for (int k : block) {
      if (k < 0 || k >= expanded.size() || contains(seen, k)) {
        throw Error(Errc::InvalidArgument, "blocks must be disjoint subsets of the expanded set");
      }
      seen |= bit(k);
    }
  }
  if (seen != expanded.full()) {
    throw Error(Errc::InvalidArgument, "blocks must cover the expanded ground set");
  }
}

Mask BlockMap::block_mask(int i) const {
  Mask m = 0;
  for (int k : blocks.at(static_cast<std::size_t>(i))) m |= bit(k);
  return m;
}

Mask BlockMap::image(Mask source_subset) const {
  Mask m = 0;
  for_each_element(source_subset, [&](int i) { m |= block_mask(i); });
  return m;
}

std::string_view expansion_kind_name(ExpansionKind kind) noexcept {
  switch (kind) {
    case ExpansionKind::matroid: return "matroid";
    case ExpansionKind::quantoid: return "quantoid";
    case ExpansionKind::two_factor: return "two-factor";
  }
  return "matroid";
}

int expansion_cap_from_env() {
  const char* text = std::getenv("QUANTOID_EXPANSION_CAP");
  if (text == nullptr || *text == '\0') return kDefaultExpansionCap;
  char* end = nullptr;
  const long cap = std::strtol(text, &end, 10);
  if (*end != '\0' || cap < 0 || cap > GroundSet::kMaxExpandedSize) {
    throw Error(Errc::InvalidArgument,
                "QUANTOID_EXPANSION_CAP must be an integer in [0, " +
                    std::to_string(GroundSet::kMaxExpandedSize) + "], got \"" + text + "\"");
  }
  return static_cast<int>(cap);
}

Family adapted_sets(const BlockMap& map, Mask k) {
  Mask lower = 0, upper = 0;
  for (int i = 0; i < map.source.size(); ++i) {
    const Mask block = map.block_mask(i);
    if (block & k) upper |= bit(i);
    if (block != 0 && is_subset(block, k)) lower |= bit(i);
  }
  Family out;
  for_each_subset(upper & ~lower, [&](Mask sub) { out.push_back(lower | sub); });
  std::sort(out.begin(), out.end());
  return out;
}

Expansion free_expand_polymatroid(const SetFunction& h, const ExpansionOptions& options) {
  require_integer(h, Kind::polymatroid);
  const auto sizes = singleton_sizes(h);
  check_cap(total(sizes), options.cap);
  return free_expand_polymatroid(h, BlockMap::canonical(h.ground(), sizes), options);
}

Expansion free_expand_polymatroid(const SetFunction& h, BlockMap map,
                                  const ExpansionOptions& options) {
  require_integer(h, Kind::polymatroid);
  const auto sizes = singleton_sizes(h);
  check_cap(total(sizes), options.cap);
  check_blocks(h, map, sizes);
  const Minimizer minimizer(integer_values(h), sizes, Distance::difference, 1);
  return tabulate(std::move(map), minimizer, ExpansionKind::matroid, options);
}

Expansion free_expand_polyquantoid(const SetFunction& e, const ExpansionOptions& options) {
  require_integer(e, Kind::polyquantoid);
  const auto sizes = singleton_sizes(e);
  check_cap(total(sizes), options.cap);
  return free_expand_polyquantoid(e, BlockMap::canonical(e.ground(), sizes), options);
}

Expansion free_expand_polyquantoid(const SetFunction& e, BlockMap map,
                                   const ExpansionOptions& options) {
  require_integer(e, Kind::polyquantoid);
  const auto sizes = singleton_sizes(e);
  check_cap(total(sizes), options.cap);
  check_blocks(e, map, sizes);
  const Minimizer minimizer(integer_values(e), sizes, Distance::symmetric, 1);
  return tabulate(std::move(map), minimizer, ExpansionKind::quantoid, options);
}

Expansion two_factor(const SetFunction& h, const ExpansionOptions& options) {
  require_integer(h, Kind::polymatroid);
  const auto copies = singleton_sizes(h);
  std::vector<int> sizes;
  for (int i = 0; i < h.size(); ++i) {
    if (copies[static_cast<std::size_t>(i)] % 2 != 0) {
      throw Error(Errc::OddSingletonValue, "element " + h.ground().label(i) + " has value " +
                                               std::to_string(copies[static_cast<std::size_t>(i)]));
    }
    sizes.push_back(copies[static_cast<std::size_t>(i)] / 2);
  }
  check_cap(total(copies), options.cap);

  BlockMap map;
  map.source = h.ground();
  std::vector<std::string> names;
  std::vector<std::array<std::string, 2>> pairs;
  for (int i = 0; i < h.size(); ++i) {
    const std::string& label = h.ground().label(i);
    std::vector<int> block;
    for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k) {
      std::array<std::string, 2> pair{label + "." + std::to_string(2 * k),
                                      label + "." + std::to_string(2 * k + 1)};
      block.push_back(static_cast<int>(names.size()));
      names.push_back(pair[0] + "+" + pair[1]);
      pairs.push_back(std::move(pair));
    }
    map.blocks.push_back(std::move(block));
  }
  map.expanded = GroundSet(std::move(names), GroundSet::kMaxExpandedSize);

  // |union(M) \ phi(J)| = 2 |M \ w(J)|.
  const Minimizer minimizer(integer_values(h), sizes, Distance::difference, 2);
  Expansion out = tabulate(std::move(map), minimizer, ExpansionKind::two_factor, options);
  out.pairs = std::move(pairs);
  return out;
}

bool verify_lemma52(const SetFunction& e, const ExpansionOptions& options) {
  require_integer(e, Kind::polyquantoid);
  const Expansion factor = two_factor(hat(e), options);
  const Expansion quantum = free_expand_polyquantoid(e, factor.map, options);
  return vee(factor.expanded) == quantum.expanded;
}

}  // namespace quantoid
