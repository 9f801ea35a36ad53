#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "quantoid/debug.hpp"
#include "quantoid/set_function.hpp"
#include "quantoid/sharing.hpp"

namespace quantoid {

/// Assignment of pairwise disjoint blocks of an expanded ground set to the
/// elements of a source ground set.
struct BlockMap {
  GroundSet source;
  /// blocks[i] lists indices into `expanded`.
  std::vector<std::vector<int>> blocks;
  GroundSet expanded;

  /// Canonical map: element i receives sizes[i] fresh elements named
  /// "<label>.<k>", k = 0, 1, ..., laid out block after block.
  static BlockMap canonical(const GroundSet& source, std::span<const int> sizes);

  /// Throws InvalidArgument if blocks overlap or miss expanded elements.
  void validate() const;

  Mask block_mask(int i) const;
  /// Union of the blocks of the elements of `source_subset`.
  Mask image(Mask source_subset) const;
  int block_size(int i) const { return static_cast<int>(blocks.at(static_cast<std::size_t>(i)).size()); }

  bool operator==(const BlockMap&) const = default;
};

enum class ExpansionKind { matroid, quantoid, two_factor };

std::string_view expansion_kind_name(ExpansionKind kind) noexcept;

enum class Minimization {
  /// Minimize over the sets adapted to K only.
  adapted,
  /// Minimize over every J subset of N.
  full,
};

inline constexpr int kDefaultExpansionCap = 20;

/// Reads QUANTOID_EXPANSION_CAP, falling back to kDefaultExpansionCap.
/// Throws InvalidArgument on a malformed or out-of-range value.
int expansion_cap_from_env();

struct ExpansionOptions {
  /// Upper bound on the size of the expanded ground set, checked before
  /// any table is allocated.
  int cap = kDefaultExpansionCap;
  Minimization method = Minimization::adapted;
  /// Recompute with the other minimization and require equality. Defaults
  /// to the global debug switch.
  bool cross_check = debug_checks();
  /// Fill Expansion::minimizers with the smallest-mask minimizing J per K
  /// among the sets searched.
  bool record_minimizers = false;
};

struct Expansion {
  BlockMap map;
  SetFunction expanded;
  ExpansionKind kind = ExpansionKind::matroid;
  /// Two-factor only: the pair of free-expansion copies forming each block.
  std::vector<std::array<std::string, 2>> pairs;
  /// Optional per-K minimizer, indexed by expanded mask.
  std::vector<Mask> minimizers;
};

/// The sets J with {i : block(i) meets K} >= J >= {i : block(i) nonempty,
/// block(i) within K}, sorted by mask.
Family adapted_sets(const BlockMap& map, Mask k);

/// Free expansion h_phi(K) = min_J [h(J) + |K \ phi(J)|] of an integer
/// polymatroid; the result is a matroid on sum_i h(i) elements.
/// Throws NotIntegerPolymatroid, ExpansionTooLarge.
Expansion free_expand_polymatroid(const SetFunction& h, const ExpansionOptions& options = {});
/// Same with caller-supplied blocks; block i must have h(i) elements.
Expansion free_expand_polymatroid(const SetFunction& h, BlockMap map,
                                  const ExpansionOptions& options = {});

/// Free expansion e_psi(K) = min_J [e(J) + |K xor psi(J)|] of an integer
/// polyquantoid; the result is a quantoid.
/// Throws NotIntegerPolyquantoid, ExpansionTooLarge.
Expansion free_expand_polyquantoid(const SetFunction& e, const ExpansionOptions& options = {});
Expansion free_expand_polyquantoid(const SetFunction& e, BlockMap map,
                                   const ExpansionOptions& options = {});

/// 2-factor of the canonical free expansion of an integer polymatroid with
/// even singleton values. Copies "<i>.<2k>" and "<i>.<2k+1>" form the block
/// named "<i>.<2k>+<i>.<2k+1>"; h_w(M) = h_phi(union of M).
/// Throws OddSingletonValue, NotIntegerPolymatroid, ExpansionTooLarge.
Expansion two_factor(const SetFunction& h, const ExpansionOptions& options = {});

/// For an integer polyquantoid e: builds the 2-factor h_w of the free
/// expansion of hat(e) and checks vee(h_w) against the free expansion e_psi
/// built on the same blocks.
bool verify_lemma52(const SetFunction& e, const ExpansionOptions& options = {});

}  // namespace quantoid
