#pragma once

#include <cmath>
#include <string_view>
#include <type_traits>

#include "quantoid/debug.hpp"
#include "quantoid/duality.hpp"
#include "quantoid/set_function.hpp"

namespace quantoid {

/// Which family of rank functions an operation expects.
enum class Kind { polymatroid, polyquantoid };

std::string_view kind_name(Kind kind) noexcept;
/// Throws InvalidArgument for anything but "polymatroid" / "polyquantoid".
Kind parse_kind(std::string_view text);

struct Classification {
  bool normalized = false;
  bool nondecreasing = false;
  bool submodular = false;
  bool complementary = false;
  bool tight = false;
  bool integer = false;
  bool selfdual = false;

  bool polymatroid = false;
  bool polyquantoid = false;
  bool matroid = false;
  bool quantoid = false;

  bool is(Kind kind) const { return kind == Kind::polymatroid ? polymatroid : polyquantoid; }
  bool operator==(const Classification&) const = default;
};

struct ClassifyOptions {
  /// Check submodularity over all pairs (I, J) instead of the local
  /// two-element exchange form. With debug checks enabled both forms are
  /// computed on small ground sets and must agree.
  bool exhaustive_submodular = false;
};

namespace detail {

template <class Scalar>
bool approx_le(const Scalar& a, const Scalar& b, const Scalar& tol) {
  return a <= b + tol;
}

template <class Scalar>
bool approx_eq(const Scalar& a, const Scalar& b, const Scalar& tol) {
  return approx_le(a, b, tol) && approx_le(b, a, tol);
}

}  // namespace detail

template <class Scalar>
bool is_normalized(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  return detail::approx_eq(f[0], Scalar(0), tol);
}

/// f(I) <= f(I + i) for all I and i; equivalent to monotonicity over all
/// nested pairs.
template <class Scalar>
bool is_nondecreasing(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const Mask all = f.full();
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    bool ok = true;
    for_each_element(all & ~mask, [&](int i) {
      ok = ok && detail::approx_le(f[mask], f[mask | bit(i)], tol);
    });
    if (!ok) return false;
  }
  return true;
}

/// Local form: f(I+i) + f(I+j) >= f(I+i+j) + f(I) for I and i != j outside I.
template <class Scalar>
bool is_submodular_local(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const int n = f.size();
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    const Mask base = static_cast<Mask>(m);
    for (int i = 0; i < n; ++i) {
      if (contains(base, i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (contains(base, j)) continue;
        const Scalar lhs = f[base | bit(i)] + f[base | bit(j)];
        const Scalar rhs = f[base | bit(i) | bit(j)] + f[base];
        if (!detail::approx_le(rhs, lhs, tol)) return false;
      }
    }
  }
  return true;
}

/// f(I) + f(J) >= f(I | J) + f(I & J) over all pairs.
template <class Scalar>
bool is_submodular_exhaustive(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const std::size_t count = f.ground().subset_count();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const Mask i = static_cast<Mask>(a);
      const Mask j = static_cast<Mask>(b);
      if (!detail::approx_le(Scalar(f[i | j] + f[i & j]), Scalar(f[i] + f[j]), tol)) return false;
    }
  }
  return true;
}

/// Largest ground set on which debug mode cross-checks both submodularity
/// forms (the exhaustive form is quadratic in the table size).
inline constexpr int kExhaustiveCrossCheckLimit = 8;

template <class Scalar>
bool is_submodular(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0),
                   const ClassifyOptions& options = {}) {
  if (debug_checks() && f.size() <= kExhaustiveCrossCheckLimit) {
    const bool local = is_submodular_local(f, tol);
    const bool exhaustive = is_submodular_exhaustive(f, tol);
    // With a positive tolerance the two forms may legitimately differ at the
    // tolerance boundary, so only exact scalars are cross-checked.
    if (local != exhaustive && tol == Scalar(0)) {
      throw Error(Errc::InternalInvariant, "local and exhaustive submodularity disagree");
    }
    return options.exhaustive_submodular ? exhaustive : local;
  }
  return options.exhaustive_submodular ? is_submodular_exhaustive(f, tol)
                                       : is_submodular_local(f, tol);
}

/// f(I) = f(N \ I) for all I.
template <class Scalar>
bool is_complementary(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const Mask all = f.full();
  for (std::size_t m = 0; m < f.ground().subset_count(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    if (!detail::approx_eq(f[mask], f[all ^ mask], tol)) return false;
  }
  return true;
}

/// f(N \ i) = f(N) for every element i.
template <class Scalar>
bool is_tight(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const Mask all = f.full();
  for (int i = 0; i < f.size(); ++i) {
    if (!detail::approx_eq(f[all ^ bit(i)], f[all], tol)) return false;
  }
  return true;
}

template <class Scalar>
bool is_integer_valued(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  for (const auto& v : f.values()) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (!(std::abs(v - std::round(v)) <= tol)) return false;
    } else {
      if (!is_integer(Rational(v))) return false;
    }
  }
  return true;
}

/// Every singleton value is 0 or 1.
template <class Scalar>
bool has_binary_singletons(const BasicSetFunction<Scalar>& f, const Scalar& tol = Scalar(0)) {
  for (int i = 0; i < f.size(); ++i) {
    const Scalar& v = f.singleton(i);
    if (!detail::approx_eq(v, Scalar(0), tol) && !detail::approx_eq(v, Scalar(1), tol)) {
      return false;
    }
  }
  return true;
}

template <class Scalar>
Classification classify(const BasicSetFunction<Scalar>& f, const Scalar& tol,
                        const ClassifyOptions& options = {}) {
  Classification c;
  c.normalized = is_normalized(f, tol);
  c.nondecreasing = is_nondecreasing(f, tol);
  c.submodular = is_submodular(f, tol, options);
  c.complementary = is_complementary(f, tol);
  c.tight = is_tight(f, tol);
  c.integer = is_integer_valued(f, tol);
  c.selfdual = is_selfdual(f, tol);

  c.polymatroid = c.normalized && c.nondecreasing && c.submodular;
  c.polyquantoid = c.normalized && c.complementary && c.submodular;
  const bool binary = has_binary_singletons(f, tol);
  c.matroid = c.polymatroid && c.integer && binary;
  c.quantoid = c.polyquantoid && c.integer && binary;
  return c;
}

inline Classification classify(const SetFunction& f, const ClassifyOptions& options = {}) {
  return classify(f, Rational(0), options);
}

/// Throws NotAPolymatroid / NotAPolyquantoid unless f belongs to `kind`.
void require_kind(const SetFunction& f, Kind kind);

}  // namespace quantoid
