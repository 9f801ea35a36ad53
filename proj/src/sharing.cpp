#include "quantoid/sharing.hpp"

#include <algorithm>

#include "quantoid/correspondence.hpp"
#include "quantoid/debug.hpp"

namespace quantoid {
namespace {

struct Verdict {
  bool perfect = true;
  Family authorized;
  Mask essential = 0;
  bool ideal = false;
  std::string witness;  // first violated clause when not ideal
};

int checked_dealer(const SetFunction& f, int dealer) {
  if (dealer < 0 || dealer >= f.size()) {
    throw Error(Errc::UnknownElement, "element index " + std::to_string(dealer));
  }
  return dealer;
}

// Exhaustive evaluation of the sharing notions. For polymatroids the
// increment h(d + I) - h(I) must be h(d) or 0 (authorized); for
// polyquantoids e(d) or -e(d) (authorized).
Verdict evaluate(const SetFunction& f, int d, Kind kind) {
  const GroundSet& g = f.ground();
  const Mask dealer = bit(d);
  const Mask rest = f.full() ^ dealer;
  const Rational full = f[dealer];
  const Rational authorized_value = kind == Kind::polymatroid ? Rational(0) : Rational(-full);

  Verdict v;
  for_each_subset(rest, [&](Mask I) {
    const Rational increment = f[I | dealer] - f[I];
    if (increment == authorized_value) {
      v.authorized.push_back(I);
    } else if (increment != full) {
      if (v.perfect) {
        v.witness = "dealer " + g.label(d) + " is not perfect: increment at {" + g.key(I) +
                    "} is " + to_string(increment);
      }
      v.perfect = false;
    }
  });
  std::sort(v.authorized.begin(), v.authorized.end());
  if (!v.perfect) return v;

  for_each_element(rest, [&](int i) {
    for (Mask I : v.authorized) {
      if (!contains(I, i)) continue;
      const Mask without = I ^ bit(i);
      if (f[without | dealer] - f[without] == full) {
        v.essential |= bit(i);
        break;
      }
    }
  });

  v.ideal = true;
  for_each_element(rest, [&](int i) {
    if (!v.ideal) return;
    if (!contains(v.essential, i)) {
      v.ideal = false;
      v.witness = "element " + g.label(i) + " is not essential for dealer " + g.label(d);
    } else if (f.singleton(i) != full) {
      v.ideal = false;
      v.witness = "value " + to_string(f.singleton(i)) + " on element " + g.label(i) +
                  " differs from " + to_string(full) + " on dealer " + g.label(d);
    }
  });
  return v;
}

Extraction extract_from_ideal(const SetFunction& h, int d) {
  const Rational t = h.singleton(d);
  if (t == 0) return {Rational(1), h};
  Extraction out{t, scale(h, Rational(1 / t))};
  if (!classify(out.rank).matroid) {
    throw Error(Errc::InternalInvariant, "extracted rank function is not a matroid");
  }
  return out;
}

}  // namespace

Family minimal_members(const Family& family) {
  Family out;
  for (Mask candidate : family) {
    const bool minimal = std::none_of(family.begin(), family.end(), [&](Mask other) {
      return other != candidate && is_subset(other, candidate);
    });
    if (minimal) out.push_back(candidate);
  }
  return out;
}

SharingReport analyze(const SetFunction& f, int dealer, Kind kind) {
  checked_dealer(f, dealer);
  require_kind(f, kind);

  Verdict v = evaluate(f, dealer, kind);
  if (kind == Kind::polyquantoid && debug_checks()) {
    const Verdict lifted = evaluate(hat(f), dealer, Kind::polymatroid);
    if (lifted.perfect != v.perfect || lifted.authorized != v.authorized ||
        lifted.essential != v.essential || lifted.ideal != v.ideal) {
      throw Error(Errc::InternalInvariant, "polyquantoid sharing disagrees with its hat image");
    }
  }

  SharingReport report;
  report.dealer = dealer;
  report.kind = kind;
  report.perfect = v.perfect;
  report.minimal_authorized = minimal_members(v.authorized);
  report.authorized = std::move(v.authorized);
  report.essential = v.essential;
  report.ideal = v.ideal;
  if (report.ideal) {
    report.extraction = kind == Kind::polymatroid ? extract_from_ideal(f, dealer)
                                                  : extract_sd_matroid(f, dealer);
  }
  return report;
}

SharingReport analyze(const SetFunction& f, std::string_view dealer, Kind kind) {
  return analyze(f, f.ground().index_of(dealer), kind);
}

Extraction extract_matroid(const SetFunction& h, int dealer) {
  checked_dealer(h, dealer);
  require_kind(h, Kind::polymatroid);
  const Verdict v = evaluate(h, dealer, Kind::polymatroid);
  if (!v.ideal) throw Error(Errc::NotIdeal, v.witness);
  return extract_from_ideal(h, dealer);
}

Extraction extract_matroid(const SetFunction& h, std::string_view dealer) {
  return extract_matroid(h, h.ground().index_of(dealer));
}

Extraction extract_sd_matroid(const SetFunction& e, int dealer) {
  checked_dealer(e, dealer);
  require_kind(e, Kind::polyquantoid);
  const Verdict v = evaluate(e, dealer, Kind::polyquantoid);
  if (!v.ideal) throw Error(Errc::NotIdeal, v.witness);

  Extraction out = extract_from_ideal(hat(e), dealer);
  if (!is_tight(out.rank) || !is_selfdual(out.rank)) {
    throw Error(Errc::InternalInvariant, "extracted matroid is not tight and selfdual");
  }
  if (scale(vee(out.rank), out.t) != e) {
    throw Error(Errc::InternalInvariant, "t * vee(r) does not reproduce the polyquantoid");
  }
  return out;
}

Extraction extract_sd_matroid(const SetFunction& e, std::string_view dealer) {
  return extract_sd_matroid(e, e.ground().index_of(dealer));
}

MatroidStructure matroid_structure(const SetFunction& r) {
  if (!classify(r).matroid) throw Error(Errc::NotAMatroid, "rank function fails the matroid axioms");

  MatroidStructure s{r, {}, 0, 0, true};
  const Mask all = r.full();
  for (std::size_t m = 1; m < r.ground().subset_count(); ++m) {
    const Mask c = static_cast<Mask>(m);
    const int size = cardinality(c);
    if (r[c] != size - 1) continue;
    bool minimal = true;
    for_each_element(c, [&](int i) { minimal = minimal && r[c ^ bit(i)] == size - 1; });
    if (minimal) s.circuits.push_back(c);
  }
  for (int i = 0; i < r.size(); ++i) {
    if (r.singleton(i) == 0) s.loops |= bit(i);
    if (r[all] - r[all ^ bit(i)] == 1) s.coloops |= bit(i);
  }
  for (int i = 0; i < r.size() && s.connected; ++i) {
    for (int j = i + 1; j < r.size() && s.connected; ++j) {
      const Mask pair = bit(i) | bit(j);
      s.connected = std::any_of(s.circuits.begin(), s.circuits.end(),
                                [&](Mask c) { return is_subset(pair, c); });
    }
  }
  return s;
}

Family access_from_circuits(const SetFunction& r, int dealer) {
  checked_dealer(r, dealer);
  const MatroidStructure s = matroid_structure(r);
  Family through;
  for (Mask c : s.circuits) {
    if (contains(c, dealer)) through.push_back(c);
  }
  Family out;
  const Mask rest = r.full() ^ bit(dealer);
  for_each_subset(rest, [&](Mask I) {
    const Mask with = I | bit(dealer);
    if (std::any_of(through.begin(), through.end(), [&](Mask c) { return is_subset(c, with); })) {
      out.push_back(I);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Family access_from_circuits(const SetFunction& r, std::string_view dealer) {
  return access_from_circuits(r, r.ground().index_of(dealer));
}

}  // namespace quantoid
