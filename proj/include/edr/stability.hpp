#pragma once

// Stable elements, unit lifting, stable-range-2 witnesses, coprime
// factorizations and clean idempotents, plus exhaustive property checks
// on finite rings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edr/ring.hpp"
#include "edr/text.hpp"

namespace edr {

enum class Property {
  stable_range_1,
  clean,
  adequate_element,
  locally_stable,
  neat_range_1,
};

std::string to_string(Property p);
/// Accepts the names produced by to_string ("stable-range-1", ...).
Property parse_property(std::string_view name);

struct PropertyVerdict {
  Property property = Property::stable_range_1;
  bool holds = true;
  /// Counterexample when holds is false.
  std::vector<Element> witness;
  /// Present exactly for infinite rings.
  std::optional<std::uint64_t> search_bound;
  std::optional<std::uint64_t> y_window;
};

Json verdict_to_json(const PropertyVerdict& v);

/// Search window for bounded checks: EDR_MAX_SEARCH if set, else 1000.
std::uint64_t search_window();

/// a1·R + ... + an·R = R. Defined for every shipped ring kind, including
/// those without total Bezout certificates.
bool generates_unit_ideal(const std::vector<Element>& gens);
bool is_coprime(const Element& a, const Element& b);
/// aR + cR = R, i.e. a is a unit modulo c.
bool unit_mod(const Element& a, const Element& c);
/// x ∈ g1·R + ... + gk·R.
bool in_ideal(const Element& x, const std::vector<Element>& gens);

/// y with a + b·y stable. Requires aR + bR = R.
Element select_stable(const Element& a, const Element& b);

/// y with (a + b·y)R + cR = R. Requires aR + bR + cR = R.
Element lift_unit(const Element& a, const Element& b, const Element& c);

/// Exhaustive stable-range-1 check of R/aR.
PropertyVerdict is_stable(const Element& a);

/// Exhaustive on finite rings; bounded (stable-range-1 only) otherwise.
PropertyVerdict check_property(const Ring& ring, Property property,
                               std::optional<std::uint64_t> bound = std::nullopt);

/// (y, z) with (a + c·y)R + (b + c·z)R = R. Requires aR + bR + cR = R.
std::pair<Element, Element> sr2_witness(const Element& a, const Element& b, const Element& c);

/// c = r·s with rR + sR = rR + aR = sR + bR = R. Requires aR + bR = R, c != 0.
std::pair<Element, Element> coprime_factorization(const Element& c, const Element& a,
                                                  const Element& b);

/// Idempotent e of R/cR with e ∈ aR + cR and 1 - e ∈ bR + cR, as a
/// representative (reduced modulo c for integers and polynomials).
Element clean_idempotent(const Element& c, const Element& a, const Element& b);

}  // namespace edr
