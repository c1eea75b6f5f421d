#include "edr/stability.hpp"

#include <cstdlib>
#include <numeric>

#include "finite_table.hpp"
#include "gf_poly.hpp"

namespace edr {

namespace {

const Ring& Z() {
  static const Ring z = Ring::integers();
  return z;
}

Element int_element(const mpz_class& n) { return Z().from_integer(n); }

mpz_class mpz_gcd3(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void require_ring(const std::vector<Element>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) require_same_ring(xs[0], xs[i]);
}

// Component i of each element of a product.
std::vector<Element> component(const std::vector<Element>& xs, std::size_t i) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(x.tuple()[i]);
  return out;
}

// Image in the base ring of a trivial extension or the constant terms of
// a series; the kernel is a nil or radical ideal in every case.
Element base_part(const Element& x) {
  const Ring& r = x.ring();
  if (r.kind() == RingKind::series) return int_element(x.series().constant);
  if (r.module_kind() == ModuleKind::rationals) return int_element(x.int_rational().base);
  return x.tuple()[0];
}

std::vector<Element> base_parts(const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(base_part(x));
  return out;
}

// Right inverse of base_part: (b, 0), or the constant series b.
Element from_base(const Ring& r, const Element& b) {
  if (r.kind() == RingKind::series) return r.from_integer(b.integer());
  if (r.module_kind() == ModuleKind::rationals) {
    return Element(r, IntRationalPair{b.integer(), 0});
  }
  return Element(r, Element::Tuple{b, r.base().zero()});
}

Element assemble(const Ring& r, Element::Tuple parts) { return Element(r, std::move(parts)); }

std::optional<Element> ideal_generator(const std::vector<Element>& gens) {
  Element d = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i) d = bezout(d, gens[i]).d;
  return d;
}

// Ideal generated by `gens` in a finite ring, as a membership bitset over
// enumeration indices.
std::vector<char> finite_ideal(const std::vector<Element>& gens) {
  const Ring& r = gens[0].ring();
  const auto all = enumerate_elements(r);
  std::vector<char> in(all.size(), 0);
  in[enumeration_index(r.zero()).get_ui()] = 1;
  for (const auto& g : gens) {
    std::vector<char> next(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!in[i]) continue;
      for (const auto& t : all) next[enumeration_index(all[i] + g * t).get_ui()] = 1;
    }
    in = std::move(next);
  }
  return in;
}

std::vector<mpz_class> signed_candidates(std::size_t count) {
  std::vector<mpz_class> out{0};
  for (long k = 1; out.size() < count; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

// --- integers --------------------------------------------------------------

mpz_class lift_unit_integers(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (c == 0) {
    if (b == 0) return 0;  // a = ±1 by the precondition
    for (int u : {1, -1}) {
      mpz_class num = u - a;
      if (mpz_divisible_p(num.get_mpz_t(), b.get_mpz_t())) return mpz_class(num / b);
    }
    throw SearchExhausted("no y makes a + b*y = ±1; Z/0 does not have stable range 1");
  }
  const mpz_class m = abs(c);
  for (mpz_class y = 0; y < m; ++y) {
    if (mpz_gcd3(a + b * y, m) == 1) return y;
  }
  throw InternalError("unit lift not found among residues modulo " + m.get_str());
}

// Pairs (u, v) of Z/m reduce to v | m and u in [0, v): vS depends on
// gcd(v, m) only, and u + vS on u mod v.
std::optional<std::pair<std::uint64_t, std::uint64_t>> modular_sr1_counterexample(std::uint64_t m) {
  for (std::uint64_t v = 1; v <= m; ++v) {
    if (m % v) continue;
    for (std::uint64_t u = 0; u < v; ++u) {
      if (std::gcd(u, v) != 1) continue;
      bool found = false;
      for (std::uint64_t t = 0; t < m / v && !found; ++t) {
        if (std::gcd(u + v * t, m) == 1) found = true;
      }
      if (!found) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

constexpr std::uint64_t kModularCheckLimit = 10'000'000;

std::uint64_t checked_modulus(const mpz_class& m) {
  if (m > kModularCheckLimit) {
    throw Unsupported("exhaustive stable-range check of Z/" + m.get_str() + " exceeds the limit");
  }
  return m.get_ui();
}

// --- polynomials -----------------------------------------------------------

Element poly_from_index(const Ring& r, mpz_class k) {
  Poly out;
  const mpz_class p(static_cast<unsigned long>(r.prime()));
  while (k > 0) {
    mpz_class d = k % p;
    out.coeffs.push_back(d.get_ui());
    k /= p;
  }
  return Element(r, std::move(out));
}

bool poly_coprime(const Element& a, const Element& c) {
  return gf::gcdext(a.poly().coeffs, c.poly().coeffs, a.ring().prime()).g.size() == 1;
}

Element lift_unit_gfpoly(const Element& a, const Element& b, const Element& c) {
  const Ring& r = a.ring();
  if (c.is_zero()) {
    if (b.is_zero()) return r.zero();
    if (b.poly().degree() == 0) return divide_exact(r.one() - a, b);
    auto rem = gf::divmod(a.poly().coeffs, b.poly().coeffs, r.prime()).second;
    if (rem.size() == 1) return divide_exact(Element(r, Poly{rem}) - a, b);
    throw SearchExhausted("no y makes a + b*y a unit; F_p[x] does not have stable range 1");
  }
  mpz_class count = 1;
  for (int i = 0; i < c.poly().degree(); ++i) count *= static_cast<unsigned long>(r.prime());
  const mpz_class cap = mpz_class(static_cast<unsigned long>(search_window())) * search_window();
  for (mpz_class k = 0; k < count; ++k) {
    if (k >= cap) throw SearchExhausted("graded residue search passed the window");
    Element y = poly_from_index(r, k);
    if (poly_coprime(a + b * y, c)) return y;
  }
  throw InternalError("unit lift not found among residues of lower degree");
}

// --- verdict helpers -------------------------------------------------------

PropertyVerdict holds(Property p) { return PropertyVerdict{p, true, {}, std::nullopt, std::nullopt}; }

PropertyVerdict fails(Property p, std::vector<Element> witness) {
  return PropertyVerdict{p, false, std::move(witness), std::nullopt, std::nullopt};
}

PropertyVerdict table_stable_range(Property p, const FiniteTable& t,
                                   const std::function<Element(int)>& elem) {
  if (auto ce = t.stable_range_counterexample()) return fails(p, {elem(ce->first), elem(ce->second)});
  return holds(p);
}

// Lifts a component witness into a product: the chosen slot carries the
// witness, every other slot a trivially good value.
std::vector<Element> lift_witness(const Ring& r, std::size_t slot, const std::vector<Element>& w,
                                  Property p) {
  std::vector<Element> out;
  const auto& comps = r.components();
  for (std::size_t k = 0; k < w.size(); ++k) {
    Element::Tuple parts;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i == slot) {
        parts.push_back(w[k]);
      } else {
        // pairs (1, 0); single witnesses 1 (clean, adequate use 1 as well)
        bool first = k == 0 || p == Property::clean;
        parts.push_back(first ? comps[i].one() : comps[i].zero());
      }
    }
    out.push_back(assemble(r, std::move(parts)));
  }
  return out;
}

PropertyVerdict exhaustive(const Ring& ring, Property p) {
  if (p == Property::stable_range_1 && ring.kind() == RingKind::modular &&
      ring.modulus() > FiniteTable::kMaxSize) {
    if (auto ce = modular_sr1_counterexample(checked_modulus(ring.modulus()))) {
      return fails(p, {ring.from_integer(ce->first), ring.from_integer(ce->second)});
    }
    return holds(p);
  }
  if (p == Property::adequate_element && *ring.cardinality() > 256) {
    throw Unsupported("adequate-element check is limited to rings of at most 256 elements");
  }
  const FiniteTable t = FiniteTable::from_ring(ring);
  auto elem = [&](int i) { return element_at(ring, i); };
  switch (p) {
    case Property::stable_range_1: return table_stable_range(p, t, elem);
    case Property::clean:
      if (auto ce = t.clean_counterexample()) return fails(p, {elem(*ce)});
      return holds(p);
    case Property::adequate_element:
      if (auto ce = t.adequate_counterexample()) return fails(p, {elem(ce->first), elem(ce->second)});
      return holds(p);
    case Property::locally_stable:
    case Property::neat_range_1: {
      std::function<bool(const FiniteTable&)> pred;
      if (p == Property::locally_stable) {
        pred = [](const FiniteTable& q) { return !q.stable_range_counterexample(); };
      } else {
        pred = [](const FiniteTable& q) { return !q.clean_counterexample(); };
      }
      if (auto ce = t.local_counterexample(pred)) return fails(p, {elem(ce->first), elem(ce->second)});
      return holds(p);
    }
  }
  throw InternalError("unknown property");
}

// Pairs (a, b) with 2 <= a < b, gcd 1, ordered by b then a descending.
// Each pair is decided exactly: a + by = ±1 iff b | (±1 - a).
PropertyVerdict bounded_integers(std::uint64_t bound) {
  std::uint64_t seen = 0;
  for (mpz_class b = 3; seen < bound; ++b) {
    for (mpz_class a = b - 1; a >= 2 && seen < bound; --a) {
      if (mpz_gcd3(a, b) != 1) continue;
      ++seen;
      mpz_class p = 1 - a, m = -1 - a;
      if (!mpz_divisible_p(p.get_mpz_t(), b.get_mpz_t()) &&
          !mpz_divisible_p(m.get_mpz_t(), b.get_mpz_t())) {
        return fails(Property::stable_range_1, {int_element(a), int_element(b)});
      }
    }
  }
  return holds(Property::stable_range_1);
}

// Pairs (a, b) with b monic of degree >= 1, deg a < deg b, gcd 1, in graded
// order. a + by is a unit iff a is a nonzero constant.
PropertyVerdict bounded_gfpoly(const Ring& r, std::uint64_t bound) {
  const std::uint64_t p = r.prime();
  std::uint64_t seen = 0;
  for (int deg = 1; seen < bound; ++deg) {
    mpz_class monics = 1;
    for (int i = 0; i < deg; ++i) monics *= static_cast<unsigned long>(p);
    for (mpz_class j = 0; j < monics && seen < bound; ++j) {
      Element low = poly_from_index(r, j);
      Poly bp = low.poly();
      bp.coeffs.resize(deg + 1, 0);
      bp.coeffs[deg] = 1;
      Element b(r, bp);
      for (mpz_class k = 0; k < monics && seen < bound; ++k) {
        Element a = poly_from_index(r, k);
        if (!poly_coprime(a, b)) continue;
        ++seen;
        if (a.poly().degree() != 0) return fails(Property::stable_range_1, {a, b});
      }
    }
  }
  return holds(Property::stable_range_1);
}

PropertyVerdict bounded(const Ring& ring, Property p, std::uint64_t bound) {
  if (p != Property::stable_range_1) {
    throw Unsupported(to_string(p) + " can only be checked on finite rings; " + ring.expression() +
                      " is infinite");
  }
  switch (ring.kind()) {
    case RingKind::integers: return bounded_integers(bound);
    case RingKind::gfpoly: return bounded_gfpoly(ring, bound);
    case RingKind::product: {
      const auto& comps = ring.components();
      for (std::size_t i = 0; i < comps.size(); ++i) {
        auto v = comps[i].is_finite() ? exhaustive(comps[i], p) : bounded(comps[i], p, bound);
        if (!v.holds) return fails(p, lift_witness(ring, i, v.witness, p));
      }
      return holds(p);
    }
    case RingKind::trivial_extension:
    case RingKind::series: {
      // Stable range 1 passes through the quotient by a radical ideal.
      Ring base = ring.kind() == RingKind::series || ring.module_kind() == ModuleKind::rationals
                      ? Z()
                      : ring.base();
      auto v = base.is_finite() ? exhaustive(base, p) : bounded(base, p, bound);
      if (v.holds) return holds(p);
      std::vector<Element> w;
      for (const auto& x : v.witness) w.push_back(from_base(ring, x));
      return fails(p, w);
    }
    default: break;
  }
  throw Unsupported("bounded check for " + ring.expression());
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Property p) {
  switch (p) {
    case Property::stable_range_1: return "stable-range-1";
    case Property::clean: return "clean";
    case Property::adequate_element: return "adequate-element";
    case Property::locally_stable: return "locally-stable";
    case Property::neat_range_1: return "neat-range-1";
  }
  return "unknown";
}

Property parse_property(std::string_view name) {
  for (auto p : {Property::stable_range_1, Property::clean, Property::adequate_element,
                 Property::locally_stable, Property::neat_range_1}) {
    if (name == to_string(p)) return p;
  }
  if (name == "sr1") return Property::stable_range_1;
  if (name == "adequate") return Property::adequate_element;
  throw ParseError("unknown property '" + std::string(name) + "'");
}

Json verdict_to_json(const PropertyVerdict& v) {
  Json j = Json::object();
  j.set("property", Json::string(to_string(v.property)));
  j.set("holds", Json::boolean(v.holds));
  if (!v.holds) {
    Json w = Json::array();
    for (const auto& e : v.witness) w.push_back(element_to_json(e));
    j.set("witness", w);
  }
  if (v.search_bound) j.set("searchBound", Json::number(static_cast<long long>(*v.search_bound)));
  if (v.y_window) j.set("yWindow", Json::number(static_cast<long long>(*v.y_window)));
  return j;
}

std::uint64_t search_window() {
  if (const char* s = std::getenv("EDR_MAX_SEARCH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 1000;
}

bool generates_unit_ideal(const std::vector<Element>& gens) {
  if (gens.empty()) return false;
  require_ring(gens);
  const Ring& r = gens[0].ring();
  switch (r.kind()) {
    case RingKind::integers: {
      mpz_class g = 0;
      for (const auto& x : gens) g = mpz_gcd3(g, x.integer());
      return g == 1;
    }
    case RingKind::modular: {
      mpz_class g = r.modulus();
      for (const auto& x : gens) g = mpz_gcd3(g, x.integer());
      return g == 1;
    }
    case RingKind::product:
      for (std::size_t i = 0; i < r.components().size(); ++i) {
        if (!generates_unit_ideal(component(gens, i))) return false;
      }
      return true;
    case RingKind::trivial_extension:
    case RingKind::series: return generates_unit_ideal(base_parts(gens));
    case RingKind::gfpoly: return is_unit(*ideal_generator(gens));
  }
  return false;
}

bool is_coprime(const Element& a, const Element& b) { return generates_unit_ideal({a, b}); }
bool unit_mod(const Element& a, const Element& c) { return generates_unit_ideal({a, c}); }

bool in_ideal(const Element& x, const std::vector<Element>& gens) {
  if (gens.empty()) return x.is_zero();
  std::vector<Element> all = gens;
  all.push_back(x);
  require_ring(all);
  const Ring& r = x.ring();
  if (r.kind() == RingKind::product) {
    for (std::size_t i = 0; i < r.components().size(); ++i) {
      if (!in_ideal(x.tuple()[i], component(gens, i))) return false;
    }
    return true;
  }
  const bool bezout_ring = r.kind() == RingKind::integers || r.kind() == RingKind::modular ||
                           r.kind() == RingKind::gfpoly ||
                           (r.kind() == RingKind::trivial_extension &&
                            r.module_kind() == ModuleKind::rationals);
  if (bezout_ring) return divides(*ideal_generator(gens), x);
  if (r.is_finite()) return finite_ideal(gens)[enumeration_index(x).get_ui()] != 0;
  throw Unsupported("ideal membership in " + r.expression());
}

Element select_stable(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  // Every nonzero element of Z or F_p[x] is stable, so the scan needs no
  // comaximality; only a = b = 0 has no answer there.
  const bool domain = r.kind() == RingKind::integers || r.kind() == RingKind::gfpoly;
  if (domain ? a.is_zero() && b.is_zero() : !is_coprime(a, b)) {
    throw PreconditionError("select_stable requires aR + bR = R");
  }
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::gfpoly:
      for (const auto& k : signed_candidates(4)) {
        Element y = r.from_integer(k);
        if (!(a + b * y).is_zero()) return y;
      }
      break;
    case RingKind::modular: return r.zero();
    case RingKind::series: {
      const mpz_class& f0 = a.series().constant;
      const mpz_class& g0 = b.series().constant;
      for (const auto& k : signed_candidates(4)) {
        if (f0 + g0 * k != 0) return r.from_integer(k);
      }
      break;
    }
    case RingKind::product: {
      Element::Tuple parts;
      for (std::size_t i = 0; i < r.components().size(); ++i) {
        parts.push_back(select_stable(a.tuple()[i], b.tuple()[i]));
      }
      return assemble(r, std::move(parts));
    }
    case RingKind::trivial_extension:
      if (r.is_finite()) return r.zero();
      return from_base(r, select_stable(base_part(a), base_part(b)));
  }
  throw InternalError("no stable choice found");
}

Element lift_unit(const Element& a, const Element& b, const Element& c) {
  require_ring({a, b, c});
  if (!generates_unit_ideal({a, b, c})) throw PreconditionError("lift_unit requires aR + bR + cR = R");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
      return int_element(lift_unit_integers(a.integer(), b.integer(), c.integer()));
    case RingKind::gfpoly: return lift_unit_gfpoly(a, b, c);
    case RingKind::modular: {
      const mpz_class g = mpz_gcd3(c.integer(), r.modulus());
      for (mpz_class y = 0; y < r.modulus(); ++y) {
        if (mpz_gcd3(a.integer() + b.integer() * y, g) == 1) return r.from_integer(y);
      }
      throw InternalError("unit lift not found in " + r.expression());
    }
    case RingKind::product: {
      Element::Tuple parts;
      for (std::size_t i = 0; i < r.components().size(); ++i) {
        parts.push_back(lift_unit(a.tuple()[i], b.tuple()[i], c.tuple()[i]));
      }
      return assemble(r, std::move(parts));
    }
    case RingKind::trivial_extension:
    case RingKind::series:
      return from_base(r, lift_unit(base_part(a), base_part(b), base_part(c)));
  }
  throw InternalError("unknown ring kind");
}

PropertyVerdict is_stable(const Element& a) {
  const Property p = Property::stable_range_1;
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: {
      if (a.is_zero()) throw PreconditionError("Z/0 is infinite; is_stable needs a finite quotient");
      if (auto ce = modular_sr1_counterexample(checked_modulus(abs(a.integer())))) {
        return fails(p, {int_element(ce->first), int_element(ce->second)});
      }
      return holds(p);
    }
    case RingKind::modular: {
      if (auto ce = modular_sr1_counterexample(checked_modulus(mpz_gcd3(a.integer(), r.modulus())))) {
        return fails(p, {r.from_integer(ce->first), r.from_integer(ce->second)});
      }
      return holds(p);
    }
    case RingKind::gfpoly: {
      if (a.is_zero()) throw PreconditionError("F_p[x]/(0) is infinite; is_stable needs a finite quotient");
      auto t = FiniteTable::polynomial_quotient(r.prime(), a.poly().coeffs);
      return table_stable_range(p, t, [&](int k) { return poly_from_index(r, k); });
    }
    case RingKind::product: {
      for (std::size_t i = 0; i < r.components().size(); ++i) {
        auto v = is_stable(a.tuple()[i]);
        if (!v.holds) return fails(p, lift_witness(r, i, v.witness, p));
      }
      return holds(p);
    }
    default:
      if (!r.is_finite()) {
        throw PreconditionError("is_stable needs a finite quotient; " + r.expression() +
                                " quotients are not enumerated");
      }
      const FiniteTable t = FiniteTable::from_ring(r);
      std::vector<int> reps;
      const FiniteTable q = t.quotient(static_cast<int>(enumeration_index(a).get_si()), &reps);
      return table_stable_range(p, q, [&](int k) { return element_at(r, reps[k]); });
  }
}

PropertyVerdict check_property(const Ring& ring, Property property,
                               std::optional<std::uint64_t> bound) {
  if (ring.is_finite()) return exhaustive(ring, property);
  const std::uint64_t b = bound.value_or(100);
  if (b == 0) throw PreconditionError("search bound must be positive");
  auto v = bounded(ring, property, b);
  v.search_bound = b;
  v.y_window = search_window();
  return v;
}

std::pair<Element, Element> sr2_witness(const Element& a, const Element& b, const Element& c) {
  require_ring({a, b, c});
  if (!generates_unit_ideal({a, b, c})) throw PreconditionError("sr2_witness requires aR + bR + cR = R");
  const Ring& r = a.ring();
  if (is_coprime(a, b)) return {r.zero(), r.zero()};
  // g = b·x' + c·z' generates bR + cR
  const auto cert = bezout(b, c);
  const Element t = select_stable(a, cert.d);
  const Element w = a + cert.d * t;
  const Element y = cert.x * t;
  const Element z = cert.y * t;
  // w = a + by + cz is stable; lift b against it
  const Element d = lift_unit(b, c, w);
  return {z - d * y, d};
}

std::pair<Element, Element> coprime_factorization(const Element& c, const Element& a,
                                                  const Element& b) {
  require_ring({c, a, b});
  if (!is_coprime(a, b)) throw PreconditionError("coprime_factorization requires aR + bR = R");
  if (c.is_zero()) throw PreconditionError("coprime_factorization requires c != 0");
  const Ring& ring = c.ring();
  std::optional<std::pair<Element, Element>> out;
  if (ring.kind() == RingKind::integers || ring.kind() == RingKind::gfpoly) {
    // r: the part of c coprime to a
    Element r = c;
    for (Element g = bezout(r, a).d; !is_unit(g); g = bezout(r, a).d) r = divide_exact(r, g);
    out.emplace(r, divide_exact(c, r));
  } else if (ring.is_finite()) {
    const auto all = enumerate_elements(ring);
    for (const auto& r : all) {
      if (!is_coprime(r, a)) continue;
      for (const auto& s : all) {
        if (r * s == c && is_coprime(r, s) && is_coprime(s, b)) {
          out.emplace(r, s);
          break;
        }
      }
      if (out) break;
    }
    if (!out) throw PreconditionError("no coprime factorization of c exists in " + ring.expression());
  } else {
    throw Unsupported("coprime_factorization in " + ring.expression());
  }
  const auto& [r, s] = *out;
  if (r * s != c || !is_coprime(r, s) || !is_coprime(r, a) || !is_coprime(s, b)) {
    throw InternalError("coprime factorization failed its own check");
  }
  return *out;
}

Element clean_idempotent(const Element& c, const Element& a, const Element& b) {
  const auto [r, s] = coprime_factorization(c, a, b);
  const auto cert = bezout(r, s);
  const Element v = cert.y * inverse(cert.d);  // r·u + s·v = 1
  Element e = s * v;
  const Ring& ring = c.ring();
  if (ring.kind() == RingKind::integers) {
    mpz_class m = abs(c.integer()), res;
    mpz_mod(res.get_mpz_t(), e.integer().get_mpz_t(), m.get_mpz_t());
    e = int_element(res);
  } else if (ring.kind() == RingKind::gfpoly) {
    e = Element(ring, Poly{gf::divmod(e.poly().coeffs, c.poly().coeffs, ring.prime()).second});
  }
  if (!in_ideal(e * e - e, {c}) || !in_ideal(e, {a, c}) || !in_ideal(ring.one() - e, {b, c})) {
    throw InternalError("clean idempotent failed its own check");
  }
  return e;
}

}  // namespace edr
