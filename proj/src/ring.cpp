#include "edr/ring.hpp"

#include <algorithm>

#include "ring_impl.hpp"

namespace edr {

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::integers: return "integers";
    case RingKind::modular: return "modular";
    case RingKind::gfpoly: return "prime-field-poly";
    case RingKind::product: return "product";
    case RingKind::trivial_extension: return "trivial-extension";
    case RingKind::series: return "truncated-series";
  }
  return "unknown";
}

std::string to_string(ModuleKind kind) {
  return kind == ModuleKind::self ? "self" : "rationals";
}

// ---------------------------------------------------------------------------
// Ring handle

Ring Ring::integers() { return Ring(make_integer_ring()); }
Ring Ring::modular(const mpz_class& n) { return Ring(make_modular_ring(n)); }
Ring Ring::gfpoly(std::uint64_t p) { return Ring(make_gfpoly_ring(p)); }
Ring Ring::product(std::vector<Ring> components) {
  return Ring(make_product_ring(std::move(components)));
}
Ring Ring::trivial_extension(const Ring& base, ModuleKind module) {
  return Ring(make_trivial_extension_ring(base, module));
}
Ring Ring::series(int order) { return Ring(make_series_ring(order)); }

RingKind Ring::kind() const { return impl_->kind(); }
std::string Ring::expression() const { return impl_->expression(); }

const mpz_class& Ring::modulus() const {
  if (kind() != RingKind::modular) throw Unsupported("modulus() on " + expression());
  return impl_->modulus();
}

std::uint64_t Ring::prime() const {
  if (kind() != RingKind::gfpoly) throw Unsupported("prime() on " + expression());
  return impl_->prime();
}

const std::vector<Ring>& Ring::components() const {
  if (kind() != RingKind::product) throw Unsupported("components() on " + expression());
  return impl_->children();
}

const Ring& Ring::base() const {
  if (kind() != RingKind::trivial_extension) throw Unsupported("base() on " + expression());
  return impl_->children().front();
}

ModuleKind Ring::module_kind() const {
  if (kind() != RingKind::trivial_extension)
    throw Unsupported("module_kind() on " + expression());
  return impl_->module_kind();
}

int Ring::order() const {
  if (kind() != RingKind::series) throw Unsupported("order() on " + expression());
  return impl_->order();
}

bool Ring::is_finite() const { return impl_->cardinality().has_value(); }
std::optional<mpz_class> Ring::cardinality() const { return impl_->cardinality(); }

Element Ring::zero() const { return impl_->zero(); }
Element Ring::one() const { return impl_->one(); }
Element Ring::from_integer(const mpz_class& n) const { return impl_->from_integer(n); }

bool operator==(const Ring& a, const Ring& b) {
  if (a.impl_ == b.impl_) return true;
  const RingImpl& x = *a.impl_;
  const RingImpl& y = *b.impl_;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case RingKind::integers: return true;
    case RingKind::modular: return x.modulus() == y.modulus();
    case RingKind::gfpoly: return x.prime() == y.prime();
    case RingKind::product: return x.children() == y.children();
    case RingKind::trivial_extension:
      return x.module_kind() == y.module_kind() && x.children() == y.children();
    case RingKind::series: return x.order() == y.order();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Ring ring, Value value)
    : ring_(std::move(ring)), value_(ring_.impl().normalize(std::move(value))) {}

bool Element::is_zero() const { return *this == ring_.zero(); }
bool Element::is_one() const { return *this == ring_.one(); }

bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring()) {
    throw DescriptorMismatch("descriptor mismatch: " + a.ring().expression() + " vs " +
                             b.ring().expression());
  }
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.ring().impl().add(a, b);
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.ring().impl().sub(a, b);
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.ring().impl().mul(a, b);
}

Element operator-(const Element& a) { return a.ring().impl().neg(a); }

Element arithmetic(const Element& a, const Element& b, ArithmeticOp op) {
  switch (op) {
    case ArithmeticOp::add: return a + b;
    case ArithmeticOp::sub: return a - b;
    case ArithmeticOp::mul: return a * b;
  }
  throw InternalError("unknown arithmetic op");
}

bool is_unit(const Element& a) { return a.ring().impl().is_unit(a); }

Element inverse(const Element& a) {
  auto inv = a.ring().impl().inverse(a);
  if (!inv) throw NotUnit("inverse of a non-unit in " + a.ring().expression());
  return *inv;
}

BezoutCertificate bezout(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.ring().impl().bezout(a, b);
}

std::optional<Element> try_divide(const Element& a, const Element& d) {
  require_same_ring(a, d);
  return a.ring().impl().try_divide(a, d);
}

Element divide_exact(const Element& a, const Element& d) {
  auto q = try_divide(a, d);
  if (!q) throw NotDivisible("divisor does not divide dividend in " + a.ring().expression());
  return *q;
}

bool divides(const Element& d, const Element& a) { return try_divide(a, d).has_value(); }

Element associate_unit(const Element& a, const Element& d) {
  require_same_ring(a, d);
  auto u = a.ring().impl().associate_unit(a, d);
  if (!u) throw NotUnit("elements are not associates in " + a.ring().expression());
  return *u;
}

bool are_associates(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.ring().impl().associate_unit(a, b).has_value();
}

Element canonical_associate(const Element& a) { return a.ring().impl().canonical_associate(a); }

void for_each_element(const Ring& ring, const std::function<void(const Element&)>& fn) {
  auto n = ring.cardinality();
  if (!n) throw Unsupported("enumeration of infinite ring " + ring.expression());
  for (mpz_class i = 0; i < *n; ++i) fn(ring.impl().element_at(i));
}

std::vector<Element> enumerate_elements(const Ring& ring) {
  std::vector<Element> out;
  for_each_element(ring, [&](const Element& e) { out.push_back(e); });
  return out;
}

mpz_class enumeration_index(const Element& e) { return e.ring().impl().index_of(e); }

Element element_at(const Ring& ring, const mpz_class& index) {
  auto n = ring.cardinality();
  if (!n) throw Unsupported("enumeration of infinite ring " + ring.expression());
  if (index < 0 || index >= *n) throw PreconditionError("enumeration index out of range");
  return ring.impl().element_at(index);
}

// ---------------------------------------------------------------------------
// RingImpl defaults

namespace {

constexpr unsigned long kExhaustiveLimit = 1UL << 14;

std::vector<Element> finite_elements(const RingImpl& r) {
  auto n = r.cardinality();
  if (!n || *n > kExhaustiveLimit) {
    throw Unsupported("exhaustive search over " + r.expression() + " is not available");
  }
  std::vector<Element> out;
  out.reserve(n->get_ui());
  for (unsigned long i = 0; i < n->get_ui(); ++i) out.push_back(r.element_at(i));
  return out;
}

// Membership bitset of the principal ideal aR, indexed by enumeration order.
std::vector<char> principal_ideal(const RingImpl& r, const std::vector<Element>& all,
                                  const Element& a) {
  std::vector<char> in(all.size(), 0);
  for (const auto& x : all) in[r.index_of(r.mul(a, x)).get_ui()] = 1;
  return in;
}

}  // namespace

void RingImpl::unsupported(const std::string& what) const {
  throw Unsupported(what + " is not supported for " + expression());
}

BezoutCertificate RingImpl::degenerate_certificate() const {
  return BezoutCertificate{zero(), one(), zero(), zero(), zero(), true};
}

BezoutCertificate RingImpl::bezout(const Element& a, const Element& b) const {
  if (cardinality()) return exhaustive_bezout(a, b);
  unsupported("bezout");
}

std::optional<Element> RingImpl::try_divide(const Element& a, const Element& d) const {
  if (cardinality()) return exhaustive_divide(a, d);
  unsupported("exact division");
}

std::optional<Element> RingImpl::associate_unit(const Element& a, const Element& d) const {
  if (cardinality()) return exhaustive_associate_unit(a, d);
  unsupported("associate_unit");
}

Element RingImpl::canonical_associate(const Element& a) const {
  if (cardinality()) return exhaustive_canonical_associate(a);
  unsupported("canonical associates");
}

Element RingImpl::element_at(const mpz_class&) const { unsupported("enumeration"); }
mpz_class RingImpl::index_of(const Element&) const { unsupported("enumeration"); }

std::optional<Element> RingImpl::exhaustive_divide(const Element& a, const Element& d) const {
  for (const auto& q : finite_elements(*this)) {
    if (mul(d, q) == a) return q;
  }
  return std::nullopt;
}

std::optional<Element> RingImpl::exhaustive_associate_unit(const Element& a,
                                                           const Element& d) const {
  for (const auto& q : finite_elements(*this)) {
    if (is_unit(q) && mul(d, q) == a) return q;
  }
  return std::nullopt;
}

Element RingImpl::exhaustive_canonical_associate(const Element& a) const {
  std::optional<Element> best;
  mpz_class best_index;
  for (const auto& u : finite_elements(*this)) {
    if (!is_unit(u)) continue;
    Element candidate = mul(a, u);
    mpz_class idx = index_of(candidate);
    if (!best || idx < best_index) {
      best = candidate;
      best_index = idx;
    }
  }
  return *best;
}

BezoutCertificate RingImpl::exhaustive_bezout(const Element& a, const Element& b) const {
  if (a.is_zero() && b.is_zero()) return degenerate_certificate();
  const auto all = finite_elements(*this);
  const std::size_t n = all.size();
  const auto in_a = principal_ideal(*this, all, a);
  const auto in_b = principal_ideal(*this, all, b);

  std::vector<char> in_sum(n, 0);
  std::size_t sum_size = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_a[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_b[j]) continue;
      auto k = index_of(add(all[i], all[j])).get_ui();
      if (!in_sum[k]) {
        in_sum[k] = 1;
        ++sum_size;
      }
    }
  }

  // Smallest generator of aR + bR; generators of a principal ideal in a
  // finite ring are associates, so this is also the canonical associate.
  std::optional<Element> d;
  for (std::size_t i = 0; i < n && !d; ++i) {
    if (!in_sum[i]) continue;
    auto in_d = principal_ideal(*this, all, all[i]);
    if (static_cast<std::size_t>(std::count(in_d.begin(), in_d.end(), 1)) == sum_size) d = all[i];
  }
  if (!d) throw Unsupported("ideal aR + bR is not principal in " + expression());

  std::vector<Element> a0s, b0s;
  for (const auto& q : all) {
    if (mul(*d, q) == a) a0s.push_back(q);
    if (mul(*d, q) == b) b0s.push_back(q);
  }
  const Element unit = one();
  for (const auto& a0 : a0s) {
    for (const auto& b0 : b0s) {
      auto in_b0 = principal_ideal(*this, all, b0);
      for (const auto& x : all) {
        Element rest = sub(unit, mul(a0, x));
        if (!in_b0[index_of(rest).get_ui()]) continue;
        for (const auto& y : all) {
          if (mul(b0, y) == rest) return BezoutCertificate{*d, x, y, a0, b0, false};
        }
      }
    }
  }
  throw Unsupported("no refined Bezout certificate exists in " + expression());
}

}  // namespace edr
