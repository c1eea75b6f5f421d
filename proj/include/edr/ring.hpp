#pragma once

// Effective commutative rings: descriptors, exact elements, and the
// capability interface (arithmetic, units, Bezout certificates, exact
// division, enumeration of finite rings) consumed by every algorithm.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edr/error.hpp"

namespace edr {

enum class RingKind {
  integers,
  modular,
  gfpoly,
  product,
  trivial_extension,
  series,
};

/// Module E of a trivial extension A ∝ E.
enum class ModuleKind {
  self,       // E = A
  rationals,  // E = Q, only over A = Z
};

std::string to_string(RingKind kind);
std::string to_string(ModuleKind kind);

class Element;
class RingImpl;

/// Cheap, immutable handle to a ring descriptor. Equality is structural.
class Ring {
 public:
  static Ring integers();
  /// Z/nZ, n >= 2.
  static Ring modular(const mpz_class& n);
  /// F_p[x]; p must be a prime below 2^31.
  static Ring gfpoly(std::uint64_t p);
  static Ring product(std::vector<Ring> components);
  static Ring trivial_extension(const Ring& base, ModuleKind module);
  /// Z + xQ[x] truncated after x^order.
  static Ring series(int order = 8);

  RingKind kind() const;
  /// Canonical descriptor expression, e.g. `product(zmod:2,zmod:3)`.
  std::string expression() const;

  const mpz_class& modulus() const;          // modular
  std::uint64_t prime() const;               // gfpoly
  const std::vector<Ring>& components() const;  // product
  const Ring& base() const;                  // trivial_extension
  ModuleKind module_kind() const;            // trivial_extension
  int order() const;                         // series

  bool is_finite() const;
  /// Number of elements; nullopt for infinite rings.
  std::optional<mpz_class> cardinality() const;

  Element zero() const;
  Element one() const;
  /// Image of an integer under the unique map Z -> R.
  Element from_integer(const mpz_class& n) const;

  const RingImpl& impl() const { return *impl_; }

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {}
  friend class RingImpl;

  std::shared_ptr<const RingImpl> impl_;
};

/// Polynomial over F_p, coefficients low-to-high, no trailing zeros.
struct Poly {
  std::vector<std::uint64_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Element (a, e) of Z ∝ Q.
struct IntRationalPair {
  mpz_class base;
  mpq_class module;

  friend bool operator==(const IntRationalPair& a, const IntRationalPair& b) {
    return a.base == b.base && a.module == b.module;
  }
};

/// Truncated series a_0 + a_1 x + ... ; `tail[i]` is the coefficient of
/// x^(i+1), stored without trailing zeros.
struct SeriesValue {
  mpz_class constant;
  std::vector<mpq_class> tail;

  friend bool operator==(const SeriesValue& a, const SeriesValue& b) {
    return a.constant == b.constant && a.tail == b.tail;
  }
};

/// Exact ring element tagged with its ring.
///
/// Payload per kind: integers and modular use `mpz_class` (residues in
/// [0, n)); gfpoly uses `Poly`; product and trivial_extension(self) use a
/// `Tuple` of component elements; trivial_extension(rationals) uses
/// `IntRationalPair`; series uses `SeriesValue`.
class Element {
 public:
  using Tuple = std::vector<Element>;
  using Value = std::variant<mpz_class, Poly, Tuple, IntRationalPair, SeriesValue>;

  /// Validates the payload shape against the ring and normalizes it.
  Element(Ring ring, Value value);

  const Ring& ring() const { return ring_; }
  const Value& value() const { return value_; }

  const mpz_class& integer() const { return std::get<mpz_class>(value_); }
  const Poly& poly() const { return std::get<Poly>(value_); }
  const Tuple& tuple() const { return std::get<Tuple>(value_); }
  const IntRationalPair& int_rational() const { return std::get<IntRationalPair>(value_); }
  const SeriesValue& series() const { return std::get<SeriesValue>(value_); }

  bool is_zero() const;
  bool is_one() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  struct Trusted {};
  Element(Trusted, Ring ring, Value value)
      : ring_(std::move(ring)), value_(std::move(value)) {}
  friend class RingImpl;

  Ring ring_;
  Value value_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);

enum class ArithmeticOp { add, sub, mul };
Element arithmetic(const Element& a, const Element& b, ArithmeticOp op);

/// Witness for aR + bR = dR.
///
/// Non-degenerate certificates satisfy a·x + b·y = d, a = d·a0, b = d·b0
/// and a0·x + b0·y = 1. The degenerate certificate for a = b = 0 is
/// d = 0, x = 1, y = 0, a0 = b0 = 0 with the last identity waived.
struct BezoutCertificate {
  Element d, x, y, a0, b0;
  bool degenerate = false;
};

bool is_unit(const Element& a);
/// Throws NotUnit for non-units.
Element inverse(const Element& a);

/// d is the canonical associate of the ideal generator.
BezoutCertificate bezout(const Element& a, const Element& b);

std::optional<Element> try_divide(const Element& a, const Element& d);
/// Some q with a = d·q. In rings with zero divisors the first q in
/// enumeration order is returned. Throws NotDivisible.
Element divide_exact(const Element& a, const Element& d);
bool divides(const Element& d, const Element& a);

/// Unit u with a = d·u. Throws NotUnit if a and d are not associates.
Element associate_unit(const Element& a, const Element& d);
bool are_associates(const Element& a, const Element& b);
/// Normal form of the associate class: nonnegative integers, monic
/// polynomials, divisors of n in Z/n, componentwise for products.
Element canonical_associate(const Element& a);

/// Visits every element of a finite ring exactly once, in enumeration
/// order. Throws Unsupported for infinite rings.
void for_each_element(const Ring& ring, const std::function<void(const Element&)>& fn);
std::vector<Element> enumerate_elements(const Ring& ring);
/// Position of `e` in enumeration order (finite rings only).
mpz_class enumeration_index(const Element& e);
Element element_at(const Ring& ring, const mpz_class& index);

/// Throws DescriptorMismatch unless all rings agree.
void require_same_ring(const Element& a, const Element& b);

}  // namespace edr
