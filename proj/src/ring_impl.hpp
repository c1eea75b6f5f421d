#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

/// Per-kind implementation behind a Ring handle. Descriptor data lives in
/// the base; derived classes implement arithmetic and the Bezout layer.
///
/// Finite rings get exhaustive defaults for division, associates and
/// Bezout certificates; kinds with closed forms override them.
class RingImpl : public std::enable_shared_from_this<RingImpl> {
 public:
  using Value = Element::Value;

  explicit RingImpl(RingKind kind) : kind_(kind) {}
  virtual ~RingImpl() = default;
  RingImpl(const RingImpl&) = delete;
  RingImpl& operator=(const RingImpl&) = delete;

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  std::uint64_t prime() const { return prime_; }
  const std::vector<Ring>& children() const { return children_; }
  ModuleKind module_kind() const { return module_; }
  int order() const { return order_; }

  Ring handle() const { return Ring(shared_from_this()); }
  Element make(Value v) const { return Element(Element::Trusted{}, handle(), std::move(v)); }

  virtual std::string expression() const = 0;
  virtual Value normalize(Value v) const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element from_integer(const mpz_class& n) const = 0;

  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element sub(const Element& a, const Element& b) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;

  virtual bool is_unit(const Element& a) const = 0;
  virtual std::optional<Element> inverse(const Element& a) const = 0;

  virtual BezoutCertificate bezout(const Element& a, const Element& b) const;
  virtual std::optional<Element> try_divide(const Element& a, const Element& d) const;
  virtual std::optional<Element> associate_unit(const Element& a, const Element& d) const;
  virtual Element canonical_associate(const Element& a) const;

  virtual std::optional<mpz_class> cardinality() const { return std::nullopt; }
  virtual Element element_at(const mpz_class& index) const;
  virtual mpz_class index_of(const Element& e) const;

 protected:
  RingKind kind_;
  mpz_class modulus_ = 0;
  std::uint64_t prime_ = 0;
  std::vector<Ring> children_;
  ModuleKind module_ = ModuleKind::self;
  int order_ = 0;

  // Exhaustive fallbacks shared by finite kinds.
  BezoutCertificate exhaustive_bezout(const Element& a, const Element& b) const;
  std::optional<Element> exhaustive_divide(const Element& a, const Element& d) const;
  std::optional<Element> exhaustive_associate_unit(const Element& a, const Element& d) const;
  Element exhaustive_canonical_associate(const Element& a) const;
  BezoutCertificate degenerate_certificate() const;
  [[noreturn]] void unsupported(const std::string& what) const;
};

std::shared_ptr<RingImpl> make_integer_ring();
std::shared_ptr<RingImpl> make_modular_ring(const mpz_class& n);
std::shared_ptr<RingImpl> make_gfpoly_ring(std::uint64_t p);
std::shared_ptr<RingImpl> make_product_ring(std::vector<Ring> components);
std::shared_ptr<RingImpl> make_trivial_extension_ring(const Ring& base, ModuleKind module);
std::shared_ptr<RingImpl> make_series_ring(int order);

}  // namespace edr
