// Integers, residue rings Z/n and polynomial rings F_p[x].

#include <string>

#include "gf_poly.hpp"
#include "ring_impl.hpp"

namespace edr {

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

struct Gcdext {
  mpz_class g, s, t;
};

Gcdext gcdext(const mpz_class& a, const mpz_class& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class mod(const mpz_class& a, const mpz_class& n) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

const mpz_class& as_integer(const Element::Value& v, const std::string& ring) {
  if (auto p = std::get_if<mpz_class>(&v)) return *p;
  throw PreconditionError("payload does not match " + ring);
}

// ---------------------------------------------------------------------------

class IntegerRing final : public RingImpl {
 public:
  IntegerRing() : RingImpl(RingKind::integers) {}

  std::string expression() const override { return "z"; }
  Value normalize(Value v) const override {
    as_integer(v, "z");
    return v;
  }

  Element zero() const override { return make(mpz_class(0)); }
  Element one() const override { return make(mpz_class(1)); }
  Element from_integer(const mpz_class& n) const override { return make(n); }

  Element add(const Element& a, const Element& b) const override {
    return make(mpz_class(a.integer() + b.integer()));
  }
  Element sub(const Element& a, const Element& b) const override {
    return make(mpz_class(a.integer() - b.integer()));
  }
  Element mul(const Element& a, const Element& b) const override {
    return make(mpz_class(a.integer() * b.integer()));
  }
  Element neg(const Element& a) const override { return make(mpz_class(-a.integer())); }

  bool is_unit(const Element& a) const override { return abs(a.integer()) == 1; }
  std::optional<Element> inverse(const Element& a) const override {
    if (!is_unit(a)) return std::nullopt;
    return a;
  }

  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    if (a.integer() == 0 && b.integer() == 0) return degenerate_certificate();
    auto [g, s, t] = gcdext(a.integer(), b.integer());
    return BezoutCertificate{make(g), make(s), make(t), make(mpz_class(a.integer() / g)),
                             make(mpz_class(b.integer() / g)), false};
  }

  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    if (d.integer() == 0) {
      if (a.integer() == 0) return zero();
      return std::nullopt;
    }
    if (!mpz_divisible_p(a.integer().get_mpz_t(), d.integer().get_mpz_t())) return std::nullopt;
    return make(mpz_class(a.integer() / d.integer()));
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    auto q = try_divide(a, d);
    if (!q) return std::nullopt;
    if (d.integer() == 0) return one();
    if (!is_unit(*q)) return std::nullopt;
    return q;
  }

  Element canonical_associate(const Element& a) const override {
    return make(mpz_class(abs(a.integer())));
  }
};

// ---------------------------------------------------------------------------

class ModularRing final : public RingImpl {
 public:
  explicit ModularRing(const mpz_class& n) : RingImpl(RingKind::modular) {
    if (n < 2) throw PreconditionError("modulus must be at least 2, got " + n.get_str());
    modulus_ = n;
  }

  std::string expression() const override { return "zmod:" + modulus_.get_str(); }
  Value normalize(Value v) const override {
    return mod(as_integer(v, expression()), modulus_);
  }

  Element zero() const override { return make(mpz_class(0)); }
  Element one() const override { return make(mpz_class(1)); }
  Element from_integer(const mpz_class& n) const override { return make(mod(n, modulus_)); }

  Element add(const Element& a, const Element& b) const override {
    return make(mod(a.integer() + b.integer(), modulus_));
  }
  Element sub(const Element& a, const Element& b) const override {
    return make(mod(a.integer() - b.integer(), modulus_));
  }
  Element mul(const Element& a, const Element& b) const override {
    return make(mod(a.integer() * b.integer(), modulus_));
  }
  Element neg(const Element& a) const override { return make(mod(-a.integer(), modulus_)); }

  bool is_unit(const Element& a) const override { return gcd(a.integer(), modulus_) == 1; }
  std::optional<Element> inverse(const Element& a) const override {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.integer().get_mpz_t(), modulus_.get_mpz_t())) {
      return std::nullopt;
    }
    return make(mod(r, modulus_));
  }

  // d = gcd(a, b, n). The cofactors a/d, b/d are only determined modulo
  // n/d; a lift of a0 is chosen so that (a0, b0) is unimodular mod n, which
  // the stable-range-1 property of Z/n guarantees exists.
  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    if (a.integer() == 0 && b.integer() == 0) return degenerate_certificate();
    const mpz_class g = gcd(gcd(a.integer(), b.integer()), modulus_);
    const mpz_class step = modulus_ / g;
    const mpz_class b0 = b.integer() / g;
    mpz_class a0 = a.integer() / g;
    for (mpz_class k = 0;; ++k) {
      if (k >= g) throw InternalError("unimodular lift not found in " + expression());
      if (gcd(gcd(a0, b0), modulus_) == 1) break;
      a0 += step;
    }
    auto e1 = gcdext(a0, b0);
    auto e2 = gcdext(e1.g, modulus_);
    return BezoutCertificate{make(mod(g, modulus_)), make(mod(e1.s * e2.s, modulus_)),
                             make(mod(e1.t * e2.s, modulus_)), make(mod(a0, modulus_)),
                             make(mod(b0, modulus_)), false};
  }

  // Solutions of d·q = a form q0 + k·(n/g), k in [0, g); q0 is the
  // smallest one.
  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    auto q0 = smallest_quotient(a.integer(), d.integer());
    if (!q0) return std::nullopt;
    return make(*q0);
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    auto q0 = smallest_quotient(a.integer(), d.integer());
    if (!q0) return std::nullopt;
    const mpz_class g = gcd(d.integer(), modulus_);
    const mpz_class step = modulus_ / g;
    mpz_class q = *q0;
    for (mpz_class k = 0; k < g; ++k, q += step) {
      if (gcd(q, modulus_) == 1) return make(q);
    }
    return std::nullopt;
  }

  Element canonical_associate(const Element& a) const override {
    return make(mod(gcd(a.integer(), modulus_), modulus_));
  }

  std::optional<mpz_class> cardinality() const override { return modulus_; }
  Element element_at(const mpz_class& index) const override { return make(index); }
  mpz_class index_of(const Element& e) const override { return e.integer(); }

 private:
  std::optional<mpz_class> smallest_quotient(const mpz_class& a, const mpz_class& d) const {
    const mpz_class g = gcd(d, modulus_);
    if (!mpz_divisible_p(a.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    const mpz_class m = modulus_ / g;
    if (m == 1) return mpz_class(0);
    mpz_class inv;
    mpz_class dg = mod(d / g, m);
    mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), m.get_mpz_t());
    return mod((a / g) * inv, m);
  }
};

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

class GfPolyRing final : public RingImpl {
 public:
  explicit GfPolyRing(std::uint64_t p) : RingImpl(RingKind::gfpoly) {
    if (p >= (1ULL << 31)) throw PreconditionError("prime must be below 2^31");
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    prime_ = p;
  }

  std::string expression() const override { return "gfpoly:" + std::to_string(prime_); }
  Value normalize(Value v) const override {
    auto* poly = std::get_if<Poly>(&v);
    if (!poly) throw PreconditionError("payload does not match " + expression());
    for (auto& c : poly->coeffs) c %= prime_;
    gf::trim(poly->coeffs);
    return v;
  }

  Element zero() const override { return lift({}); }
  Element one() const override { return lift({1}); }
  Element from_integer(const mpz_class& n) const override {
    mpz_class r;
    mpz_class p(static_cast<unsigned long>(prime_));
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    gf::Coeffs c{r.get_ui()};
    gf::trim(c);
    return lift(std::move(c));
  }

  Element add(const Element& a, const Element& b) const override {
    return lift(gf::add(co(a), co(b), prime_));
  }
  Element sub(const Element& a, const Element& b) const override {
    return lift(gf::sub(co(a), co(b), prime_));
  }
  Element mul(const Element& a, const Element& b) const override {
    return lift(gf::mul(co(a), co(b), prime_));
  }
  Element neg(const Element& a) const override { return lift(gf::neg(co(a), prime_)); }

  bool is_unit(const Element& a) const override { return co(a).size() == 1; }
  std::optional<Element> inverse(const Element& a) const override {
    if (!is_unit(a)) return std::nullopt;
    return lift({gf::inv(co(a)[0], prime_)});
  }

  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    if (co(a).empty() && co(b).empty()) return degenerate_certificate();
    auto e = gf::gcdext(co(a), co(b), prime_);
    auto a0 = gf::divmod(co(a), e.g, prime_).first;
    auto b0 = gf::divmod(co(b), e.g, prime_).first;
    return BezoutCertificate{lift(e.g), lift(e.s), lift(e.t), lift(a0), lift(b0), false};
  }

  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    if (co(d).empty()) {
      if (co(a).empty()) return zero();
      return std::nullopt;
    }
    auto [q, r] = gf::divmod(co(a), co(d), prime_);
    if (!r.empty()) return std::nullopt;
    return lift(std::move(q));
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    auto q = try_divide(a, d);
    if (!q) return std::nullopt;
    if (co(d).empty()) return one();
    if (!is_unit(*q)) return std::nullopt;
    return q;
  }

  Element canonical_associate(const Element& a) const override {
    return lift(gf::monic(co(a), prime_));
  }

 private:
  static const gf::Coeffs& co(const Element& e) { return e.poly().coeffs; }
  Element lift(gf::Coeffs c) const { return make(Poly{std::move(c)}); }
};

}  // namespace

std::shared_ptr<RingImpl> make_integer_ring() { return std::make_shared<IntegerRing>(); }
std::shared_ptr<RingImpl> make_modular_ring(const mpz_class& n) {
  return std::make_shared<ModularRing>(n);
}
std::shared_ptr<RingImpl> make_gfpoly_ring(std::uint64_t p) {
  return std::make_shared<GfPolyRing>(p);
}

}  // namespace edr
