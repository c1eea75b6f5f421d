// Products, trivial extensions A ∝ A and Z ∝ Q, and the truncated ring
// Z + xQ[x]/(x^(order+1)).

#include <algorithm>
#include <string>

#include "ring_impl.hpp"

namespace edr {

namespace {

const Element::Tuple& as_tuple(const Element::Value& v, const std::string& ring,
                               std::size_t size) {
  auto* t = std::get_if<Element::Tuple>(&v);
  if (!t || t->size() != size) throw PreconditionError("payload does not match " + ring);
  return *t;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// ---------------------------------------------------------------------------

class ProductRing final : public RingImpl {
 public:
  explicit ProductRing(std::vector<Ring> components) : RingImpl(RingKind::product) {
    if (components.empty()) throw PreconditionError("product needs at least one component");
    children_ = std::move(components);
  }

  std::string expression() const override {
    std::string s = "product(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) s += ",";
      s += children_[i].expression();
    }
    return s + ")";
  }

  Value normalize(Value v) const override {
    const auto& t = as_tuple(v, expression(), children_.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].ring() != children_[i]) {
        throw DescriptorMismatch("component " + std::to_string(i) + " of " + expression() +
                                 " has ring " + t[i].ring().expression());
      }
    }
    return v;
  }

  Element zero() const override {
    return map([](const Ring& r) { return r.zero(); });
  }
  Element one() const override {
    return map([](const Ring& r) { return r.one(); });
  }
  Element from_integer(const mpz_class& n) const override {
    return map([&](const Ring& r) { return r.from_integer(n); });
  }

  Element add(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Element& x, const Element& y) { return x + y; });
  }
  Element sub(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Element& x, const Element& y) { return x - y; });
  }
  Element mul(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Element& x, const Element& y) { return x * y; });
  }
  Element neg(const Element& a) const override {
    Element::Tuple out;
    for (const auto& x : a.tuple()) out.push_back(-x);
    return make(std::move(out));
  }

  bool is_unit(const Element& a) const override {
    return std::all_of(a.tuple().begin(), a.tuple().end(),
                       [](const Element& x) { return edr::is_unit(x); });
  }
  std::optional<Element> inverse(const Element& a) const override {
    Element::Tuple out;
    for (const auto& x : a.tuple()) {
      auto inv = x.ring().impl().inverse(x);
      if (!inv) return std::nullopt;
      out.push_back(*inv);
    }
    return make(std::move(out));
  }

  // Componentwise. A component with a_i = b_i = 0 gets d_i = 0, x_i = 1,
  // a0_i = 1, which keeps the refined identity intact in that slot.
  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    if (a.is_zero() && b.is_zero()) return degenerate_certificate();
    Element::Tuple d, x, y, a0, b0;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      auto c = edr::bezout(a.tuple()[i], b.tuple()[i]);
      if (c.degenerate) c.a0 = children_[i].one();
      d.push_back(c.d);
      x.push_back(c.x);
      y.push_back(c.y);
      a0.push_back(c.a0);
      b0.push_back(c.b0);
    }
    return BezoutCertificate{make(std::move(d)), make(std::move(x)), make(std::move(y)),
                             make(std::move(a0)), make(std::move(b0)), false};
  }

  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    Element::Tuple out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      auto q = edr::try_divide(a.tuple()[i], d.tuple()[i]);
      if (!q) return std::nullopt;
      out.push_back(*q);
    }
    return make(std::move(out));
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    Element::Tuple out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      auto u = a.tuple()[i].ring().impl().associate_unit(a.tuple()[i], d.tuple()[i]);
      if (!u) return std::nullopt;
      out.push_back(*u);
    }
    return make(std::move(out));
  }

  Element canonical_associate(const Element& a) const override {
    Element::Tuple out;
    for (const auto& x : a.tuple()) out.push_back(edr::canonical_associate(x));
    return make(std::move(out));
  }

  std::optional<mpz_class> cardinality() const override {
    mpz_class n = 1;
    for (const auto& c : children_) {
      auto k = c.cardinality();
      if (!k) return std::nullopt;
      n *= *k;
    }
    return n;
  }

  // Lexicographic, first component most significant.
  Element element_at(const mpz_class& index) const override {
    Element::Tuple out(children_.size(), children_.front().zero());
    mpz_class rest = index;
    for (std::size_t i = children_.size(); i-- > 0;) {
      mpz_class k = *children_[i].cardinality();
      out[i] = edr::element_at(children_[i], mpz_class(rest % k));
      rest /= k;
    }
    return make(std::move(out));
  }

  mpz_class index_of(const Element& e) const override {
    mpz_class idx = 0;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      idx = idx * *children_[i].cardinality() + enumeration_index(e.tuple()[i]);
    }
    return idx;
  }

 private:
  template <typename F>
  Element map(F f) const {
    Element::Tuple out;
    for (const auto& c : children_) out.push_back(f(c));
    return make(std::move(out));
  }

  template <typename F>
  Element zip(const Element& a, const Element& b, F f) const {
    Element::Tuple out;
    for (std::size_t i = 0; i < children_.size(); ++i) out.push_back(f(a.tuple()[i], b.tuple()[i]));
    return make(std::move(out));
  }
};

// ---------------------------------------------------------------------------

/// A ∝ A with (a, e)(b, f) = (ab, af + be).
class SelfExtensionRing final : public RingImpl {
 public:
  explicit SelfExtensionRing(const Ring& base) : RingImpl(RingKind::trivial_extension) {
    children_ = {base};
    module_ = ModuleKind::self;
  }

  std::string expression() const override { return "text(" + base().expression() + ",self)"; }

  Value normalize(Value v) const override {
    const auto& t = as_tuple(v, expression(), 2);
    if (t[0].ring() != base() || t[1].ring() != base()) {
      throw DescriptorMismatch("pair components of " + expression() + " must lie in " +
                               base().expression());
    }
    return v;
  }

  Element zero() const override { return pair(base().zero(), base().zero()); }
  Element one() const override { return pair(base().one(), base().zero()); }
  Element from_integer(const mpz_class& n) const override {
    return pair(base().from_integer(n), base().zero());
  }

  Element add(const Element& a, const Element& b) const override {
    return pair(fst(a) + fst(b), snd(a) + snd(b));
  }
  Element sub(const Element& a, const Element& b) const override {
    return pair(fst(a) - fst(b), snd(a) - snd(b));
  }
  Element mul(const Element& a, const Element& b) const override {
    return pair(fst(a) * fst(b), fst(a) * snd(b) + snd(a) * fst(b));
  }
  Element neg(const Element& a) const override { return pair(-fst(a), -snd(a)); }

  bool is_unit(const Element& a) const override { return edr::is_unit(fst(a)); }
  std::optional<Element> inverse(const Element& a) const override {
    auto u = base().impl().inverse(fst(a));
    if (!u) return std::nullopt;
    return pair(*u, -(snd(a) * *u * *u));
  }

  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    if (cardinality()) return exhaustive_divide(a, d);
    // (n, e) = (m, f)(u, g): over a domain base the quotient is forced.
    require_domain_base("exact division");
    const Element &n = fst(a), &e = snd(a), &m = fst(d), &f = snd(d);
    if (!m.is_zero()) {
      auto u = edr::try_divide(n, m);
      if (!u) return std::nullopt;
      auto g = edr::try_divide(e - f * *u, m);
      if (!g) return std::nullopt;
      return pair(*u, *g);
    }
    if (!n.is_zero()) return std::nullopt;
    if (f.is_zero()) {
      if (e.is_zero()) return zero();
      return std::nullopt;
    }
    auto u = edr::try_divide(e, f);
    if (!u) return std::nullopt;
    return pair(*u, base().zero());
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    if (cardinality()) return exhaustive_associate_unit(a, d);
    require_domain_base("associate_unit");
    if (a.is_zero() && d.is_zero()) return one();
    auto q = try_divide(a, d);
    if (!q || !is_unit(*q)) return std::nullopt;
    return q;
  }

  // Over Z: (n, e) ~ (|n|, e' mod |n|) for n != 0 and (0, e) ~ (0, |e|).
  Element canonical_associate(const Element& a) const override {
    if (cardinality()) return exhaustive_canonical_associate(a);
    if (base().kind() != RingKind::integers) unsupported("canonical associates");
    const mpz_class& n = fst(a).integer();
    const mpz_class& e = snd(a).integer();
    if (n == 0) return pair(base().zero(), base().from_integer(abs(e)));
    mpz_class s = n < 0 ? -1 : 1;
    mpz_class an = abs(n);
    mpz_class r;
    mpz_class es = e * s;
    mpz_mod(r.get_mpz_t(), es.get_mpz_t(), an.get_mpz_t());
    return pair(base().from_integer(an), base().from_integer(r));
  }

  std::optional<mpz_class> cardinality() const override {
    auto n = base().cardinality();
    if (!n) return std::nullopt;
    return *n * *n;
  }

  Element element_at(const mpz_class& index) const override {
    mpz_class n = *base().cardinality();
    return pair(edr::element_at(base(), mpz_class(index / n)),
                edr::element_at(base(), mpz_class(index % n)));
  }

  mpz_class index_of(const Element& e) const override {
    return enumeration_index(fst(e)) * *base().cardinality() + enumeration_index(snd(e));
  }

 private:
  const Ring& base() const { return children_.front(); }
  static const Element& fst(const Element& a) { return a.tuple()[0]; }
  static const Element& snd(const Element& a) { return a.tuple()[1]; }
  Element pair(Element a, Element e) const { return make(Element::Tuple{std::move(a), std::move(e)}); }

  void require_domain_base(const std::string& what) const {
    auto k = base().kind();
    if (k != RingKind::integers && k != RingKind::gfpoly) unsupported(what);
  }
};

// ---------------------------------------------------------------------------

/// Z ∝ Q. Associate normal forms: (n, q) ~ (|n|, 0) for n != 0, and
/// (0, q) ~ (0, |q|).
class IntRationalRing final : public RingImpl {
 public:
  explicit IntRationalRing(const Ring& base) : RingImpl(RingKind::trivial_extension) {
    if (base.kind() != RingKind::integers) {
      throw PreconditionError("module q is only available over z, got " + base.expression());
    }
    children_ = {base};
    module_ = ModuleKind::rationals;
  }

  std::string expression() const override { return "text(z,q)"; }

  Value normalize(Value v) const override {
    auto* p = std::get_if<IntRationalPair>(&v);
    if (!p) throw PreconditionError("payload does not match " + expression());
    if (p->module.get_den() == 0) throw PreconditionError("zero denominator");
    p->module.canonicalize();
    return v;
  }

  Element zero() const override { return pair(0, 0); }
  Element one() const override { return pair(1, 0); }
  Element from_integer(const mpz_class& n) const override { return pair(n, 0); }

  Element add(const Element& a, const Element& b) const override {
    return pair(n(a) + n(b), mpq_class(e(a) + e(b)));
  }
  Element sub(const Element& a, const Element& b) const override {
    return pair(n(a) - n(b), mpq_class(e(a) - e(b)));
  }
  Element mul(const Element& a, const Element& b) const override {
    return pair(n(a) * n(b), mpq_class(n(a) * e(b) + e(a) * n(b)));
  }
  Element neg(const Element& a) const override { return pair(-n(a), mpq_class(-e(a))); }

  bool is_unit(const Element& a) const override { return abs(n(a)) == 1; }
  std::optional<Element> inverse(const Element& a) const override {
    if (!is_unit(a)) return std::nullopt;
    // u^2 = 1, so (u, e)^-1 = (u, -e).
    return pair(n(a), mpq_class(-e(a)));
  }

  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    if (a.is_zero() && b.is_zero()) return degenerate_certificate();
    if (n(a) != 0 || n(b) != 0) {
      // Both generators reduce to (n, 0)·unit; the ideal is (gZ, Q).
      mpz_class g = gcd(n(a), n(b)), s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), n(a).get_mpz_t(), n(b).get_mpz_t());
      Element x = n(a) != 0 ? mul(pair(s, 0), *inverse(unit_part(a))) : zero();
      Element y = n(b) != 0 ? mul(pair(t, 0), *inverse(unit_part(b))) : zero();
      return BezoutCertificate{pair(g, 0), x, y, scaled(a, g), scaled(b, g), false};
    }
    // (0, e)R + (0, f)R = (0, eZ + fZ) = (0, gZ) with g = gcd(E, F)/L.
    mpz_class L = lcm(e(a).get_den(), e(b).get_den());
    mpz_class E = e(a).get_num() * (L / e(a).get_den());
    mpz_class F = e(b).get_num() * (L / e(b).get_den());
    mpz_class G, s, t;
    mpz_gcdext(G.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), E.get_mpz_t(), F.get_mpz_t());
    return BezoutCertificate{pair(0, mpq_class(G, L)), pair(s, 0), pair(t, 0),
                             pair(mpz_class(E / G), 0), pair(mpz_class(F / G), 0), false};
  }

  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    if (n(d) != 0) {
      if (!mpz_divisible_p(n(a).get_mpz_t(), n(d).get_mpz_t())) return std::nullopt;
      mpz_class u = n(a) / n(d);
      return pair(u, mpq_class((e(a) - e(d) * u) / n(d)));
    }
    if (n(a) != 0) return std::nullopt;
    if (e(d) == 0) {
      if (e(a) == 0) return zero();
      return std::nullopt;
    }
    mpq_class ratio = e(a) / e(d);
    if (ratio.get_den() != 1) return std::nullopt;
    return pair(ratio.get_num(), 0);
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    if (a.is_zero() && d.is_zero()) return one();
    auto q = try_divide(a, d);
    if (!q || !is_unit(*q)) return std::nullopt;
    return q;
  }

  Element canonical_associate(const Element& a) const override {
    if (n(a) != 0) return pair(abs(n(a)), 0);
    return pair(0, mpq_class(abs(e(a))));
  }

 private:
  static const mpz_class& n(const Element& a) { return a.int_rational().base; }
  static const mpq_class& e(const Element& a) { return a.int_rational().module; }
  Element pair(const mpz_class& base, const mpq_class& module) const {
    IntRationalPair p{base, module};
    p.module.canonicalize();
    return make(std::move(p));
  }
  static mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  // (n, e) = n · (1, e/n) for n != 0.
  Element unit_part(const Element& a) const { return pair(1, mpq_class(e(a) / n(a))); }
  Element scaled(const Element& a, const mpz_class& g) const {
    return pair(mpz_class(n(a) / g), mpq_class(e(a) / g));
  }
};

// ---------------------------------------------------------------------------

/// Elements a_0 + a_1 x + ... + a_N x^N with a_0 in Z, a_i in Q, computed
/// modulo x^(N+1).
class SeriesRing final : public RingImpl {
 public:
  explicit SeriesRing(int order) : RingImpl(RingKind::series) {
    if (order < 1) throw PreconditionError("series order must be at least 1");
    order_ = order;
  }

  std::string expression() const override { return "series:" + std::to_string(order_); }

  Value normalize(Value v) const override {
    auto* s = std::get_if<SeriesValue>(&v);
    if (!s) throw PreconditionError("payload does not match " + expression());
    for (auto& c : s->tail) {
      if (c.get_den() == 0) throw PreconditionError("zero denominator");
      c.canonicalize();
    }
    if (s->tail.size() > static_cast<std::size_t>(order_)) s->tail.resize(order_);
    while (!s->tail.empty() && s->tail.back() == 0) s->tail.pop_back();
    return v;
  }

  Element zero() const override { return make(SeriesValue{0, {}}); }
  Element one() const override { return make(SeriesValue{1, {}}); }
  Element from_integer(const mpz_class& n) const override { return make(SeriesValue{n, {}}); }

  Element add(const Element& a, const Element& b) const override {
    return combine(a, b, +1);
  }
  Element sub(const Element& a, const Element& b) const override {
    return combine(a, b, -1);
  }
  Element mul(const Element& a, const Element& b) const override {
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<mpq_class> c(order_ + 1, 0);
    for (int i = 0; i <= order_; ++i) {
      if (ca[i] == 0) continue;
      for (int j = 0; i + j <= order_; ++j) c[i + j] += ca[i] * cb[j];
    }
    return from_coeffs(c);
  }
  Element neg(const Element& a) const override {
    SeriesValue s = a.series();
    s.constant = -s.constant;
    for (auto& t : s.tail) t = -t;
    return make(std::move(s));
  }

  bool is_unit(const Element& a) const override { return abs(a.series().constant) == 1; }
  std::optional<Element> inverse(const Element& a) const override {
    if (!is_unit(a)) return std::nullopt;
    auto ca = coeffs(a);
    std::vector<mpq_class> b(order_ + 1, 0);
    b[0] = ca[0];  // (±1)^-1 = ±1
    for (int k = 1; k <= order_; ++k) {
      mpq_class acc = 0;
      for (int i = 1; i <= k; ++i) acc += ca[i] * b[k - i];
      b[k] = -acc * b[0];
    }
    return from_coeffs(b);
  }

  // Supported when one operand has a nonzero constant term: then it is
  // its constant term times a unit 1 + x(...).
  BezoutCertificate bezout(const Element& a, const Element& b) const override {
    const mpz_class& a0 = a.series().constant;
    const mpz_class& b0 = b.series().constant;
    if (a0 == 0 && b0 == 0) {
      if (a.is_zero() && b.is_zero()) return degenerate_certificate();
      unsupported("bezout for two elements with zero constant term");
    }
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a0.get_mpz_t(), b0.get_mpz_t());
    Element x = a0 != 0 ? mul(from_integer(s), *inverse(unit_part(a))) : zero();
    Element y = b0 != 0 ? mul(from_integer(t), *inverse(unit_part(b))) : zero();
    Element d = from_integer(g);
    return BezoutCertificate{d, x, y, *try_divide(a, d), *try_divide(b, d), false};
  }

  // Solves d·q = a coefficientwise from the lowest nonzero coefficient of d;
  // coefficients of q that the truncation leaves free are set to zero.
  std::optional<Element> try_divide(const Element& a, const Element& d) const override {
    auto cd = coeffs(d), ca = coeffs(a);
    int k = 0;
    while (k <= order_ && cd[k] == 0) ++k;
    if (k > order_) {
      if (a.is_zero()) return zero();
      return std::nullopt;
    }
    for (int i = 0; i < k; ++i) {
      if (ca[i] != 0) return std::nullopt;
    }
    std::vector<mpq_class> q(order_ + 1, 0);
    for (int j = 0; j <= order_ - k; ++j) {
      mpq_class acc = ca[k + j];
      for (int i = 1; i <= j; ++i) acc -= cd[k + i] * q[j - i];
      q[j] = acc / cd[k];
    }
    if (q[0].get_den() != 1) return std::nullopt;
    return from_coeffs(q);
  }

  std::optional<Element> associate_unit(const Element& a, const Element& d) const override {
    if (a.is_zero() && d.is_zero()) return one();
    auto q = try_divide(a, d);
    if (!q || !is_unit(*q)) return std::nullopt;
    return q;
  }

  // c_0 != 0: |c_0|. Otherwise |h| x^k for the lowest nonzero term h x^k.
  Element canonical_associate(const Element& a) const override {
    const auto& s = a.series();
    if (s.constant != 0) return from_integer(abs(s.constant));
    for (std::size_t i = 0; i < s.tail.size(); ++i) {
      if (s.tail[i] != 0) {
        SeriesValue out{0, std::vector<mpq_class>(i + 1, 0)};
        out.tail[i] = abs(s.tail[i]);
        return make(std::move(out));
      }
    }
    return zero();
  }

 private:
  std::vector<mpq_class> coeffs(const Element& a) const {
    std::vector<mpq_class> c(order_ + 1, 0);
    c[0] = a.series().constant;
    for (std::size_t i = 0; i < a.series().tail.size(); ++i) c[i + 1] = a.series().tail[i];
    return c;
  }

  Element from_coeffs(const std::vector<mpq_class>& c) const {
    if (c[0].get_den() != 1) throw InternalError("non-integral constant term in " + expression());
    SeriesValue s{c[0].get_num(), std::vector<mpq_class>(c.begin() + 1, c.end())};
    return Element(handle(), std::move(s));
  }

  Element combine(const Element& a, const Element& b, int sign) const {
    auto ca = coeffs(a), cb = coeffs(b);
    for (int i = 0; i <= order_; ++i) ca[i] += sign * cb[i];
    return from_coeffs(ca);
  }

  // f = f(0) · (1 + x·tail/f(0)) for f(0) != 0.
  Element unit_part(const Element& a) const {
    const auto& s = a.series();
    SeriesValue u{1, s.tail};
    for (auto& t : u.tail) t /= s.constant;
    return Element(handle(), std::move(u));
  }
};

}  // namespace

std::shared_ptr<RingImpl> make_product_ring(std::vector<Ring> components) {
  return std::make_shared<ProductRing>(std::move(components));
}

std::shared_ptr<RingImpl> make_trivial_extension_ring(const Ring& base, ModuleKind module) {
  if (module == ModuleKind::rationals) return std::make_shared<IntRationalRing>(base);
  return std::make_shared<SelfExtensionRing>(base);
}

std::shared_ptr<RingImpl> make_series_ring(int order) {
  return std::make_shared<SeriesRing>(order);
}

}  // namespace edr
