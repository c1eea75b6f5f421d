#include "edr/registry.hpp"

#include <cctype>

namespace edr {

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view s) : s_(s) {}

  Ring document() {
    Ring r = descriptor();
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters in ring descriptor");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "' in ring descriptor");
  }

  std::string word() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a positive integer");
    return mpz_class(std::string(s_.substr(start, i_ - start)), 10);
  }

  // ":" <arg> or "(" <arg> ")"
  template <typename F>
  auto argument(F f) {
    if (eat(':')) return f();
    expect('(');
    auto v = f();
    expect(')');
    return v;
  }

  Ring descriptor() {
    const std::size_t start = (skip_ws(), i_);
    const std::string w = word();
    if (w == "z" || w == "integers" || w == "Z") return Ring::integers();
    if (w == "zmod" || w == "modular") {
      mpz_class n = argument([&] { return integer(); });
      if (n < 2) throw PreconditionError("modulus must be at least 2, got " + n.get_str());
      return Ring::modular(n);
    }
    if (w == "gfpoly") {
      mpz_class p = argument([&] { return integer(); });
      if (!p.fits_ulong_p() || p >= (mpz_class(1) << 31)) {
        throw PreconditionError("prime must be below 2^31, got " + p.get_str());
      }
      return Ring::gfpoly(p.get_ui());
    }
    if (w == "series") {
      skip_ws();
      if (i_ < s_.size() && (s_[i_] == ':' || s_[i_] == '(')) {
        mpz_class k = argument([&] { return integer(); });
        if (k < 1 || k > 1000) throw PreconditionError("series order must lie in [1, 1000]");
        return Ring::series(static_cast<int>(k.get_si()));
      }
      return Ring::series();
    }
    if (w == "product") {
      bool paren = !eat(':');
      if (paren) expect('(');
      std::vector<Ring> comps{descriptor()};
      while (eat(',')) comps.push_back(descriptor());
      if (paren) expect(')');
      return Ring::product(std::move(comps));
    }
    if (w == "text") {
      bool paren = !eat(':');
      if (paren) expect('(');
      Ring base = descriptor();
      expect(',');
      const std::size_t mpos = (skip_ws(), i_);
      const std::string m = word();
      ModuleKind kind;
      if (m == "self") {
        kind = ModuleKind::self;
      } else if (m == "q" || m == "rationals" || m == "Q") {
        kind = ModuleKind::rationals;
      } else {
        throw ParseError("unknown module kind '" + m + "'", mpos);
      }
      if (paren) expect(')');
      return Ring::trivial_extension(base, kind);
    }
    if (w.empty()) fail("expected a ring descriptor");
    throw ParseError("unknown ring kind '" + w + "'", start);
  }
};

bool squarefree(const mpz_class& n) {
  mpz_class m = n;
  for (unsigned long p = 2; mpz_class(p) * p <= m; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
  }
  return true;
}

// A ∝ A is a Bezout ring only when A is a finite product of fields.
bool bezout_total(const Ring& r) {
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::modular:
    case RingKind::gfpoly: return true;
    case RingKind::series: return false;
    case RingKind::product:
      for (const auto& c : r.components()) {
        if (!bezout_total(c)) return false;
      }
      return true;
    case RingKind::trivial_extension:
      if (r.module_kind() == ModuleKind::rationals) return true;
      return r.base().kind() == RingKind::modular && squarefree(r.base().modulus());
  }
  return false;
}

}  // namespace

Ring parse_ring(std::string_view expr) { return DescriptorParser(expr).document(); }

RingEntry registry_entry(const Ring& ring) {
  RingEntry e{ring, false, false, {}, {}};
  e.finite = ring.is_finite();
  e.bezout_total = bezout_total(ring);
  switch (ring.kind()) {
    case RingKind::integers:
      e.stable_strategy = "nonzero-scan";
      e.unit_lift_strategy = "residues";
      break;
    case RingKind::gfpoly:
      e.stable_strategy = "nonzero-scan";
      e.unit_lift_strategy = "graded-residues";
      break;
    case RingKind::modular:
      e.stable_strategy = "zero";
      e.unit_lift_strategy = "enumeration";
      break;
    case RingKind::product:
      e.stable_strategy = "componentwise";
      e.unit_lift_strategy = "componentwise";
      break;
    case RingKind::trivial_extension:
      e.stable_strategy = e.finite ? "zero" : "base-component";
      e.unit_lift_strategy = e.finite ? "enumeration" : "base-component";
      break;
    case RingKind::series:
      e.stable_strategy = "constant-term";
      e.unit_lift_strategy = "constant-term";
      break;
  }
  return e;
}

RingEntry make_ring(std::string_view expr) { return registry_entry(parse_ring(expr)); }

std::vector<std::string> shipped_ring_examples() {
  return {"z",
          "zmod:6",
          "gfpoly:5",
          "product(zmod:2,zmod:3)",
          "text(zmod:6,self)",
          "text(z,q)",
          "series:8"};
}

}  // namespace edr
