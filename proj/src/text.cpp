#include "edr/text.hpp"

#include <cctype>

namespace edr {

// ---------------------------------------------------------------------------
// Json node

Json Json::boolean(bool b) {
  Json j;
  j.kind_ = Kind::boolean;
  j.bool_ = b;
  return j;
}

Json Json::number(std::string digits) {
  Json j;
  j.kind_ = Kind::number;
  j.text_ = std::move(digits);
  return j;
}

Json Json::number(const mpz_class& n) { return number(n.get_str()); }
Json Json::number(long long n) { return number(std::to_string(n)); }

Json Json::string(std::string s) {
  Json j;
  j.kind_ = Kind::string;
  j.text_ = std::move(s);
  return j;
}

Json Json::array(std::vector<Json> items) {
  Json j;
  j.kind_ = Kind::array;
  j.items_ = std::move(items);
  return j;
}

Json Json::object(Members members) {
  Json j;
  j.kind_ = Kind::object;
  j.members_ = std::move(members);
  return j;
}

bool Json::as_bool() const {
  if (kind_ != Kind::boolean) throw ParseError("expected a boolean", position_);
  return bool_;
}

const std::string& Json::text() const {
  if (kind_ != Kind::number && kind_ != Kind::string) {
    throw ParseError("expected a number or string", position_);
  }
  return text_;
}

const std::vector<Json>& Json::items() const {
  if (kind_ != Kind::array) throw ParseError("expected an array", position_);
  return items_;
}

const Json::Members& Json::members() const {
  if (kind_ != Kind::object) throw ParseError("expected an object", position_);
  return members_;
}

const Json* Json::find(std::string_view key) const {
  for (const auto& [k, v] : members()) {
    if (k == key) return &v;
  }
  return nullptr;
}

Json& Json::push_back(Json item) {
  items_.push_back(std::move(item));
  return *this;
}

Json& Json::set(std::string key, Json value) {
  for (auto& [k, v] : members_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  members_.emplace_back(std::move(key), std::move(value));
  return *this;
}

bool operator==(const Json& a, const Json& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Json::Kind::null: return true;
    case Json::Kind::boolean: return a.bool_ == b.bool_;
    case Json::Kind::number:
    case Json::Kind::string: return a.text_ == b.text_;
    case Json::Kind::array: return a.items_ == b.items_;
    case Json::Kind::object: return a.members_ == b.members_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Reader

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Json document() {
    Json v = value();
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters");
    return v;
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
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Json value() {
    skip_ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t start = i_;
    Json v;
    char c = s_[i_];
    if (c == '[') {
      v = array();
    } else if (c == '{') {
      v = object();
    } else if (c == '"') {
      v = Json::string(string());
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      v = number();
    } else if (literal("true")) {
      v = Json::boolean(true);
    } else if (literal("false")) {
      v = Json::boolean(false);
    } else if (literal("null")) {
      v = Json::null();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    v.set_position(start);
    return v;
  }

  bool literal(std::string_view word) {
    if (s_.substr(i_, word.size()) == word) {
      i_ += word.size();
      return true;
    }
    return false;
  }

  Json number() {
    std::string digits;
    if (s_[i_] == '-') digits += s_[i_++];
    else if (s_[i_] == '+') ++i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected digits");
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E')) {
      fail("only integer numbers are accepted");
    }
    // strip leading zeros, keep "-0" out
    std::size_t k = digits[0] == '-' ? 1 : 0;
    while (k + 1 < digits.size() && digits[k] == '0') digits.erase(k, 1);
    if (digits == "-0") digits = "0";
    return Json::number(std::move(digits));
  }

  std::string string() {
    ++i_;  // opening quote
    std::string out;
    while (true) {
      if (i_ >= s_.size()) fail("unterminated string");
      char c = s_[i_++];
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (i_ >= s_.size()) fail("unterminated escape");
      char e = s_[i_++];
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        default: --i_; fail("unsupported escape");
      }
    }
  }

  Json array() {
    ++i_;
    Json a = Json::array();
    if (eat(']')) return a;
    do {
      a.push_back(value());
    } while (eat(','));
    expect(']');
    return a;
  }

  Json object() {
    ++i_;
    Json o = Json::object();
    if (eat('}')) return o;
    do {
      skip_ws();
      if (i_ >= s_.size() || s_[i_] != '"') fail("expected a string key");
      std::string key = string();
      expect(':');
      o.set(std::move(key), value());
    } while (eat(','));
    expect('}');
    return o;
  }
};

void write(const Json& v, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.kind()) {
    case Json::Kind::null: out += "null"; return;
    case Json::Kind::boolean: out += v.as_bool() ? "true" : "false"; return;
    case Json::Kind::number: out += v.text(); return;
    case Json::Kind::string: {
      out += '"';
      for (char c : v.text()) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\t': out += "\\t"; break;
          case '\r': out += "\\r"; break;
          default: out += c;
        }
      }
      out += '"';
      return;
    }
    case Json::Kind::array: {
      const auto& items = v.items();
      if (items.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line even in indented mode.
      bool flat = indent < 0;
      if (!flat) {
        flat = true;
        for (const auto& it : items) {
          if (it.is_array() || it.is_object()) flat = false;
        }
      }
      out += '[';
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += flat ? ", " : ",";
        if (!flat) newline(depth + 1);
        write(items[i], flat ? -1 : indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::Kind::object: {
      const auto& members = v.members();
      if (members.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += indent < 0 ? ", " : ",";
        if (indent >= 0) newline(depth + 1);
        write(Json::string(members[i].first), -1, 0, out);
        out += ": ";
        write(members[i].second, indent, depth + 1, out);
      }
      if (indent >= 0) newline(depth);
      out += '}';
      return;
    }
  }
}

}  // namespace

Json parse_json(std::string_view text) { return Reader(text).document(); }

std::string dump_json(const Json& value, int indent) {
  std::string out;
  write(value, indent, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rationals

std::string format_rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s, std::size_t pos) {
  std::string t(s);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t lead = 0;
  while (lead < t.size() && std::isspace(static_cast<unsigned char>(t[lead]))) ++lead;
  t = t.substr(lead);
  if (!is_integer_text(t)) throw ParseError("expected an integer, got '" + t + "'", pos);
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(to_mpz(text, 0));
  mpz_class num = to_mpz(text.substr(0, slash), 0);
  mpz_class den = to_mpz(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Elements

namespace {

Json rational_json(const mpq_class& q) {
  if (q.get_den() == 1) return Json::number(q.get_num());
  return Json::string(format_rational(q));
}

mpz_class json_integer(const Json& v) {
  if (!v.is_number() && !v.is_string()) throw ParseError("expected an integer", v.position());
  return to_mpz(v.text(), v.position());
}

mpq_class json_rational(const Json& v) {
  if (!v.is_number() && !v.is_string()) throw ParseError("expected a rational", v.position());
  try {
    return parse_rational(v.text());
  } catch (const ParseError& e) {
    throw ParseError("malformed rational '" + v.text() + "'", v.position());
  }
}

const std::vector<Json>& json_items(const Json& v, std::size_t size, const Ring& ring) {
  if (!v.is_array() || v.items().size() != size) {
    throw ParseError("expected an array of " + std::to_string(size) + " entries for " +
                         ring.expression(),
                     v.position());
  }
  return v.items();
}

}  // namespace

Json element_to_json(const Element& e) {
  const Ring& r = e.ring();
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::modular: return Json::number(e.integer());
    case RingKind::gfpoly: {
      Json a = Json::array();
      for (auto c : e.poly().coeffs) a.push_back(Json::number(static_cast<long long>(c)));
      return a;
    }
    case RingKind::product: {
      Json a = Json::array();
      for (const auto& c : e.tuple()) a.push_back(element_to_json(c));
      return a;
    }
    case RingKind::trivial_extension: {
      if (r.module_kind() == ModuleKind::rationals) {
        const auto& p = e.int_rational();
        return Json::array({Json::number(p.base), rational_json(p.module)});
      }
      return Json::array({element_to_json(e.tuple()[0]), element_to_json(e.tuple()[1])});
    }
    case RingKind::series: {
      Json coeffs = Json::array();
      for (const auto& q : e.series().tail) coeffs.push_back(rational_json(q));
      return Json::object({{"constant", Json::number(e.series().constant)}, {"coeffs", coeffs}});
    }
  }
  throw InternalError("unknown ring kind");
}

Element element_from_json(const Ring& ring, const Json& v) {
  // A bare integer always denotes its image under Z -> R.
  if (ring.kind() != RingKind::series || !v.is_object()) {
    if (v.is_number() || (v.is_string() && is_integer_text(v.text()))) {
      return ring.from_integer(json_integer(v));
    }
  }
  switch (ring.kind()) {
    case RingKind::integers:
    case RingKind::modular: return ring.from_integer(json_integer(v));
    case RingKind::gfpoly: {
      if (!v.is_array()) throw ParseError("expected a coefficient array", v.position());
      const mpz_class p(static_cast<unsigned long>(ring.prime()));
      Poly poly;
      for (const auto& c : v.items()) {
        mpz_class r;
        mpz_class z = json_integer(c);
        mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        poly.coeffs.push_back(r.get_ui());
      }
      return Element(ring, std::move(poly));
    }
    case RingKind::product: {
      const auto& comps = ring.components();
      const auto& items = json_items(v, comps.size(), ring);
      Element::Tuple t;
      for (std::size_t i = 0; i < comps.size(); ++i) t.push_back(element_from_json(comps[i], items[i]));
      return Element(ring, std::move(t));
    }
    case RingKind::trivial_extension: {
      const auto& items = json_items(v, 2, ring);
      if (ring.module_kind() == ModuleKind::rationals) {
        return Element(ring, IntRationalPair{json_integer(items[0]), json_rational(items[1])});
      }
      return Element(ring, Element::Tuple{element_from_json(ring.base(), items[0]),
                                          element_from_json(ring.base(), items[1])});
    }
    case RingKind::series: {
      if (!v.is_object()) throw ParseError("expected {\"constant\", \"coeffs\"}", v.position());
      SeriesValue s{0, {}};
      if (const Json* c = v.find("constant")) s.constant = json_integer(*c);
      if (const Json* cs = v.find("coeffs")) {
        if (!cs->is_array()) throw ParseError("coeffs must be an array", cs->position());
        for (const auto& q : cs->items()) s.tail.push_back(json_rational(q));
      }
      for (const auto& [k, val] : v.members()) {
        if (k != "constant" && k != "coeffs") {
          throw ParseError("unknown series field '" + k + "'", val.position());
        }
      }
      return Element(ring, std::move(s));
    }
  }
  throw InternalError("unknown ring kind");
}

Element parse_element(const Ring& ring, std::string_view text) {
  return element_from_json(ring, parse_json(text));
}

std::string format_element(const Element& e) { return dump_json(element_to_json(e)); }

}  // namespace edr
