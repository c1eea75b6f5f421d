#pragma once

// Text and JSON encodings of elements.
//
// A minimal JSON tree is used instead of a general-purpose JSON library
// because element payloads are arbitrary-precision integers; numbers are
// kept as their decimal text and never pass through a double.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

class Json {
 public:
  enum class Kind { null, boolean, number, string, array, object };
  using Members = std::vector<std::pair<std::string, Json>>;

  Json() = default;
  static Json null() { return Json(); }
  static Json boolean(bool b);
  /// `digits` must be an optionally signed decimal integer.
  static Json number(std::string digits);
  static Json number(const mpz_class& n);
  static Json number(long long n);
  static Json string(std::string s);
  static Json array(std::vector<Json> items = {});
  static Json object(Members members = {});

  Kind kind() const { return kind_; }
  bool is_null() const { return kind_ == Kind::null; }
  bool is_number() const { return kind_ == Kind::number; }
  bool is_string() const { return kind_ == Kind::string; }
  bool is_array() const { return kind_ == Kind::array; }
  bool is_object() const { return kind_ == Kind::object; }

  bool as_bool() const;
  /// Text of a number or string node.
  const std::string& text() const;
  const std::vector<Json>& items() const;
  const Members& members() const;
  /// nullptr if absent.
  const Json* find(std::string_view key) const;

  Json& push_back(Json item);
  Json& set(std::string key, Json value);

  /// Byte offset of this node in the parsed source, or npos.
  std::size_t position() const { return position_; }
  void set_position(std::size_t p) { position_ = p; }

  friend bool operator==(const Json& a, const Json& b);

 private:
  Kind kind_ = Kind::null;
  bool bool_ = false;
  std::string text_;
  std::vector<Json> items_;
  Members members_;
  std::size_t position_ = std::string::npos;
};

/// Throws ParseError with the offending byte offset.
Json parse_json(std::string_view text);
/// indent < 0: single line with ", " and ": " separators.
std::string dump_json(const Json& value, int indent = -1);

Json element_to_json(const Element& e);
Element element_from_json(const Ring& ring, const Json& value);

Element parse_element(const Ring& ring, std::string_view text);
std::string format_element(const Element& e);

/// Exact rational text: "p/q" in lowest terms, or the integer itself.
std::string format_rational(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

}  // namespace edr
