// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON reading and writing with arbitrary-precision integers.
//
// nlohmann::json folds integers outside the 64-bit range into doubles. The
// SAX handler below intercepts those tokens and keeps their digits in a
// binary value tagged with kBigIntSubtype, so nothing is ever rounded.
// Non-integral JSON numbers are rejected; fractions travel as "num/den"
// strings.

#ifndef BMGAME_JSON_IO_HPP
#define BMGAME_JSON_IO_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bmgame/error.hpp"
#include "bmgame/rational.hpp"
#include "json.hpp"

namespace bmgame {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kBigIntSubtype = 0xB1;

namespace detail {

class BigIntSaxBuilder {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  explicit BigIntSaxBuilder(Json& root) : root_(root) {}

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool v) { return put(Json(v)); }
  bool number_integer(number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) { return put(Json(v)); }
  bool number_float(number_float_t, const string_t& raw) {
    if (!parse_bigint(raw)) {
      error_ = "non-integer number '" + raw + "' (write fractions as \"num/den\")";
      return false;
    }
    std::vector<std::uint8_t> digits(raw.begin(), raw.end());
    return put(Json::binary(std::move(digits), kBigIntSubtype));
  }
  bool string(string_t& v) { return put(Json(v)); }
  bool binary(binary_t& v) { return put(Json::binary(v)); }

  bool start_object(std::size_t) {
    Json* slot = place(Json::object());
    stack_.push_back(slot);
    return true;
  }
  bool key(string_t& k) {
    Json& obj = *stack_.back();
    if (obj.contains(k)) {
      error_ = "duplicate key \"" + k + "\"";
      return false;
    }
    pending_key_ = &obj[k];
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    Json* slot = place(Json::array());
    stack_.push_back(slot);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    if (error_.empty()) error_ = ex.what();
    error_position_ = position;
    return false;
  }

  [[nodiscard]] const std::string& error() const { return error_; }
  [[nodiscard]] std::size_t error_position() const { return error_position_; }

 private:
  Json* place(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    *pending_key_ = std::move(value);
    return pending_key_;
  }
  bool put(Json value) {
    place(std::move(value));
    return true;
  }

  Json& root_;
  std::vector<Json*> stack_;
  Json* pending_key_ = nullptr;
  std::string error_;
  std::size_t error_position_ = 0;
};

inline bool is_scalar(const Json& j) {
  return !j.is_object() && !j.is_array();
}

inline bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  for (const auto& e : j) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

inline void write_scalar(std::ostream& os, const Json& j) {
  if (j.is_binary()) {
    const auto& bytes = j.get_binary();
    os << std::string(bytes.begin(), bytes.end());
  } else {
    os << j.dump();
  }
}

inline void write_value(std::ostream& os, const Json& j, int indent) {
  if (is_scalar(j)) {
    write_scalar(os, j);
    return;
  }
  const bool object = j.is_object();
  const char open = object ? '{' : '[';
  const char close = object ? '}' : ']';
  if (j.empty()) {
    os << open << close;
    return;
  }
  const bool flat = is_flat(j);
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  os << open;
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) os << (flat ? ", " : ",");
    first = false;
    if (!flat) os << '\n' << pad;
    if (object) os << Json(it.key()).dump() << ": ";
    write_value(os, it.value(), indent + 2);
  }
  if (!flat) os << '\n' << std::string(static_cast<std::size_t>(indent), ' ');
  os << close;
}

}  // namespace detail

/// Parses a JSON document, keeping integers of any size exact.
inline Json parse_json(std::string_view text) {
  Json root;
  detail::BigIntSaxBuilder builder(root);
  const bool ok = Json::sax_parse(text.begin(), text.end(), &builder);
  if (!ok) {
    std::string msg = builder.error();
    if (msg.empty()) msg = "malformed JSON";
    throw Error(ErrorKind::kParse,
                msg + " (near byte " + std::to_string(builder.error_position()) + ")");
  }
  return root;
}

/// Deterministic pretty printer: containers of scalars stay on one line.
inline std::string write_json(const Json& j) {
  std::ostringstream os;
  detail::write_value(os, j, 0);
  os << '\n';
  return os.str();
}

inline Json bigint_to_json(const BigInt& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  const std::string digits = v.str();
  return Json::binary(std::vector<std::uint8_t>(digits.begin(), digits.end()),
                      kBigIntSubtype);
}

/// Integers stay JSON numbers; proper fractions become "num/den" strings.
inline Json rational_to_json(const Rational& r) {
  if (is_integral(r)) return bigint_to_json(numerator_of(r));
  return Json(format_rational(r));
}

inline std::optional<BigInt> json_to_bigint(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_binary() && j.get_binary().has_subtype() &&
      j.get_binary().subtype() == kBigIntSubtype) {
    const auto& bytes = j.get_binary();
    return parse_bigint(std::string(bytes.begin(), bytes.end()));
  }
  return std::nullopt;
}

/// Integer number or "num/den" / "n" string.
inline std::optional<Rational> json_to_rational(const Json& j) {
  if (auto n = json_to_bigint(j)) return Rational(*n);
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return std::nullopt;
}

}  // namespace bmgame

#endif  // BMGAME_JSON_IO_HPP
