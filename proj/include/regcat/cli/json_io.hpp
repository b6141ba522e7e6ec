#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regcat/error.hpp"
#include "regcat/matrix.hpp"
#include "regcat/rational.hpp"

namespace regcat::cli {

  using json = nlohmann::json;
  using ordered_json = nlohmann::ordered_json;

  //! Malformed scenario text; the message carries line and column.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! Well-formed text that does not match the schema of its kind; the message
  //! starts with the path of the offending key.
  class SchemaError : public Error {
   public:
    using Error::Error;
  };

  //! Read-only cursor into a parsed document that remembers its path.
  class Field {
   public:
    Field(json const& value, std::string path) : _value(&value), _path(std::move(path)) {}

    json const& value() const noexcept { return *_value; }
    std::string const& path() const noexcept { return _path; }

    [[noreturn]] void fail(std::string const& message) const {
      throw SchemaError((_path.empty() ? std::string("<root>") : _path) + ": " + message);
    }

    bool has(char const* key) const { return object().contains(key); }

    Field at(char const* key) const {
      auto const& obj = object();
      auto it = obj.find(key);
      if (it == obj.end()) {
        fail(std::string("missing key \"") + key + "\"");
      }
      return Field(*it, child(key));
    }

    std::optional<Field> maybe(char const* key) const {
      if (!has(key)) {
        return std::nullopt;
      }
      return at(key);
    }

    //! Rejects keys outside `allowed`.
    void only(std::initializer_list<char const*> allowed) const {
      for (auto const& [key, _] : object().items()) {
        bool known = false;
        for (auto const* a : allowed) {
          known = known || key == a;
        }
        if (!known) {
          fail("unknown key \"" + key + "\"");
        }
      }
    }

    std::vector<Field> elements() const {
      if (!_value->is_array()) {
        fail("expected an array");
      }
      std::vector<Field> out;
      for (std::size_t i = 0; i < _value->size(); ++i) {
        out.emplace_back((*_value)[i], _path + "[" + std::to_string(i) + "]");
      }
      return out;
    }

    //! Key/value pairs of an object, in key order.
    std::vector<std::pair<std::string, Field>> members() const {
      std::vector<std::pair<std::string, Field>> out;
      for (auto const& [key, v] : object().items()) {
        out.emplace_back(key, Field(v, child(key)));
      }
      return out;
    }

    std::string text() const {
      if (!_value->is_string()) {
        fail("expected a string");
      }
      return _value->get<std::string>();
    }

    std::size_t count() const {
      if (!_value->is_number_unsigned() && !(_value->is_number_integer() && _value->get<long long>() >= 0)) {
        fail("expected a non-negative integer");
      }
      return _value->get<std::size_t>();
    }

    bool flag() const {
      if (!_value->is_boolean()) {
        fail("expected true or false");
      }
      return _value->get<bool>();
    }

    std::vector<std::string> texts() const {
      std::vector<std::string> out;
      for (auto const& e : elements()) {
        out.push_back(e.text());
      }
      return out;
    }

    Rational rational() const {
      if (_value->is_string()) {
        try {
          return parse_rational(_value->get<std::string>());
        } catch (RationalFormatError const& e) {
          throw RationalFormatError(_path + ": " + e.what());
        }
      }
      if (_value->is_number_integer()) {
        return Rational(_value->get<long long>());
      }
      if (_value->is_number_float()) {
        throw RationalFormatError(_path + ": floating-point number " + _value->dump()
                                  + " is not exact; write it as \"p/q\"");
      }
      fail("expected a rational as \"p/q\" or an integer");
    }

    Vector vector() const {
      Vector v;
      for (auto const& e : elements()) {
        v.push_back(e.rational());
      }
      return v;
    }

    //! Array of row arrays; [] is the 0x0 matrix.
    Matrix matrix() const {
      auto rows = elements();
      if (rows.empty()) {
        return Matrix(0, 0);
      }
      std::size_t cols = rows.front().elements().size();
      std::vector<Rational> entries;
      for (auto const& row : rows) {
        auto cells = row.elements();
        if (cells.size() != cols) {
          row.fail("row has " + std::to_string(cells.size()) + " entries, expected "
                   + std::to_string(cols));
        }
        for (auto const& c : cells) {
          entries.push_back(c.rational());
        }
      }
      return Matrix(rows.size(), cols, std::move(entries));
    }

    std::vector<Matrix> matrices() const {
      std::vector<Matrix> out;
      for (auto const& e : elements()) {
        out.push_back(e.matrix());
      }
      return out;
    }

   private:
    json const& object() const {
      if (!_value->is_object()) {
        fail("expected an object");
      }
      return *_value;
    }

    std::string child(std::string const& key) const {
      return _path.empty() ? key : _path + "." + key;
    }

    json const* _value;
    std::string _path;
  };

  inline json parse_document(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column)
                       + ": malformed JSON");
    }
  }

  inline ordered_json to_json(Rational const& r) { return to_string(r); }

  inline ordered_json to_json(Vector const& v) {
    ordered_json out = ordered_json::array();
    for (auto const& x : v) {
      out.push_back(to_json(x));
    }
    return out;
  }

  inline ordered_json to_json(Matrix const& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out.push_back(to_json(m.row(i)));
    }
    return out;
  }

  inline ordered_json to_json(std::vector<Matrix> const& ms) {
    ordered_json out = ordered_json::array();
    for (auto const& m : ms) {
      out.push_back(to_json(m));
    }
    return out;
  }

}  // namespace regcat::cli
