// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace wavelab {

/// Shortest-faithful decimal for a double: 17 significant digits round-trip.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

/// Order-preserving JSON document builder; numbers print with 17
/// significant digits and non-finite values print as null.
struct JsonValue {
  enum class Kind { Null, Bool, Number, String, Array, Object };
  Kind kind = Kind::Null;
  bool boolean = false;
  double number = 0.0;
  std::string text;
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> fields;

  static JsonValue null() { return JsonValue{}; }
  static JsonValue of(bool b) {
    JsonValue v;
    v.kind = Kind::Bool;
    v.boolean = b;
    return v;
  }
  static JsonValue of(double d) {
    JsonValue v;
    v.kind = Kind::Number;
    v.number = d;
    return v;
  }
  static JsonValue of(int i) { return of(static_cast<double>(i)); }
  static JsonValue of(long long i) { return of(static_cast<double>(i)); }
  static JsonValue of(std::string s) {
    JsonValue v;
    v.kind = Kind::String;
    v.text = std::move(s);
    return v;
  }
  static JsonValue of(const char* s) { return of(std::string(s)); }
  static JsonValue array() {
    JsonValue v;
    v.kind = Kind::Array;
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.kind = Kind::Object;
    return v;
  }

  JsonValue& set(const std::string& key, JsonValue value) {
    fields.emplace_back(key, std::move(value));
    return *this;
  }
  JsonValue& push(JsonValue value) {
    items.push_back(std::move(value));
    return *this;
  }

  void write(std::string& out) const {
    switch (kind) {
      case Kind::Null: out += "null"; break;
      case Kind::Bool: out += boolean ? "true" : "false"; break;
      case Kind::Number:
        if (std::isfinite(number)) {
          out += format_g17(number);
        } else {
          out += "null";
        }
        break;
      case Kind::String:
        out += '"';
        out += json_escape(text);
        out += '"';
        break;
      case Kind::Array: {
        out += '[';
        bool first = true;
        for (const JsonValue& v : items) {
          if (!first) out += ',';
          first = false;
          v.write(out);
        }
        out += ']';
        break;
      }
      case Kind::Object: {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : fields) {
          if (!first) out += ',';
          first = false;
          out += '"';
          out += json_escape(k);
          out += "\":";
          v.write(out);
        }
        out += '}';
        break;
      }
    }
  }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }
};

/// One atlas CSV row; callers emit the "x,y,curve_id,residual" header once.
inline std::string csv_row(double x, double y, const std::string& curve_id,
                           double residual) {
  std::string out = format_g17(x);
  out += ',';
  out += format_g17(y);
  out += ',';
  out += curve_id;
  out += ',';
  out += format_g17(residual);
  return out;
}

}  // namespace wavelab
