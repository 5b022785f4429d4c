#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strathom/errors.hpp"

namespace strathom::format {

/// Values of the key/value format: strings, numbers kept as written
/// (integers or rationals like -3/4), booleans, arrays and inline tables.
struct Value {
  enum class Kind { string, number, boolean, array, table };
  Kind kind = Kind::string;
  std::string text;                                // string contents, number literal, "true"/"false"
  std::vector<Value> items;                        // array
  std::vector<std::pair<std::string, Value>> entries;  // inline table
  std::size_t line = 0, col = 0;

  bool is(Kind k) const { return kind == k; }
  friend bool operator==(const Value& a, const Value& b) {
    return a.kind == b.kind && a.text == b.text && a.items == b.items && a.entries == b.entries;
  }
};

struct Entry {
  std::string key;
  Value value;
  std::size_t line = 0;
  friend bool operator==(const Entry& a, const Entry& b) { return a.key == b.key && a.value == b.value; }
};

struct Section {
  std::string name;  // e.g. "algebra", "module.S1"
  std::vector<Entry> entries;
  std::size_t line = 0;
  friend bool operator==(const Section& a, const Section& b) { return a.name == b.name && a.entries == b.entries; }

  const Entry* find(std::string_view key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
};

struct Document {
  std::vector<Section> sections;
  friend bool operator==(const Document& a, const Document& b) { return a.sections == b.sections; }

  const Section* find(std::string_view name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline std::string where(std::size_t line, std::size_t col) {
  return std::to_string(line) + ":" + std::to_string(col);
}

class Parser {
 public:
  explicit Parser(std::string_view text, std::string source = "<input>") : t_(text), src_(std::move(source)) {}

  Document parse() {
    Document doc;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        Section s;
        s.line = line_;
        get();
        s.name = section_name();
        expect(']');
        end_of_line();
        for (const auto& o : doc.sections)
          if (o.name == s.name) fail_line(s.line, "duplicate section [" + s.name + "]");
        doc.sections.push_back(std::move(s));
        continue;
      }
      if (doc.sections.empty()) fail("key outside of any section");
      Entry e;
      e.line = line_;
      e.key = key();
      skip_ws();
      expect('=');
      skip_ws();
      e.value = value();
      end_of_line();
      auto& sec = doc.sections.back();
      if (sec.find(e.key)) fail_line(e.line, "duplicate key '" + e.key + "' in [" + sec.name + "]");
      sec.entries.push_back(std::move(e));
    }
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(src_ + ":" + where(line_, col_) + ": " + msg); }
  [[noreturn]] void fail_line(std::size_t line, const std::string& msg) const {
    throw ParseError(src_ + ":" + where(line, 1) + ": " + msg);
  }

  bool eof() const { return i_ >= t_.size(); }
  char peek() const { return eof() ? '\0' : t_[i_]; }
  char get() {
    char c = t_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + (eof() ? " at end of input" : std::string(", found '") + peek() + "'"));
    get();
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }
  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') get();
  }
  /// Whitespace, comments and newlines (inside brackets).
  void skip_all() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\n') get();
      else break;
    }
  }
  void skip_blank_lines() { skip_all(); }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (!eof() && peek() != '\n') fail(std::string("unexpected '") + peek() + "' after value");
    if (!eof()) get();
  }
  static bool bare(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }
  std::string key() {
    if (peek() == '"') return quoted();
    std::string k;
    while (!eof() && bare(peek())) k += get();
    if (k.empty()) fail("expected a key");
    return k;
  }
  std::string section_name() {
    std::string n = key();
    while (peek() == '.') {
      get();
      n += "." + key();
    }
    return n;
  }
  std::string quoted() {
    expect('"');
    std::string s;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated string");
        char d = get();
        if (d == 'n') s += '\n';
        else if (d == '"' || d == '\\') s += d;
        else fail(std::string("unknown escape \\") + d);
      } else {
        s += c;
      }
    }
    return s;
  }
  Value value() {
    Value v;
    v.line = line_;
    v.col = col_;
    char c = peek();
    if (c == '"') {
      v.kind = Value::Kind::string;
      v.text = quoted();
    } else if (c == '[') {
      v.kind = Value::Kind::array;
      get();
      skip_all();
      while (peek() != ']') {
        v.items.push_back(value());
        skip_all();
        if (peek() == ',') {
          get();
          skip_all();
        } else if (peek() != ']') {
          fail("expected ',' or ']' in array");
        }
      }
      get();
    } else if (c == '{') {
      v.kind = Value::Kind::table;
      get();
      skip_all();
      while (peek() != '}') {
        auto k = key();
        skip_ws();
        expect('=');
        skip_ws();
        for (const auto& [ok, ov] : v.entries)
          if (ok == k) fail("duplicate key '" + k + "' in inline table");
        v.entries.emplace_back(k, value());
        skip_all();
        if (peek() == ',') {
          get();
          skip_all();
        } else if (peek() != '}') {
          fail("expected ',' or '}' in inline table");
        }
      }
      get();
    } else if (c == 't' || c == 'f') {
      std::string w;
      while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) w += get();
      if (w != "true" && w != "false") fail("unknown literal '" + w + "'");
      v.kind = Value::Kind::boolean;
      v.text = w;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      v.kind = Value::Kind::number;
      if (c == '-' || c == '+') v.text += get();
      auto digits = [&] {
        std::size_t n = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) v.text += get(), ++n;
        if (n == 0) fail("malformed number");
      };
      digits();
      if (peek() == '/') {
        v.text += get();
        digits();
      }
    } else {
      fail(eof() ? "expected a value at end of input" : std::string("unexpected '") + c + "'");
    }
    return v;
  }

  std::string_view t_;
  std::string src_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

inline Document parse(std::string_view text, std::string source = "<input>") {
  return Parser(text, std::move(source)).parse();
}

inline std::string emit(const Value& v);

inline std::string emit_key(const std::string& k) {
  bool plain = !k.empty();
  for (char c : k) plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-');
  return plain ? k : emit(Value{Value::Kind::string, k, {}, {}, 0, 0});
}

inline std::string emit(const Value& v) {
  switch (v.kind) {
    case Value::Kind::string: {
      std::string s = "\"";
      for (char c : v.text) {
        if (c == '"' || c == '\\') s += '\\';
        if (c == '\n') s += "\\n";
        else s += c;
      }
      return s + "\"";
    }
    case Value::Kind::number:
    case Value::Kind::boolean: return v.text;
    case Value::Kind::array: {
      std::string s = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) s += (i ? ", " : "") + emit(v.items[i]);
      return s + "]";
    }
    case Value::Kind::table: {
      std::string s = "{";
      for (std::size_t i = 0; i < v.entries.size(); ++i) {
        const auto& [k, x] = v.entries[i];
        s += (i ? ", " : "") + emit_key(k) + " = " + emit(x);
      }
      return s + "}";
    }
  }
  return {};
}

inline std::string emit(const Document& d) {
  std::string out;
  for (std::size_t i = 0; i < d.sections.size(); ++i) {
    if (i) out += "\n";
    out += "[" + d.sections[i].name + "]\n";
    for (const auto& e : d.sections[i].entries) out += emit_key(e.key) + " = " + emit(e.value) + "\n";
  }
  return out;
}

}  // namespace strathom::format
