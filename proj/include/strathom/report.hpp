#pragma once

#include <string>

#include <json.hpp>

namespace strathom::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

enum class Status { positive, negative, inconclusive, input_error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::positive: return "positive";
    case Status::negative: return "negative";
    case Status::inconclusive: return "inconclusive";
    default: return "input-error";
  }
}

inline int exit_code(Status s) { return static_cast<int>(s); }

/// Status for a certificate-style answer.
inline Status status_of(bool positive, bool complete) {
  if (!complete) return Status::inconclusive;
  return positive ? Status::positive : Status::negative;
}

/// Empty report skeleton; callers fill "result" and "certificates".
inline Json skeleton(const std::string& command, const std::string& field, std::size_t cutoff, std::uint32_t seed) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["field"] = field;
  j["cutoff"] = cutoff;
  j["seed"] = seed;
  j["status"] = nullptr;
  j["result"] = Json::object();
  j["certificates"] = Json::object();
  return j;
}

namespace detail {

inline std::string scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

inline bool flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

inline std::string inline_array(const Json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : v) {
    s += (first ? "" : ", ") + (x.is_array() ? inline_array(x) : scalar(x));
    first = false;
  }
  return s + "]";
}

inline bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& x : v) {
    if (!x.is_object() || x.size() != v.front().size()) return false;
    for (const auto& [k, y] : x.items())
      if (y.is_object() || (y.is_array() && !flat(y)) || !v.front().contains(k)) return false;
  }
  return true;
}

inline void render(std::string& out, const std::string& title, const Json& v, int depth) {
  const std::string hashes(static_cast<std::size_t>(depth), '#');
  if (v.is_object()) {
    out += hashes + " " + title + "\n\n";
    std::string rows;
    for (const auto& [k, x] : v.items())
      if (!x.is_object() && !(x.is_array() && !flat(x)))
        rows += "| " + k + " | " + (x.is_array() ? inline_array(x) : scalar(x)) + " |\n";
    if (!rows.empty()) out += "| key | value |\n|---|---|\n" + rows + "\n";
    for (const auto& [k, x] : v.items())
      if (x.is_object() || (x.is_array() && !flat(x))) render(out, k, x, depth + 1);
    return;
  }
  if (is_table(v)) {
    out += hashes + " " + title + "\n\n|";
    std::string sep = "|";
    for (const auto& [k, x] : v.front().items()) out += " " + k + " |", sep += "---|";
    out += "\n" + sep + "\n";
    for (const auto& row : v) {
      out += "|";
      for (const auto& [k, x] : row.items()) out += " " + (x.is_array() ? inline_array(x) : scalar(x)) + " |";
      out += "\n";
    }
    out += "\n";
    return;
  }
  if (v.is_array()) {
    out += hashes + " " + title + "\n\n";
    std::size_t i = 0;
    for (const auto& x : v) {
      if (x.is_object() || x.is_array()) render(out, title + " " + std::to_string(i), x, depth + 1);
      else out += "- " + scalar(x) + "\n";
      ++i;
    }
    out += "\n";
  }
}

}  // namespace detail

/// Markdown mirror of a JSON report: every scalar appears exactly once.
inline std::string to_markdown(const Json& j) {
  std::string out;
  detail::render(out, "strathom " + detail::scalar(j.value("command", Json("report"))), j, 1);
  while (out.size() > 1 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

}  // namespace strathom::report
