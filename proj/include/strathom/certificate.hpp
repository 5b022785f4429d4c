#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace strathom {

/// Flags with the dimension table that backs them.
struct Certificate {
  std::optional<bool> is_ring_epi;
  std::optional<bool> is_homological_epi;
  std::optional<std::size_t> tor_checked_to;  // Tor_i(B,B) computed for 1 <= i <= this
  std::optional<bool> is_surjective;
  std::optional<bool> kernel_idempotent;
  std::optional<bool> kernel_stratifying;
  std::optional<std::string> idempotent_generator;
  bool complete = true;
  std::vector<std::pair<std::string, std::int64_t>> witnesses;
  std::vector<std::string> notes;

  void record(std::string name, std::int64_t value) { witnesses.emplace_back(std::move(name), value); }
  void note(std::string s) { notes.push_back(std::move(s)); }

  std::optional<std::int64_t> witness(const std::string& name) const {
    for (const auto& [k, v] : witnesses)
      if (k == name) return v;
    return std::nullopt;
  }

  /// Fills unset flags from o and appends its table.
  void merge(const Certificate& o) {
    auto take = [](auto& mine, const auto& theirs) {
      if (!mine && theirs) mine = theirs;
    };
    take(is_ring_epi, o.is_ring_epi);
    take(is_homological_epi, o.is_homological_epi);
    take(tor_checked_to, o.tor_checked_to);
    take(is_surjective, o.is_surjective);
    take(kernel_idempotent, o.kernel_idempotent);
    take(kernel_stratifying, o.kernel_stratifying);
    take(idempotent_generator, o.idempotent_generator);
    complete = complete && o.complete;
    for (const auto& w : o.witnesses) witnesses.push_back(w);
    for (const auto& n : o.notes) notes.push_back(n);
  }
};

inline nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  auto put = [&](const char* k, const auto& v) {
    if (v) j[k] = *v;
    else j[k] = nullptr;
  };
  put("is_ring_epi", c.is_ring_epi);
  put("is_homological_epi", c.is_homological_epi);
  put("tor_checked_to", c.tor_checked_to);
  put("is_surjective", c.is_surjective);
  put("kernel_idempotent", c.kernel_idempotent);
  put("kernel_stratifying", c.kernel_stratifying);
  put("idempotent_generator", c.idempotent_generator);
  j["complete"] = c.complete;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.witnesses) w[k] = v;
  j["witnesses"] = w;
  j["notes"] = c.notes;
  return j;
}

}  // namespace strathom
