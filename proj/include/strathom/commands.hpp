#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathom/corpus.hpp"
#include "strathom/derived.hpp"
#include "strathom/report.hpp"
#include "strathom/strat.hpp"
#include "strathom/workspace.hpp"

namespace strathom::cli {

using report::Json;
using report::Status;

/// A command with its positional arguments and named options, as given on
/// the command line or in a [pipeline] step.
struct Request {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, std::string> opts;
  bool follow_ups = false;
  std::uint32_t seed = kDefaultSeed;

  std::string opt(const std::string& k, const std::string& dflt = "") const {
    auto it = opts.find(k);
    return it == opts.end() || it->second.empty() ? dflt : it->second;
  }
};

struct Outcome {
  Status status = Status::positive;
  Json result = Json::object();
  Json certificates = Json::object();
};

namespace detail {

inline const std::string& arg(const Request& r, std::size_t i, const char* what) {
  if (r.args.size() <= i) throw ParseError(r.command + ": missing argument <" + what + ">");
  return r.args[i];
}

template <class K>
std::string pick_algebra(const Workspace<K>& ws, const Request& r) {
  auto a = r.opt("algebra");
  if (!a.empty()) return a;
  if (ws.algebras.count("A")) return "A";
  if (ws.algebra_order.empty()) throw ParseError("the file defines no algebra");
  return ws.algebra_order.front();
}

template <class K>
std::string pick_hom(const Workspace<K>& ws, const Request& r) {
  auto h = r.opt("hom");
  if (!h.empty()) return h;
  if (ws.hom_order.size() == 1) return ws.hom_order.front();
  throw ParseError(r.command + ": the file defines " + std::to_string(ws.hom_order.size()) + " ring maps; pass --hom");
}

template <class K>
Json vertex_names(const Algebra<K>& a, const std::vector<std::size_t>& vs) {
  Json j = Json::array();
  for (auto v : vs) j.push_back(corpus::detail::vertex_name(a, v));
  return j;
}

inline Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

/// "M" (stalk in degree 0), "M@d" (stalk in degree d) or "cone:H".
template <class K>
Complex<K> complex_spec(const Workspace<K>& ws, const std::string& s) {
  if (s.rfind("cone:", 0) == 0) return ring_map_cone(ws.hom(s.substr(5)));
  auto at = s.find('@');
  if (at == std::string::npos) return stalk(ws.module(s), 0);
  int d = 0;
  try {
    d = std::stoi(s.substr(at + 1));
  } catch (const std::exception&) {
    throw ParseError("bad degree in complex '" + s + "'");
  }
  return stalk(ws.module(s.substr(0, at)), d);
}

inline std::vector<int> degree_list(const std::string& s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    auto j = s.find(',', i);
    auto tok = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
    auto colon = tok.find(':');
    try {
      if (colon == std::string::npos) {
        out.push_back(std::stoi(tok));
      } else {
        int a = std::stoi(tok.substr(0, colon)), b = std::stoi(tok.substr(colon + 1));
        for (int k = a; k <= b; ++k) out.push_back(k);
      }
    } catch (const std::exception&) {
      throw ParseError("bad degree list '" + s + "'");
    }
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

inline bool flag(const std::optional<bool>& b) { return b.value_or(false); }

}  // namespace detail

template <class K>
Outcome alg_info(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  auto name = detail::pick_algebra(ws, r);
  const auto& a = ws.algebra(name);
  auto& j = o.result;
  j["algebra"] = name;
  j["dim"] = a->dim();
  j["labels"] = a->labels();
  j["radical_dim"] = a->radical_available() ? Json(a->radical().dim()) : Json(nullptr);
  j["basic_split"] = a->has_idempotents() && is_basic_split(a);
  if (const auto* q = a->quiver()) {
    Json arrows = Json::array(), rels = Json::array();
    for (const auto& ar : q->presentation.arrows)
      arrows.push_back({ar.name, q->presentation.vertices[ar.source], q->presentation.vertices[ar.target]});
    for (const auto& rel : q->presentation.relations) rels.push_back(path_name(q->presentation, rel));
    j["quiver"] = {{"vertices", q->presentation.vertices}, {"arrows", arrows}, {"relations", rels}};
  }
  if (a->has_idempotents()) {
    const auto& es = a->idempotents();
    Json cartan = Json::array();
    for (const auto& ei : es) {
      Json row = Json::array();
      for (const auto& ej : es) {
        std::vector<Vec<K>> vs;
        for (std::size_t k = 0; k < a->dim(); ++k) vs.push_back(a->mul(a->mul(ei, a->basis(k)), ej));
        row.push_back(Subspace<K>::span(vs, a->dim()).dim());
      }
      cartan.push_back(row);
    }
    j["cartan"] = cartan;
    if (j["basic_split"].get<bool>()) {
      auto ss = simple_modules(a);
      Json ext = Json::array();
      for (const auto& s : ss) {
        auto res = min_proj_resolution(s, 2);
        Json row = Json::array();
        for (const auto& t : ss) row.push_back(ext_dim_from(res, *t, 1));
        ext.push_back(row);
      }
      j["ext1_simples"] = ext;
    }
    auto g = gldim(a, cutoff);
    j["gldim"] = detail::optional_size(g);
    o.status = g ? Status::positive : Status::inconclusive;
  }
  return o;
}

template <class K>
Outcome mod_resolve(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  const auto& name = detail::arg(r, 0, "module");
  const auto& m = ws.module(name);
  auto res = min_proj_resolution(m, cutoff);
  auto& j = o.result;
  j["module"] = name;
  j["dim"] = m->dim();
  Json terms = Json::array();
  for (std::size_t k = 0; k < res.terms.size(); ++k)
    terms.push_back({{"degree", k}, {"dim", res.terms[k]->dim()}, {"summands", detail::vertex_names(*m->algebra(), res.vertices[k])}});
  j["terms"] = terms;
  j["complete"] = res.complete;
  j["pd"] = res.complete ? Json(res.length()) : Json(nullptr);
  o.status = res.complete ? Status::positive : Status::inconclusive;
  return o;
}

template <class K>
Outcome mod_ext(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  const auto& mn = detail::arg(r, 0, "M");
  const auto& nn = detail::arg(r, 1, "N");
  auto res = min_proj_resolution(ws.module(mn), cutoff + 1);
  std::vector<int> degs;
  if (!r.opt("degree").empty()) degs = detail::degree_list(r.opt("degree"));
  else
    for (std::size_t k = 0; k <= (res.complete ? res.length() : cutoff); ++k) degs.push_back(static_cast<int>(k));
  Json rows = Json::array();
  bool complete = true;
  for (int d : degs) {
    if (d < 0) throw ParseError("Ext degrees are nonnegative");
    if (static_cast<std::size_t>(d) > cutoff && !res.complete) {
      complete = false;
      rows.push_back({{"degree", d}, {"dim", nullptr}});
      continue;
    }
    rows.push_back({{"degree", d}, {"dim", ext_dim_from(res, *ws.module(nn), static_cast<std::size_t>(d))}});
  }
  o.result = {{"M", mn}, {"N", nn}, {"ext", rows}, {"complete", complete}};
  o.status = complete ? Status::positive : Status::inconclusive;
  return o;
}

template <class K>
Outcome mod_tor(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  const auto& mn = detail::arg(r, 0, "M");
  const auto& wn = detail::arg(r, 1, "hom or A");
  const auto& m = ws.module(mn);
  BimodulePtr<K> w = ws.homs.count(wn) ? target_as_bimodule(ws.hom(wn)) : regular_bimodule(ws.algebra(wn));
  auto res = min_proj_resolution(m, cutoff + 1);
  std::vector<int> degs;
  if (!r.opt("degree").empty()) degs = detail::degree_list(r.opt("degree"));
  else
    for (std::size_t k = 0; k <= (res.complete ? res.length() : cutoff); ++k) degs.push_back(static_cast<int>(k));
  Json rows = Json::array();
  bool complete = true;
  for (int d : degs) {
    if (d < 0) throw ParseError("Tor degrees are nonnegative");
    if (static_cast<std::size_t>(d) > cutoff && !res.complete) {
      complete = false;
      rows.push_back({{"degree", d}, {"dim", nullptr}});
      continue;
    }
    rows.push_back({{"degree", d}, {"dim", tor_dim_from(res, *w, static_cast<std::size_t>(d))}});
  }
  o.result = {{"M", mn}, {"with", wn}, {"tor", rows}, {"complete", complete}};
  o.status = complete ? Status::positive : Status::inconclusive;
  return o;
}

template <class K>
Outcome hom_check(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  auto name = detail::pick_hom(ws, r);
  const auto& f = ws.hom(name);
  auto& j = o.result;
  j["hom"] = name;
  j["source"] = ws.hom_ends.at(name).first;
  j["target"] = ws.hom_ends.at(name).second;
  j["rank"] = f.rank();
  if (r.command == "hom check-epi") {
    auto c = check_ring_epi(f);
    o.certificates["ring_epi"] = to_json(c);
    o.status = report::status_of(*c.is_ring_epi, c.complete);
  } else if (r.command == "hom check-homepi") {
    auto c = check_homological_epi(f, cutoff);
    o.certificates["homological_epi"] = to_json(c);
    const auto& h = c.is_homological_epi;
    if (!*c.is_ring_epi || (h && !*h)) o.status = Status::negative;
    else o.status = c.complete && h ? Status::positive : Status::inconclusive;
  } else if (r.command == "hom check-surjective") {
    auto s = check_surjectivity(f);
    j["by_rank"] = s.by_rank;
    j["by_simples"] = s.by_simples ? Json(*s.by_simples) : Json(nullptr);
    j["criterion_applies"] = s.theorem_applies;
    j["trace"] = s.trace;
    o.certificates["surjectivity"] = to_json(s.certificate);
    o.status = report::status_of(s.by_rank, s.complete);
  } else {
    auto c = check_kernel_idempotent(f);
    auto k = kernel_ideal(f);
    j["kernel_dim"] = k.dim();
    if (auto e = find_idempotent_generator(k); e && k.dim() < f.source()->dim()) {
      c.idempotent_generator = f.source()->element_to_string(*e);
      auto s = check_stratifying_ideal(f.source(), *e, cutoff);
      c.kernel_stratifying = s.certificate.kernel_stratifying;
      o.certificates["stratifying"] = to_json(s.certificate);
    }
    o.certificates["kernel"] = to_json(c);
    o.status = report::status_of(*c.kernel_idempotent && detail::flag(c.kernel_stratifying), c.complete);
  }
  return o;
}

template <class K>
Outcome strat_check_ideal(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  auto name = detail::pick_algebra(ws, r);
  const auto& a = ws.algebra(name);
  auto es = r.opt("e");
  if (es.empty()) throw ParseError(r.command + ": pass --e <idempotent>");
  auto e = parse_element(*a, es);
  auto s = check_stratifying_ideal(a, e, cutoff);
  auto& j = o.result;
  j["algebra"] = name;
  j["e"] = a->element_to_string(e);
  j["stratifying"] = detail::flag(s.certificate.kernel_stratifying);
  j["ideal_dim"] = s.ideal.dim();
  j["quotient_dim"] = s.quotient ? Json(s.quotient->algebra->dim()) : Json(nullptr);
  j["corner_dim"] = s.corner ? Json(s.corner->algebra->dim()) : Json(nullptr);
  j["corner_is_kronecker"] = s.corner_is_kronecker;
  o.certificates["stratifying"] = to_json(s.certificate);
  o.status = report::status_of(detail::flag(s.certificate.kernel_stratifying), s.certificate.complete);
  return o;
}

template <class K>
Outcome construct_one(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  auto name = detail::pick_hom(ws, r);
  auto c = construction_one(ws.hom(name), cutoff, r.seed);
  auto& j = o.result;
  j["hom"] = name;
  j["b_dim"] = c.b_module->dim();
  j["quotient_dim"] = c.quotient->dim();
  j["t_dim"] = c.t->dim();
  j["a_prime_dim"] = c.a_prime.algebra->dim();
  j["summand_part"] = c.summand_part;
  j["e"] = c.a_prime.algebra->element_to_string(c.e);
  j["lambda_prime_rank"] = c.lambda_prime ? Json(c.lambda_prime->rank()) : Json(nullptr);
  o.certificates["construction"] = to_json(c.checks);
  o.certificates["stratifying"] = to_json(c.stratifying.certificate);
  const bool pos = detail::flag(c.checks.is_surjective) && detail::flag(c.checks.is_homological_epi) &&
                   detail::flag(c.stratifying.certificate.kernel_stratifying);
  o.status = report::status_of(pos, c.checks.complete && c.stratifying.certificate.complete);
  return o;
}

template <class K>
Outcome construct_two(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  auto name = detail::pick_hom(ws, r);
  ConstructionTwoOptions<K> opts;
  opts.follow_ups = r.follow_ups;
  auto c = construction_two(ws.hom(name), cutoff, opts);
  auto& j = o.result;
  j["hom"] = name;
  Json cone = Json::array();
  for (std::size_t k = 0; k < c.cone.terms.size(); ++k)
    cone.push_back({{"degree", c.cone.lo + static_cast<int>(k)}, {"dim", c.cone.terms[k]->dim()}});
  j["cone"] = cone;
  j["c_dim"] = c.c->dim();
  j["mu_injective"] = c.kernel_dim == 0;
  j["ker_mu"] = c.kernel_dim;
  j["coker_mu"] = c.coker_dim;
  j["hom_b_a"] = c.hom_ba_dim;
  j["ext1_b_a"] = c.ext1_ba_dim;
  j["end_quotient_dim"] = detail::optional_size(c.end_quotient_dim);
  o.certificates["construction"] = to_json(c.checks);
  bool pos = true;
  if (r.follow_ups) pos = detail::flag(c.checks.is_homological_epi);
  o.status = report::status_of(pos, c.checks.complete);
  return o;
}

template <class K>
Outcome derived_hom(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  const auto& xs = detail::arg(r, 0, "X");
  const auto& ys = detail::arg(r, 1, "Y");
  auto x = detail::complex_spec(ws, xs);
  auto y = detail::complex_spec(ws, ys);
  auto px = proj_resolve_complex(x, cutoff);
  Json rows = Json::array();
  for (int n : detail::degree_list(r.opt("degree", "0")))
    rows.push_back({{"degree", n}, {"dim", derived_hom_dim_from(px, y, n)}});
  o.result = {{"X", xs}, {"Y", ys}, {"hom", rows}};
  return o;
}

template <class K>
Outcome derived_exceptional(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  Outcome o;
  const auto& xs = detail::arg(r, 0, "X");
  auto e = is_exceptional(detail::complex_spec(ws, xs), cutoff);
  o.result = {{"X", xs}, {"exceptional", e.exceptional}, {"window", {e.window_lo, e.window_hi}}, {"offending", e.offending}};
  o.status = report::status_of(e.exceptional, true);
  return o;
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "alg info",        "mod resolve",   "mod ext",          "mod tor",        "hom check-epi",
      "hom check-homepi", "hom check-surjective", "hom check-kernel", "strat check-ideal", "check-strat",
      "construct-one",   "construct-two", "derived hom",      "derived exceptional"};
  return names;
}

/// Runs one workspace command.
template <class K>
Outcome execute(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  const auto& c = r.command;
  if (c == "alg info") return alg_info(ws, r, cutoff);
  if (c == "mod resolve") return mod_resolve(ws, r, cutoff);
  if (c == "mod ext") return mod_ext(ws, r, cutoff);
  if (c == "mod tor") return mod_tor(ws, r, cutoff);
  if (c.rfind("hom check-", 0) == 0 &&
      (c == "hom check-epi" || c == "hom check-homepi" || c == "hom check-surjective" || c == "hom check-kernel"))
    return hom_check(ws, r, cutoff);
  if (c == "strat check-ideal" || c == "check-strat") return strat_check_ideal(ws, r, cutoff);
  if (c == "construct-one") return construct_one(ws, r, cutoff);
  if (c == "construct-two") return construct_two(ws, r, cutoff);
  if (c == "derived hom") return derived_hom(ws, r, cutoff);
  if (c == "derived exceptional") return derived_exceptional(ws, r, cutoff);
  throw ParseError("unknown command '" + c + "'");
}

/// Runs a command and folds the library's error classes into the report.
template <class K>
Outcome execute_reporting(const Workspace<K>& ws, const Request& r, std::size_t cutoff) {
  try {
    return execute(ws, r, cutoff);
  } catch (const PreconditionError& e) {
    Outcome o;
    o.status = Status::negative;
    o.result["error"] = e.what();
    return o;
  } catch (const IncompleteError& e) {
    Outcome o;
    o.status = Status::inconclusive;
    o.result["error"] = e.what();
    return o;
  } catch (const ConsistencyError& e) {
    Outcome o;
    o.status = Status::inconclusive;
    o.result["error"] = std::string("internal consistency check failed: ") + e.what();
    return o;
  }
}

}  // namespace strathom::cli
