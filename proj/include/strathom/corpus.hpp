#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strathom/properties.hpp"
#include "strathom/strat.hpp"
#include "strathom/tilting.hpp"
#include "strathom/workspace.hpp"

namespace strathom::corpus {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(p.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class K>
Workspace<K> load_workspace(const std::filesystem::path& p) {
  return build_workspace<K>(format::parse(read_file(p), p.filename().string()));
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

template <class K>
std::string vertex_name(const Algebra<K>& a, std::size_t v) {
  if (const auto* q = a.quiver()) return q->presentation.vertices.at(v);
  return std::to_string(v);
}

inline void arity(const std::vector<std::string>& args, std::size_t n, const std::string& q) {
  if (args.size() < n) throw ParseError("query '" + q + "' needs " + std::to_string(n) + " argument(s)");
}

}  // namespace detail

/// Answers one manifest query as a short string.
template <class K>
std::string answer(const Workspace<K>* ws, const std::string& q, const std::vector<std::string>& args,
                   std::size_t cutoff = kDefaultCutoff) {
  using detail::yes_no;
  if (q == "property") {
    detail::arity(args, 3, q);
    for (const auto& p : props::all<K>())
      if (args[0] == p.name) {
        auto r = p.run(std::stoul(args[1]), static_cast<std::uint32_t>(std::stoul(args[2])));
        return r.ok() ? "ok" : r.failures.front();
      }
    throw ParseError("unknown property '" + args[0] + "'");
  }
  if (!ws) throw ParseError("query '" + q + "' needs a data file");
  detail::arity(args, 1, q);
  const auto& x = args[0];
  if (q == "dim") return std::to_string(ws->algebra(x)->dim());
  if (q == "gldim") {
    auto g = gldim(ws->algebra(x), cutoff);
    return g ? std::to_string(*g) : "inconclusive";
  }
  if (q == "pd") {
    auto d = pd(ws->module(x), cutoff);
    return d ? std::to_string(*d) : "inconclusive";
  }
  if (q == "dimvec") return detail::join(ws->module(x)->dimension_vector());
  if (q == "resolution") {
    const auto& m = ws->module(x);
    auto res = min_proj_resolution(m, cutoff);
    std::string s;
    for (std::size_t k = 0; k < res.vertices.size(); ++k) {
      if (res.terms[k]->dim() == 0) continue;
      if (k) s += "|";
      for (std::size_t i = 0; i < res.vertices[k].size(); ++i)
        s += (i ? "," : "") + detail::vertex_name(*m->algebra(), res.vertices[k][i]);
    }
    return res.complete ? s : s + "|...";
  }
  if (q == "ext1-simples") {
    auto ss = simple_modules(ws->algebra(x));
    std::string s;
    for (std::size_t i = 0; i < ss.size(); ++i) {
      auto res = min_proj_resolution(ss[i], 2);
      for (std::size_t j = 0; j < ss.size(); ++j) s += (j ? " " : i ? ";" : "") + std::to_string(ext_dim_from(res, *ss[j], 1));
    }
    return s;
  }
  if (q == "stratifying" || q == "ideal-dim" || q == "quotient-dim" || q == "corner") {
    detail::arity(args, 2, q);
    const auto& a = ws->algebra(x);
    auto r = check_stratifying_ideal(a, parse_element(*a, args[1]), cutoff);
    if (q == "stratifying") return yes_no(r.certificate.kernel_stratifying.value_or(false));
    if (q == "ideal-dim") return std::to_string(r.ideal.dim());
    if (q == "quotient-dim") return std::to_string(r.quotient ? r.quotient->algebra->dim() : 0);
    return "dim " + std::to_string(r.corner->algebra->dim()) + (r.corner_is_kronecker ? " kronecker" : "");
  }
  if (q == "tilting") {
    std::vector<ModulePtr<K>> ts;
    for (std::size_t i = 1; i < args.size(); ++i) ts.push_back(ws->module(args[i]));
    auto r = is_classical_tilting(ts, ws->algebra(x));
    std::string s = to_string(r.verdict);
    if (r.coresolution) s += " " + detail::join(r.coresolution->t0_mult) + "|" + detail::join(r.coresolution->t1_mult);
    return s;
  }
  if (q == "end") {
    detail::arity(args, 2, q);
    auto m = power(ws->module(x), std::stoul(args[1]));
    auto e = endomorphism_algebra(m);
    return "dim " + std::to_string(e.algebra->dim()) + " rad " + std::to_string(e.algebra->radical().dim());
  }
  if (q == "hom-dim") {
    detail::arity(args, 2, q);
    return std::to_string(hom_dim(*ws->module(x), *ws->module(args[1])));
  }
  const auto& f = ws->hom(x);
  if (q == "ring-epi") return yes_no(*check_ring_epi(f).is_ring_epi);
  if (q == "surjective") return yes_no(check_surjectivity(f).by_rank);
  if (q == "homological-epi") {
    auto c = check_homological_epi(f, cutoff);
    if (!*c.is_ring_epi) return "no";
    if (!c.complete && *c.is_homological_epi) return "inconclusive";
    return yes_no(*c.is_homological_epi);
  }
  if (q == "kernel-idempotent") {
    auto c = check_kernel_idempotent(f);
    return yes_no(*c.kernel_idempotent) + " tor1 " + std::to_string(c.witness("Tor_1(B,B)").value_or(-1));
  }
  if (q == "generator") {
    auto e = find_idempotent_generator(kernel_ideal(f));
    return e ? f.source()->element_to_string(*e) : "none";
  }
  if (q == "kernel-stratifying") {
    auto k = kernel_ideal(f);
    auto e = find_idempotent_generator(k);
    if (!e || k.dim() == f.source()->dim()) return "no";
    return yes_no(check_stratifying_ideal(f.source(), *e, cutoff).certificate.kernel_stratifying.value_or(false));
  }
  if (q == "target-iso") {
    std::vector<ModulePtr<K>> ms;
    for (std::size_t i = 1; i < args.size(); ++i) ms.push_back(ws->module(args[i]));
    auto sum = direct_sum(ms).module;
    return to_string(is_isomorphic(target_as_source_module(f), sum).verdict);
  }
  if (q == "construct-one") {
    auto r = construction_one(f, cutoff);
    const auto& c = r.stratifying.certificate;
    return "dim " + std::to_string(r.a_prime.algebra->dim()) + " surjective " +
           yes_no(r.checks.is_surjective.value_or(false)) + " homological-epi " +
           yes_no(r.checks.is_homological_epi.value_or(false)) + " stratifying " +
           yes_no(c.kernel_stratifying.value_or(false));
  }
  if (q == "construct-two") {
    auto r = construction_two(f, cutoff);
    return "C " + std::to_string(r.c->dim()) + " ker " + std::to_string(r.kernel_dim) + " coker " +
           std::to_string(r.coker_dim) + " ext1 " + std::to_string(r.ext1_ba_dim);
  }
  throw ParseError("unknown query '" + q + "'");
}

struct CheckResult {
  std::string name, file, query;
  std::vector<std::string> args;
  std::string expected, actual;
  bool expect_error = false;
  bool passed = false;
};

struct RunReport {
  std::vector<CheckResult> checks;
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed;
    return n;
  }
  bool ok() const { return passed() == checks.size(); }
};

/// Runs every [check.*] section of dir/manifest.toml whose name starts with
/// `prefix`; data files are read relative to dir.
template <class K>
RunReport run_manifest(const std::filesystem::path& dir, const std::string& prefix = "",
                       std::size_t cutoff = kDefaultCutoff) {
  const auto mpath = dir / "manifest.toml";
  auto doc = format::parse(read_file(mpath), mpath.filename().string());
  std::map<std::string, Workspace<K>> cache;
  RunReport rep;
  for (const auto& s : doc.sections) {
    if (s.name.rfind("check.", 0) != 0) throw ParseError("manifest: unexpected section [" + s.name + "]");
    CheckResult c;
    c.name = s.name.substr(6);
    if (c.name.rfind(prefix, 0) != 0) continue;
    strathom::detail::check_keys(s, {"file", "query", "args", "expect", "expect_error"});
    c.query = strathom::detail::as_string(strathom::detail::need(s, "query"));
    if (const auto* e = s.find("args")) c.args = strathom::detail::as_strings(e->value);
    if (const auto* e = s.find("expect")) c.expected = strathom::detail::as_string(e->value);
    else if (const auto* e = s.find("expect_error")) c.expected = strathom::detail::as_string(e->value), c.expect_error = true;
    else throw ParseError("manifest: [" + s.name + "] needs expect or expect_error");
    const Workspace<K>* ws = nullptr;
    if (const auto* e = s.find("file")) {
      c.file = strathom::detail::as_string(e->value);
      auto it = cache.find(c.file);
      if (it == cache.end()) it = cache.emplace(c.file, load_workspace<K>(dir / c.file)).first;
      ws = &it->second;
    }
    try {
      c.actual = answer(ws, c.query, c.args, cutoff);
      c.passed = !c.expect_error && c.actual == c.expected;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
      c.passed = c.expect_error && c.actual.find(c.expected) != std::string::npos;
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace strathom::corpus
