#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strathom/format.hpp"
#include "strathom/quiver.hpp"
#include "strathom/strat.hpp"

namespace strathom {

/// One command of a [pipeline] section with its string options.
struct PipelineStep {
  std::string command;
  std::vector<std::pair<std::string, std::string>> options;
};

/// Algebras, modules and ring maps built from a parsed document.
template <class K>
struct Workspace {
  std::map<std::string, AlgebraPtr<K>> algebras;
  std::map<std::string, ModulePtr<K>> modules;
  std::map<std::string, RingHom<K>> homs;
  std::map<std::string, std::string> module_algebra;  // module -> algebra name
  std::map<std::string, std::pair<std::string, std::string>> hom_ends;
  std::vector<std::string> algebra_order, module_order, hom_order;
  std::vector<PipelineStep> pipeline;

  const AlgebraPtr<K>& algebra(const std::string& n) const {
    auto it = algebras.find(n);
    if (it == algebras.end()) throw ParseError("unknown algebra '" + n + "'");
    return it->second;
  }
  const ModulePtr<K>& module(const std::string& n) const {
    auto it = modules.find(n);
    if (it == modules.end()) throw ParseError("unknown module '" + n + "'");
    return it->second;
  }
  const RingHom<K>& hom(const std::string& n) const {
    auto it = homs.find(n);
    if (it == homs.end()) throw ParseError("unknown ring map '" + n + "'");
    return it->second;
  }
};

/// "e2+e3", "2*alpha - 1/2 beta", "gamma*alpha": terms are labels with an
/// optional leading coefficient; a label containing '*' is matched whole.
template <class K>
Vec<K> parse_element(const Algebra<K>& a, std::string_view text) {
  auto x = a.zero();
  std::string s(text);
  std::size_t i = 0;
  auto find_label = [&](const std::string& l) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.labels()[j] == l) return j;
    return std::nullopt;
  };
  bool any = false;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw ParseError("element '" + s + "': expected '+' or '-' at position " + std::to_string(i + 1));
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && !(s[j] == '-' && j > i)) ++j;
    std::string term = detail::trim(s.substr(i, j - i));
    if (term.empty()) throw ParseError("element '" + s + "': empty term");
    if (term == "0") {
      i = j;
      any = true;
      continue;
    }
    K coef = K::from_int(sign);
    std::optional<std::size_t> idx = find_label(term);
    if (!idx) {
      // leading coefficient, separated by '*' or a space
      std::size_t k = 0;
      while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
      if (k == 0) throw ParseError("element '" + s + "': unknown label '" + term + "'");
      coef = coef * K::parse(term.substr(0, k));
      std::string rest = detail::trim(term.substr(k));
      if (!rest.empty() && rest[0] == '*') rest = detail::trim(rest.substr(1));
      if (rest.empty()) throw ParseError("element '" + s + "': coefficient without a label");
      idx = find_label(rest);
      if (!idx) throw ParseError("element '" + s + "': unknown label '" + rest + "'");
    }
    x[*idx] += coef;
    i = j;
    any = true;
  }
  if (!any) throw ParseError("empty element");
  return x;
}

namespace detail {

using format::Entry;
using format::Section;
using format::Value;

[[noreturn]] inline void fail_at(const Value& v, const std::string& msg) {
  throw ParseError("line " + format::where(v.line, v.col) + ": " + msg);
}
[[noreturn]] inline void fail_at(const Section& s, const std::string& msg) {
  throw ParseError("line " + std::to_string(s.line) + ": [" + s.name + "]: " + msg);
}

inline const Value& need(const Section& s, std::string_view key) {
  auto* e = s.find(key);
  if (!e) fail_at(s, "missing key '" + std::string(key) + "'");
  return e->value;
}

inline const std::string& as_string(const Value& v) {
  if (!v.is(Value::Kind::string)) fail_at(v, "expected a string");
  return v.text;
}

inline const std::vector<Value>& as_array(const Value& v) {
  if (!v.is(Value::Kind::array)) fail_at(v, "expected an array");
  return v.items;
}

inline std::size_t as_size(const Value& v) {
  if (!v.is(Value::Kind::number) || v.text.find('/') != std::string::npos || v.text[0] == '-')
    fail_at(v, "expected a non-negative integer");
  return static_cast<std::size_t>(std::stoul(v.text));
}

inline std::vector<std::string> as_strings(const Value& v) {
  std::vector<std::string> out;
  for (const auto& x : as_array(v)) out.push_back(as_string(x));
  return out;
}

template <class K>
K as_scalar(const Value& v) {
  if (v.is(Value::Kind::number) || v.is(Value::Kind::string)) {
    try {
      return K::parse(v.text);
    } catch (const Error& e) {
      fail_at(v, e.what());
    }
  }
  fail_at(v, "expected a number");
}

template <class K>
Vec<K> as_vector(const Value& v) {
  Vec<K> out;
  for (const auto& x : as_array(v)) out.push_back(as_scalar<K>(x));
  return out;
}

/// Row list; `cols` fixes the width when there are no rows.
template <class K>
Mat<K> as_matrix(const Value& v, std::size_t rows, std::size_t cols) {
  const auto& rs = as_array(v);
  if (rs.size() != rows) fail_at(v, "expected " + std::to_string(rows) + " rows, found " + std::to_string(rs.size()));
  Mat<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = as_vector<K>(rs[i]);
    if (r.size() != cols) fail_at(rs[i], "expected " + std::to_string(cols) + " entries, found " + std::to_string(r.size()));
    m.set_row(i, r);
  }
  return m;
}

inline void check_keys(const Section& s, const std::set<std::string>& allowed) {
  for (const auto& e : s.entries)
    if (!allowed.count(e.key)) fail_at(e.value, "unknown key '" + e.key + "' in [" + s.name + "]");
}

inline std::string kind_of(const Section& s, const std::string& dflt) {
  auto* e = s.find("kind");
  return e ? as_string(e->value) : dflt;
}

}  // namespace detail

namespace detail {

template <class K>
AlgebraPtr<K> build_algebra(Workspace<K>& ws, const Section& s, std::map<std::string, ProductResult<K>>& products,
                            const std::string& name) {
  auto kind = kind_of(s, s.find("vertices") ? "quiver" : "");
  if (kind == "quiver") {
    check_keys(s, {"kind", "vertices", "arrows", "relations"});
    auto vs = as_strings(need(s, "vertices"));
    if (vs.empty()) fail_at(need(s, "vertices"), "empty vertex list");
    std::vector<std::array<std::string, 3>> arrows;
    if (auto* e = s.find("arrows"))
      for (const auto& a : as_array(e->value)) {
        auto t = as_strings(a);
        if (t.size() != 3) fail_at(a, "an arrow is [name, source, target]");
        arrows.push_back({t[0], t[1], t[2]});
      }
    std::vector<std::string> rels;
    if (auto* e = s.find("relations")) rels = as_strings(e->value);
    try {
      return from_quiver<K>(make_quiver(vs, arrows, rels));
    } catch (const Error& err) {
      fail_at(s, err.what());
    }
  }
  if (kind == "structure") {
    check_keys(s, {"kind", "labels", "table", "unit", "idempotents"});
    auto labels = as_strings(need(s, "labels"));
    const std::size_t n = labels.size();
    auto tm = as_matrix<K>(need(s, "table"), n * n, n);
    std::vector<Vec<K>> table = tm.row_list();
    auto unit = as_vector<K>(need(s, "unit"));
    if (unit.size() != n) fail_at(need(s, "unit"), "unit has the wrong length");
    typename Algebra<K>::Extras ex;
    if (auto* e = s.find("idempotents")) ex.idempotents = as_matrix<K>(e->value, as_array(e->value).size(), n).row_list();
    try {
      return make_algebra<K>(labels, table, unit, ex);
    } catch (const Error& err) {
      fail_at(s, err.what());
    }
  }
  if (kind == "matrix" || kind == "triangular") {
    check_keys(s, {"kind", "n"});
    auto n = as_size(need(s, "n"));
    if (n == 0) fail_at(need(s, "n"), "n must be positive");
    return kind == "matrix" ? matrix_algebra<K>(n) : upper_triangular_algebra<K>(n);
  }
  if (kind == "product") {
    check_keys(s, {"kind", "factors"});
    auto fs = as_strings(need(s, "factors"));
    if (fs.size() != 2) fail_at(need(s, "factors"), "a product has exactly two factors");
    auto pr = product_algebra(ws.algebra(fs[0]), ws.algebra(fs[1]));
    products.emplace(name, pr);
    return pr.algebra;
  }
  if (kind == "quotient" || kind == "corner") {
    check_keys(s, {"kind", "of", kind == "quotient" ? "generators" : "e"});
    auto base = ws.algebra(as_string(need(s, "of")));
    try {
      if (kind == "corner") return corner(base, parse_element(*base, as_string(need(s, "e")))).algebra;
      std::vector<Vec<K>> gens;
      for (const auto& g : as_strings(need(s, "generators"))) gens.push_back(parse_element(*base, g));
      return quotient_by_ideal(base, ideal_generated(base, gens)).algebra;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      fail_at(s, err.what());
    }
  }
  fail_at(s, "unknown or missing algebra kind '" + kind + "'");
}

template <class K>
std::size_t vertex_of(const Algebra<K>& a, const Value& v) {
  if (v.is(Value::Kind::number)) {
    auto i = as_size(v);
    if (!a.has_idempotents() || i >= a.idempotents().size()) fail_at(v, "vertex index out of range");
    return i;
  }
  if (!a.quiver()) fail_at(v, "vertex names need a quiver algebra; use an index");
  try {
    return vertex_index(a.quiver()->presentation, as_string(v));
  } catch (const Error& e) {
    fail_at(v, e.what());
  }
}

template <class K>
ModulePtr<K> build_module(Workspace<K>& ws, const Section& s) {
  std::string an = "A";
  if (auto* e = s.find("algebra")) an = as_string(e->value);
  const auto& a = ws.algebra(an);
  auto kind = kind_of(s, s.find("dims") ? "quiver" : "");
  try {
    if (kind == "quiver") {
      if (!a->quiver()) fail_at(s, "algebra '" + an + "' has no quiver");
      const auto& q = a->quiver()->presentation;
      std::set<std::string> allowed{"algebra", "kind", "dims"};
      for (const auto& ar : q.arrows) allowed.insert(ar.name);
      check_keys(s, allowed);
      const auto& dv = need(s, "dims");
      if (!dv.is(Value::Kind::table)) fail_at(dv, "dims is an inline table {vertex = n}");
      std::vector<std::size_t> dims(q.vertices.size(), 0);
      for (const auto& [k, v] : dv.entries) dims[vertex_index(q, k)] = as_size(v);
      std::vector<Mat<K>> mats;
      for (const auto& ar : q.arrows) {
        auto* e = s.find(ar.name);
        std::size_t rows = dims[ar.target], cols = dims[ar.source];
        if (!e) {
          mats.emplace_back(rows, cols);
          continue;
        }
        mats.push_back(as_matrix<K>(e->value, rows, cols));
      }
      return quiver_module(a, dims, mats);
    }
    if (kind == "simple" || kind == "projective") {
      check_keys(s, {"algebra", "kind", "vertex"});
      auto v = vertex_of(*a, need(s, "vertex"));
      return kind == "simple" ? simple_module(a, v) : indec_projective(a, v);
    }
    if (kind == "regular") {
      check_keys(s, {"algebra", "kind"});
      return regular_module(a);
    }
    if (kind == "action") {
      check_keys(s, {"algebra", "kind", "dim", "action"});
      auto d = as_size(need(s, "dim"));
      const auto& acts = as_array(need(s, "action"));
      if (acts.size() != a->dim()) fail_at(need(s, "action"), "one matrix per basis element expected");
      std::vector<Mat<K>> rho;
      for (const auto& m : acts) rho.push_back(as_matrix<K>(m, d, d));
      return make_module<K>(a, d, std::move(rho));
    }
    if (kind == "sum") {
      check_keys(s, {"algebra", "kind", "summands"});
      std::vector<ModulePtr<K>> parts;
      for (const auto& n : as_strings(need(s, "summands"))) parts.push_back(ws.module(n));
      if (parts.empty()) return zero_module(a);
      return direct_sum(parts).module;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    fail_at(s, err.what());
  }
  fail_at(s, "unknown or missing module kind '" + kind + "'");
}

template <class K>
RingHom<K> build_hom(Workspace<K>& ws, const Section& s, const std::map<std::string, ProductResult<K>>& products,
                     const std::string& name) {
  auto kind = kind_of(s, "matrix");
  try {
    if (kind == "matrix") {
      check_keys(s, {"kind", "source", "target", "matrix"});
      auto src = as_string(need(s, "source")), tgt = as_string(need(s, "target"));
      const auto& a = ws.algebra(src);
      const auto& b = ws.algebra(tgt);
      ws.hom_ends[name] = {src, tgt};
      return RingHom<K>(a, b, as_matrix<K>(need(s, "matrix"), a->dim(), b->dim()));
    }
    if (kind == "identity") {
      check_keys(s, {"kind", "source"});
      auto src = as_string(need(s, "source"));
      ws.hom_ends[name] = {src, src};
      return identity_hom(ws.algebra(src));
    }
    if (kind == "projection") {
      check_keys(s, {"kind", "source", "factor"});
      auto src = as_string(need(s, "source"));
      auto it = products.find(src);
      if (it == products.end()) fail_at(need(s, "source"), "'" + src + "' is not a product algebra");
      auto f = as_size(need(s, "factor"));
      if (f > 1) fail_at(need(s, "factor"), "factor is 0 or 1");
      ws.hom_ends[name] = {src, name + ".target"};
      return f == 0 ? it->second.first : it->second.second;
    }
    if (kind == "quotient") {
      check_keys(s, {"kind", "source", "generators"});
      auto src = as_string(need(s, "source"));
      const auto& a = ws.algebra(src);
      std::vector<Vec<K>> gens;
      for (const auto& g : as_strings(need(s, "generators"))) gens.push_back(parse_element(*a, g));
      ws.hom_ends[name] = {src, name + ".target"};
      return quotient_by_ideal(a, ideal_generated(a, gens)).projection;
    }
    if (kind == "lift") {
      // A -> End(T0) for the add(T)-coresolution 0 -> A -> T0 -> T1 -> 0
      check_keys(s, {"kind", "source", "summands"});
      auto src = as_string(need(s, "source"));
      const auto& a = ws.algebra(src);
      std::vector<ModulePtr<K>> ts;
      for (const auto& n : as_strings(need(s, "summands"))) ts.push_back(ws.module(n));
      auto rep = is_classical_tilting(ts, a);
      if (rep.verdict != Verdict::yes) fail_at(s, "summands do not form a tilting module: " + rep.reason);
      ws.hom_ends[name] = {src, name + ".target"};
      return lift_through_approximation(rep.coresolution->inclusion).map;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    fail_at(s, err.what());
  }
  fail_at(s, "unknown ring map kind '" + kind + "'");
}

}  // namespace detail

/// Builds every section in document order; names refer to earlier sections.
template <class K>
Workspace<K> build_workspace(const format::Document& doc) {
  Workspace<K> ws;
  std::map<std::string, ProductResult<K>> products;
  for (const auto& s : doc.sections) {
    auto dot = s.name.find('.');
    std::string head = s.name.substr(0, dot);
    std::string name = dot == std::string::npos ? "" : s.name.substr(dot + 1);
    if (head == "algebra") {
      if (name.empty()) name = "A";
      if (ws.algebras.count(name)) detail::fail_at(s, "algebra '" + name + "' defined twice");
      ws.algebras[name] = detail::build_algebra(ws, s, products, name);
      ws.algebra_order.push_back(name);
    } else if (head == "module" && !name.empty()) {
      auto m = detail::build_module(ws, s);
      ws.modules[name] = m;
      auto* e = s.find("algebra");
      ws.module_algebra[name] = e ? e->value.text : "A";
      ws.module_order.push_back(name);
    } else if (head == "hom" && !name.empty()) {
      auto h = detail::build_hom(ws, s, products, name);
      const auto& tgt = ws.hom_ends[name].second;
      if (!ws.algebras.count(tgt)) {
        ws.algebras[tgt] = h.target();
        ws.algebra_order.push_back(tgt);
      }
      ws.homs.emplace(name, std::move(h));
      ws.hom_order.push_back(name);
    } else if (s.name == "pipeline") {
      detail::check_keys(s, {"steps"});
      for (const auto& v : detail::as_array(detail::need(s, "steps"))) {
        if (!v.is(format::Value::Kind::table)) detail::fail_at(v, "pipeline steps are inline tables");
        PipelineStep st;
        for (const auto& [k, x] : v.entries) {
          if (x.is(format::Value::Kind::array) || x.is(format::Value::Kind::table)) detail::fail_at(x, "step options are scalars");
          if (k == "command") st.command = x.text;
          else st.options.emplace_back(k, x.text);
        }
        if (st.command.empty()) detail::fail_at(v, "pipeline step without a command");
        ws.pipeline.push_back(std::move(st));
      }
    } else {
      detail::fail_at(s, "unknown section; expected [algebra], [algebra.<name>], [module.<name>], [hom.<name>] or [pipeline]");
    }
  }
  return ws;
}

}  // namespace strathom
