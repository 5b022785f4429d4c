#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strathom/algebra.hpp"
#include "strathom/errors.hpp"

namespace strathom {

namespace detail {

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::size_t vertex_index(const QuiverPresentation& q, const std::string& name) {
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    if (q.vertices[i] == name) return i;
  throw ParseError("unknown vertex '" + name + "'");
}

inline std::size_t arrow_index(const QuiverPresentation& q, const std::string& name) {
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    if (q.arrows[i].name == name) return i;
  throw ParseError("unknown arrow '" + name + "'");
}

}  // namespace detail

/// Path in function order ("beta*alpha"), returned in traversal order.
inline std::vector<std::size_t> parse_path(const QuiverPresentation& q, const std::string& text) {
  std::vector<std::size_t> path;
  std::size_t start = 0;
  while (true) {
    auto star = text.find('*', start);
    auto tok = detail::trim(text.substr(start, star == std::string::npos ? std::string::npos : star - start));
    if (tok.empty()) throw ParseError("empty arrow name in path '" + text + "'");
    path.push_back(detail::arrow_index(q, tok));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  std::reverse(path.begin(), path.end());
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const auto& a = q.arrows[path[k]];
    const auto& b = q.arrows[path[k + 1]];
    if (a.target != b.source)
      throw ParseError("path '" + text + "' is not composable: " + b.name + "*" + a.name + " needs target(" + a.name +
                       ") = source(" + b.name + ")");
  }
  return path;
}

/// Function-order name of a traversal-order path.
inline std::string path_name(const QuiverPresentation& q, const std::vector<std::size_t>& path) {
  std::string s;
  for (auto it = path.rbegin(); it != path.rend(); ++it) s += (s.empty() ? "" : "*") + q.arrows[*it].name;
  return s;
}

/// Builds a presentation from names; relations use function order.
inline QuiverPresentation make_quiver(const std::vector<std::string>& vertices,
                                      const std::vector<std::array<std::string, 3>>& arrows,
                                      const std::vector<std::string>& relations) {
  QuiverPresentation q;
  q.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vertices[i] == vertices[j]) throw ParseError("duplicate vertex '" + vertices[i] + "'");
  for (const auto& [name, s, t] : arrows) {
    for (const auto& a : q.arrows)
      if (a.name == name) throw ParseError("duplicate arrow '" + name + "'");
    if (name.empty() || name.find('*') != std::string::npos) throw ParseError("bad arrow name '" + name + "'");
    q.arrows.push_back({name, detail::vertex_index(q, s), detail::vertex_index(q, t)});
  }
  for (const auto& r : relations) {
    auto p = parse_path(q, r);
    if (p.size() < 2) throw ParseError("relation '" + r + "' has length < 2 (not admissible)");
    q.relations.push_back(std::move(p));
  }
  return q;
}

/// Path algebra kQ/(relations) for monomial relations. Basis: nonzero paths,
/// vertices first, then by length.
template <class K>
AlgebraPtr<K> from_quiver(const QuiverPresentation& q) {
  const std::size_t nv = q.vertices.size();
  if (nv == 0) throw PreconditionError("quiver has no vertices");
  std::size_t m = 0;
  for (const auto& r : q.relations) {
    if (r.size() < 2) throw PreconditionError("relation of length < 2");
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
      if (q.arrows[r[k]].target != q.arrows[r[k + 1]].source) throw PreconditionError("relation is not composable");
    m = std::max(m, r.size());
  }
  auto killed = [&](const std::vector<std::size_t>& p) {
    for (const auto& r : q.relations)
      if (r.size() <= p.size() && std::equal(r.begin(), r.end(), p.end() - static_cast<long>(r.size()))) return true;
    return false;
  };

  QuiverInfo info;
  info.presentation = q;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < nv; ++v) {
    info.paths.emplace_back();
    info.source.push_back(v);
    info.target.push_back(v);
    info.vertex_basis.push_back(v);
    labels.push_back("e" + q.vertices[v]);
  }
  // a repeated window of length w >= m-1 along a surviving path pumps forever
  const std::size_t w = std::max<std::size_t>(m > 0 ? m - 1 : 1, 1);
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) frontier.push_back({a});
  std::size_t windows = 0;
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    for (const auto& p : frontier) {
      info.paths.push_back(p);
      info.source.push_back(q.arrows[p.front()].source);
      info.target.push_back(q.arrows[p.back()].target);
      labels.push_back(path_name(q, p));
    }
    if (len == w) windows = frontier.size();
    if (len >= w && len >= windows + w) {
      const auto& p = frontier.front();
      for (std::size_t i = 0; i + w <= p.size(); ++i)
        for (std::size_t j = i + 1; j + w <= p.size(); ++j)
          if (std::equal(p.begin() + i, p.begin() + i + w, p.begin() + j)) {
            std::vector<std::size_t> cyc(p.begin() + i, p.begin() + j);
            throw DomainError("quotient is infinite-dimensional: cycle " + path_name(q, cyc) + " survives");
          }
      throw ConsistencyError("path enumeration exceeded its bound without a repeated window");
    }
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != q.arrows[p.back()].target) continue;
        auto np = p;
        np.push_back(a);
        if (!killed(np)) next.push_back(std::move(np));
      }
    frontier = std::move(next);
  }

  const std::size_t n = info.paths.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = nv; i < n; ++i) index[info.paths[i]] = i;
  std::vector<Vec<K>> table(n * n, zero_vec<K>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // b_i * b_j = "b_j then b_i"
      if (info.target[j] != info.source[i]) continue;
      if (info.paths[j].empty()) {
        table[i * n + j][i] = K::from_int(1);
      } else if (info.paths[i].empty()) {
        table[i * n + j][j] = K::from_int(1);
      } else {
        auto cat = info.paths[j];
        cat.insert(cat.end(), info.paths[i].begin(), info.paths[i].end());
        auto it = index.find(cat);
        if (it != index.end()) table[i * n + j][it->second] = K::from_int(1);
      }
    }
  auto unit = zero_vec<K>(n);
  std::vector<Vec<K>> idem;
  for (std::size_t v = 0; v < nv; ++v) {
    unit[v] = K::from_int(1);
    idem.push_back(unit_vec<K>(n, v));
  }
  typename Algebra<K>::Extras ex;
  ex.idempotents = std::move(idem);
  ex.quiver = std::move(info);
  return make_algebra<K>(std::move(labels), std::move(table), std::move(unit), std::move(ex));
}

/// Basis element with the given label.
template <class K>
Vec<K> element(const Algebra<K>& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == label) return a.basis(i);
  throw ParseError("no basis element labelled '" + label + "'");
}

/// Vertex idempotent e_v of a path algebra.
template <class K>
Vec<K> vertex_idempotent(const Algebra<K>& a, std::size_t v) {
  const auto* q = a.quiver();
  if (!q) throw PreconditionError("algebra has no quiver presentation");
  return a.basis(q->vertex_basis.at(v));
}

}  // namespace strathom
