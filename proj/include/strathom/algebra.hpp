#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/errors.hpp"
#include "strathom/matrix.hpp"

namespace strathom {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Quiver with monomial relations. Relations and paths are stored in
/// traversal order (first arrow first); the algebra product is composition,
/// so the element written beta*alpha is the path "alpha then beta".
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> relations;
};

/// Path data attached to algebras built from a quiver.
struct QuiverInfo {
  QuiverPresentation presentation;
  std::vector<std::vector<std::size_t>> paths;  // per basis element, traversal order; empty for a vertex
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::size_t> vertex_basis;  // basis index of e_v
};

/// Finite-dimensional unital associative algebra given by structure
/// constants on a basis. Immutable; associativity, the unit laws and the
/// optional primitive idempotent list are verified on construction.
///
/// Finite-dimensional algebras are perfect and semilocal, which is all the
/// ring-theoretic hypotheses used downstream ever ask for.
template <class K>
class Algebra {
 public:
  using Elem = Vec<K>;

  struct Extras {
    std::optional<std::vector<Elem>> idempotents;
    std::optional<QuiverInfo> quiver;
    /// Known radical basis (e.g. inherited by a corner or quotient); verified
    /// to be a nilpotent two-sided ideal.
    std::optional<std::vector<Elem>> radical;
  };

  Algebra(std::vector<std::string> labels, std::vector<Elem> table, Elem unit, Extras extras = {})
      : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    n_ = labels_.size();
    if (n_ == 0) throw PreconditionError("algebra of dimension 0 (the zero ring is excluded)");
    if (table_.size() != n_ * n_) throw DomainError("structure constant table has wrong size");
    for (const auto& v : table_)
      if (v.size() != n_) throw DomainError("structure constant vector has wrong length");
    if (unit_.size() != n_) throw DomainError("unit has wrong length");
    build_right_mult();
    check_laws();
    quiver_ = std::move(extras.quiver);
    if (extras.idempotents) set_idempotents(std::move(*extras.idempotents));
    compute_generators();
    compute_radical(extras.radical);
  }

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Elem& unit() const { return unit_; }
  Elem zero() const { return zero_vec<K>(n_); }
  Elem basis(std::size_t i) const { return unit_vec<K>(n_, i); }
  const Elem& basis_product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  const std::vector<Elem>& table() const { return table_; }

  Elem mul(const Elem& x, const Elem& y) const {
    auto out = zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        axpy(out, x[i] * y[j], table_[i * n_ + j]);
      }
    }
    return out;
  }

  /// Matrix of y -> y * b_j on row vectors.
  const Mat<K>& right_mult(std::size_t j) const { return right_[j]; }
  /// Matrix of y -> y * x.
  Mat<K> right_mult_elem(const Elem& x) const {
    Mat<K> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      if (!x[j].is_zero()) m += right_[j] * x[j];
    return m;
  }
  /// Matrix of y -> x * y.
  Mat<K> left_mult_elem(const Elem& x) const {
    Mat<K> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      auto row = zero();
      for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero()) axpy(row, x[i], table_[i * n_ + j]);
      m.set_row(j, row);
    }
    return m;
  }

  bool is_idempotent(const Elem& e) const { return mul(e, e) == e; }

  bool has_idempotents() const { return idempotents_.has_value(); }
  /// Complete set of primitive orthogonal idempotents; throws when absent.
  const std::vector<Elem>& idempotents() const {
    if (!idempotents_) throw PreconditionError("algebra carries no primitive idempotents");
    return *idempotents_;
  }
  const QuiverInfo* quiver() const { return quiver_ ? &*quiver_ : nullptr; }

  /// Generating set of the algebra as a unital algebra.
  const std::vector<Elem>& generators() const { return generators_; }
  /// Generators that are not in the span of the idempotents.
  const std::vector<Elem>& non_idempotent_generators() const { return non_idem_generators_; }

  bool radical_available() const { return radical_.has_value(); }
  /// Jacobson radical. Needs characteristic 0 or p > dim unless inherited.
  const Subspace<K>& radical() const {
    if (!radical_)
      throw UnsupportedField("radical needs characteristic 0 or p > dim (p = " + std::to_string(K::characteristic()) +
                             ", dim = " + std::to_string(n_) + ")");
    return *radical_;
  }

  std::string element_to_string(const Elem& x) const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (!x[i].is_one()) s += x[i].to_string() + "*";
      s += labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  friend bool same_algebra(const Algebra& a, const Algebra& b) {
    return &a == &b || (a.n_ == b.n_ && a.unit_ == b.unit_ && a.table_ == b.table_);
  }

 private:
  void build_right_mult() {
    right_.assign(n_, Mat<K>(n_, n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) right_[j].set_row(i, table_[i * n_ + j]);
  }

  void check_laws() const {
    for (std::size_t i = 0; i < n_; ++i) {
      auto b = basis(i);
      if (mul(unit_, b) != b || mul(b, unit_) != b) throw DomainError("unit law fails for basis element " + labels_[i]);
    }
    // (y b_j) b_k = y (b_j b_k) for all y, i.e. R_j R_k = R_{b_j b_k}
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        Mat<K> rhs(n_, n_);
        const auto& c = table_[j * n_ + k];
        for (std::size_t l = 0; l < n_; ++l)
          if (!c[l].is_zero()) rhs += right_[l] * c[l];
        if (right_[j] * right_[k] != rhs)
          throw DomainError("multiplication is not associative (" + labels_[j] + ", " + labels_[k] + ")");
      }
  }

  void set_idempotents(std::vector<Elem> es) {
    auto sum = zero();
    for (std::size_t a = 0; a < es.size(); ++a) {
      if (es[a].size() != n_) throw DomainError("idempotent has wrong length");
      if (is_zero(es[a])) throw DomainError("zero element in idempotent list");
      for (std::size_t b = 0; b < es.size(); ++b) {
        auto p = mul(es[a], es[b]);
        if (a == b ? p != es[a] : !is_zero(p)) throw DomainError("idempotent list is not orthogonal idempotents");
      }
      sum = sum + es[a];
    }
    if (sum != unit_) throw DomainError("idempotents do not sum to the unit");
    idempotents_ = std::move(es);
  }

  void compute_generators() {
    if (quiver_) {
      for (auto v : quiver_->vertex_basis) generators_.push_back(basis(v));
      for (std::size_t i = 0; i < n_; ++i)
        if (quiver_->paths[i].size() == 1) {
          generators_.push_back(basis(i));
          non_idem_generators_.push_back(basis(i));
        }
      return;
    }
    Subspace<K> idem_span(n_);
    idem_span.extend(unit_);
    if (idempotents_)
      for (const auto& e : *idempotents_) {
        generators_.push_back(e);
        idem_span.extend(e);
      }
    Subspace<K> sub = closure(generators_);
    for (std::size_t i = 0; i < n_ && sub.dim() < n_; ++i) {
      auto b = basis(i);
      if (sub.contains(b)) continue;
      generators_.push_back(b);
      sub = closure(generators_);
    }
    for (const auto& g : generators_)
      if (!idem_span.contains(g)) non_idem_generators_.push_back(g);
  }

  /// Span of all words in gens (including the empty word).
  Subspace<K> closure(const std::vector<Elem>& gens) const {
    Subspace<K> s(n_);
    std::vector<Elem> frontier{unit_};
    s.extend(unit_);
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          auto y = mul(x, g);
          if (s.extend(y)) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    return s;
  }

  void compute_radical(const std::optional<std::vector<Elem>>& hint) {
    std::vector<Elem> rad;
    if (hint) {
      rad = *hint;
    } else if (quiver_) {
      for (std::size_t i = 0; i < n_; ++i)
        if (!quiver_->paths[i].empty()) rad.push_back(basis(i));
    } else {
      auto p = K::characteristic();
      if (p != 0 && p <= n_) return;
      // trace form (x, y) -> tr(R_{xy}); its kernel is the radical here
      Vec<K> tr;
      for (std::size_t k = 0; k < n_; ++k) tr.push_back(right_[k].trace());
      Mat<K> gram(n_, n_);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          K s = K::from_int(0);
          const auto& c = table_[i * n_ + j];
          for (std::size_t k = 0; k < n_; ++k)
            if (!c[k].is_zero()) s += c[k] * tr[k];
          gram(i, j) = s;
        }
      auto kb = kernel_basis(gram);
      for (std::size_t c = 0; c < kb.cols(); ++c) rad.push_back(kb.col(c));
    }
    Subspace<K> r = Subspace<K>::span(rad, n_);
    // two-sided ideal and nilpotent
    for (const auto& x : r.basis())
      for (const auto& g : generators_)
        if (!r.contains(mul(x, g)) || !r.contains(mul(g, x))) throw ConsistencyError("radical candidate is not an ideal");
    Subspace<K> power = r;
    for (std::size_t step = 0; power.dim() > 0; ++step) {
      if (step > n_) throw ConsistencyError("radical candidate is not nilpotent");
      std::vector<Elem> prods;
      for (const auto& x : power.basis())
        for (const auto& y : r.basis()) prods.push_back(mul(x, y));
      power = Subspace<K>::span(prods, n_);
    }
    radical_ = std::move(r);
  }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  Elem unit_;
  std::vector<Mat<K>> right_;
  std::optional<std::vector<Elem>> idempotents_;
  std::optional<QuiverInfo> quiver_;
  std::vector<Elem> generators_;
  std::vector<Elem> non_idem_generators_;
  std::optional<Subspace<K>> radical_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
AlgebraPtr<K> make_algebra(std::vector<std::string> labels, std::vector<Vec<K>> table, Vec<K> unit,
                           typename Algebra<K>::Extras extras = {}) {
  return std::make_shared<const Algebra<K>>(std::move(labels), std::move(table), std::move(unit), std::move(extras));
}

/// Unital multiplicative linear map; x -> x * matrix on coordinate rows.
template <class K>
class RingHom {
 public:
  RingHom(AlgebraPtr<K> source, AlgebraPtr<K> target, Mat<K> matrix)
      : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != source_->dim() || m_.cols() != target_->dim()) throw DomainError("ring hom matrix has wrong shape");
    if (apply(source_->unit()) != target_->unit()) throw DomainError("map is not unital");
    for (std::size_t i = 0; i < source_->dim(); ++i)
      for (std::size_t j = 0; j < source_->dim(); ++j)
        if (apply(source_->basis_product(i, j)) != target_->mul(m_.row(i), m_.row(j)))
          throw DomainError("map is not multiplicative on (" + source_->labels()[i] + ", " + source_->labels()[j] + ")");
  }

  const AlgebraPtr<K>& source() const { return source_; }
  const AlgebraPtr<K>& target() const { return target_; }
  const Mat<K>& matrix() const { return m_; }
  Vec<K> apply(const Vec<K>& x) const { return m_.apply(x); }
  Vec<K> image_of_basis(std::size_t i) const { return m_.row(i); }
  std::size_t rank() const { return strathom::rank(m_); }
  bool injective() const { return rank() == source_->dim(); }
  bool surjective() const { return rank() == target_->dim(); }

 private:
  AlgebraPtr<K> source_;
  AlgebraPtr<K> target_;
  Mat<K> m_;
};

template <class K>
RingHom<K> identity_hom(const AlgebraPtr<K>& a) {
  return RingHom<K>(a, a, Mat<K>::identity(a->dim()));
}

template <class K>
RingHom<K> compose(const RingHom<K>& g, const RingHom<K>& f) {
  if (!same_algebra(*f.target(), *g.source())) throw DomainError("compose: algebras do not match");
  return RingHom<K>(f.source(), g.target(), f.matrix() * g.matrix());
}

/// Two-sided ideal, kept as an rref basis in parent coordinates.
template <class K>
struct IdealBasis {
  AlgebraPtr<K> parent;
  Subspace<K> space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const Vec<K>& x) const { return space.contains(x); }
};

template <class K>
bool is_two_sided_ideal(const Algebra<K>& a, const Subspace<K>& s) {
  for (const auto& x : s.basis())
    for (const auto& g : a.generators())
      if (!s.contains(a.mul(x, g)) || !s.contains(a.mul(g, x))) return false;
  return true;
}

/// Smallest two-sided ideal containing the generators.
template <class K>
IdealBasis<K> ideal_generated(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& gens) {
  Subspace<K> s(a->dim());
  std::vector<Vec<K>> frontier;
  for (const auto& g : gens)
    if (s.extend(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vec<K>> next;
    for (const auto& x : frontier)
      for (const auto& g : a->generators()) {
        auto l = a->mul(g, x);
        if (s.extend(l)) next.push_back(std::move(l));
        auto r = a->mul(x, g);
        if (s.extend(r)) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return {a, std::move(s)};
}

template <class K>
IdealBasis<K> ideal_product(const IdealBasis<K>& i, const IdealBasis<K>& j) {
  std::vector<Vec<K>> prods;
  for (const auto& x : i.space.basis())
    for (const auto& y : j.space.basis()) prods.push_back(i.parent->mul(x, y));
  // the span of products of an ideal pair is already a two-sided ideal
  return {i.parent, Subspace<K>::span(prods, i.parent->dim())};
}

template <class K>
IdealBasis<K> radical(const AlgebraPtr<K>& a) {
  return {a, a->radical()};
}

template <class K>
struct QuotientResult {
  AlgebraPtr<K> algebra;
  RingHom<K> projection;
};

/// A / I on the complement spanned by the parent basis elements at the
/// non-pivot columns of I.
template <class K>
QuotientResult<K> quotient_by_ideal(const AlgebraPtr<K>& a, const IdealBasis<K>& ideal) {
  if (!is_two_sided_ideal(*a, ideal.space)) throw PreconditionError("quotient_by_ideal: not a two-sided ideal");
  if (ideal.contains(a->unit())) throw PreconditionError("quotient_by_ideal: ideal contains the unit");
  QuotientSpace<K> q(ideal.space);
  const auto& comp = q.complement();
  std::size_t m = comp.size();
  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back(a->labels()[c]);
  std::vector<Vec<K>> table;
  for (auto i : comp)
    for (auto j : comp) table.push_back(q.coords(a->basis_product(i, j)));
  typename Algebra<K>::Extras ex;
  if (a->has_idempotents()) {
    std::vector<Vec<K>> idem;
    for (const auto& e : a->idempotents()) {
      auto c = q.coords(e);
      if (!is_zero(c)) idem.push_back(std::move(c));
    }
    ex.idempotents = std::move(idem);
  }
  if (a->radical_available()) {
    std::vector<Vec<K>> rad;
    for (const auto& r : a->radical().basis()) rad.push_back(q.coords(r));
    ex.radical = std::move(rad);
  }
  auto b = make_algebra<K>(std::move(labels), std::move(table), q.coords(a->unit()), std::move(ex));
  Mat<K> proj(a->dim(), m);
  for (std::size_t i = 0; i < a->dim(); ++i) proj.set_row(i, q.coords(a->basis(i)));
  return {b, RingHom<K>(a, b, std::move(proj))};
}

template <class K>
struct CornerResult {
  AlgebraPtr<K> algebra;
  Mat<K> inclusion;  // corner coordinates -> parent coordinates
  Vec<K> idempotent;
};

/// eAe with unit e.
template <class K>
CornerResult<K> corner(const AlgebraPtr<K>& a, const Vec<K>& e) {
  if (!a->is_idempotent(e)) throw PreconditionError("corner: element is not idempotent");
  if (is_zero(e)) throw PreconditionError("corner: e = 0 gives the zero ring");
  std::vector<Vec<K>> imgs;
  for (std::size_t i = 0; i < a->dim(); ++i) imgs.push_back(a->mul(a->mul(e, a->basis(i)), e));
  Subspace<K> s = Subspace<K>::span(imgs, a->dim());
  const auto& bs = s.basis();
  std::size_t m = bs.size();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < bs[k].size(); ++j)
      if (!bs[k][j].is_zero()) ++nz, at = j;
    labels.push_back(nz == 1 && bs[k][at].is_one() ? a->labels()[at] : a->element_to_string(bs[k]));
  }
  std::vector<Vec<K>> table;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table.push_back(s.coords(a->mul(bs[i], bs[j])));
  typename Algebra<K>::Extras ex;
  if (a->has_idempotents()) {
    std::vector<Vec<K>> idem;
    auto sum = a->zero();
    bool ok = true;
    for (const auto& f : a->idempotents()) {
      auto ef = a->mul(e, f), fe = a->mul(f, e);
      if (ef == f && fe == f) {
        idem.push_back(s.coords(f));
        sum = sum + f;
      } else if (!is_zero(ef) || !is_zero(fe)) {
        ok = false;
      }
    }
    if (ok && sum == e) ex.idempotents = std::move(idem);
  }
  if (a->radical_available()) {
    std::vector<Vec<K>> rad;
    for (const auto& r : a->radical().basis()) rad.push_back(a->mul(a->mul(e, r), e));
    Subspace<K> rs = Subspace<K>::span(rad, a->dim());
    std::vector<Vec<K>> rc;
    for (const auto& r : rs.basis()) rc.push_back(s.coords(r));
    ex.radical = std::move(rc);
  }
  auto c = make_algebra<K>(std::move(labels), std::move(table), s.coords(e), std::move(ex));
  return {c, Mat<K>::from_rows(bs, a->dim()), e};
}

/// Full matrix algebra M_n(k) on the matrix units E_ij.
template <class K>
AlgebraPtr<K> matrix_algebra(std::size_t n) {
  if (n == 0) throw PreconditionError("matrix_algebra: n must be >= 1");
  std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back("E" + std::to_string(i + 1) + (n > 9 ? "_" : "") + std::to_string(j + 1));
  std::vector<Vec<K>> table(d * d, zero_vec<K>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) table[idx(i, j) * d + idx(j, l)][idx(i, l)] = K::from_int(1);
  auto unit = zero_vec<K>(d);
  std::vector<Vec<K>> idem;
  for (std::size_t i = 0; i < n; ++i) {
    unit[idx(i, i)] = K::from_int(1);
    idem.push_back(unit_vec<K>(d, idx(i, i)));
  }
  typename Algebra<K>::Extras ex;
  ex.idempotents = std::move(idem);
  ex.radical = std::vector<Vec<K>>{};
  return make_algebra<K>(std::move(labels), std::move(table), std::move(unit), std::move(ex));
}

/// Upper triangular n x n matrices on E_ij, i <= j.
template <class K>
AlgebraPtr<K> upper_triangular_algebra(std::size_t n) {
  if (n == 0) throw PreconditionError("upper_triangular_algebra: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
  std::size_t d = units.size();
  auto find = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < d; ++k)
      if (units[k] == std::pair{i, j}) return k;
    return d;
  };
  std::vector<std::string> labels;
  for (auto [i, j] : units) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Vec<K>> table(d * d, zero_vec<K>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first) table[a * d + b][find(units[a].first, units[b].second)] = K::from_int(1);
  auto unit = zero_vec<K>(d);
  std::vector<Vec<K>> idem, rad;
  for (std::size_t k = 0; k < d; ++k) {
    if (units[k].first == units[k].second) {
      unit[k] = K::from_int(1);
      idem.push_back(unit_vec<K>(d, k));
    } else {
      rad.push_back(unit_vec<K>(d, k));
    }
  }
  typename Algebra<K>::Extras ex;
  ex.idempotents = std::move(idem);
  ex.radical = std::move(rad);
  return make_algebra<K>(std::move(labels), std::move(table), std::move(unit), std::move(ex));
}

template <class K>
struct ProductResult {
  AlgebraPtr<K> algebra;
  RingHom<K> first;
  RingHom<K> second;
};

/// a x b with componentwise multiplication and its two projections.
template <class K>
ProductResult<K> product_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
  std::size_t m = a->dim(), n = b->dim(), d = m + n;
  std::vector<std::string> labels = a->labels();
  for (const auto& l : b->labels()) {
    bool clash = std::find(a->labels().begin(), a->labels().end(), l) != a->labels().end();
    labels.push_back(clash ? l + "'" : l);
  }
  auto embed = [&](const Vec<K>& x, std::size_t off) {
    auto v = zero_vec<K>(d);
    for (std::size_t i = 0; i < x.size(); ++i) v[off + i] = x[i];
    return v;
  };
  std::vector<Vec<K>> table(d * d, zero_vec<K>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * d + j] = embed(a->basis_product(i, j), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[(m + i) * d + (m + j)] = embed(b->basis_product(i, j), m);
  typename Algebra<K>::Extras ex;
  if (a->has_idempotents() && b->has_idempotents()) {
    std::vector<Vec<K>> idem;
    for (const auto& e : a->idempotents()) idem.push_back(embed(e, 0));
    for (const auto& e : b->idempotents()) idem.push_back(embed(e, m));
    ex.idempotents = std::move(idem);
  }
  if (a->radical_available() && b->radical_available()) {
    std::vector<Vec<K>> rad;
    for (const auto& r : a->radical().basis()) rad.push_back(embed(r, 0));
    for (const auto& r : b->radical().basis()) rad.push_back(embed(r, m));
    ex.radical = std::move(rad);
  }
  auto p = make_algebra<K>(std::move(labels), std::move(table), embed(a->unit(), 0) + embed(b->unit(), m), std::move(ex));
  Mat<K> pa(d, m), pb(d, n);
  for (std::size_t i = 0; i < m; ++i) pa(i, i) = K::from_int(1);
  for (std::size_t i = 0; i < n; ++i) pb(m + i, i) = K::from_int(1);
  return {p, RingHom<K>(p, a, std::move(pa)), RingHom<K>(p, b, std::move(pb))};
}

/// Same basis, multiplication reversed.
template <class K>
AlgebraPtr<K> opposite(const AlgebraPtr<K>& a) {
  std::size_t n = a->dim();
  std::vector<Vec<K>> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(a->basis_product(j, i));
  typename Algebra<K>::Extras ex;
  if (a->has_idempotents()) ex.idempotents = a->idempotents();
  if (a->radical_available()) ex.radical = a->radical().basis();
  return make_algebra<K>(a->labels(), std::move(table), a->unit(), std::move(ex));
}

/// True iff A / rad A is commutative, which in the split setting means basic.
template <class K>
bool is_basic_split(const AlgebraPtr<K>& a) {
  auto q = quotient_by_ideal(a, radical(a)).algebra;
  for (std::size_t i = 0; i < q->dim(); ++i)
    for (std::size_t j = i + 1; j < q->dim(); ++j)
      if (q->basis_product(i, j) != q->basis_product(j, i)) return false;
  return true;
}

}  // namespace strathom
