#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "strathom/algebra.hpp"
#include "strathom/module.hpp"

namespace strathom {

/// The ground field as a one-dimensional algebra.
template <class K>
AlgebraPtr<K> ground_field() {
  return make_algebra<K>({"1"}, {Vec<K>{K::from_int(1)}}, Vec<K>{K::from_int(1)},
                         {std::vector<Vec<K>>{Vec<K>{K::from_int(1)}}, std::nullopt, std::vector<Vec<K>>{}});
}

/// L-R bimodule on row vectors: x . v = v * lambda(x), v . y = v * rho(y).
/// A left module is a bimodule whose right algebra is the ground field.
template <class K>
class Bimodule {
 public:
  Bimodule(AlgebraPtr<K> left, AlgebraPtr<K> right, std::size_t dim, std::vector<Mat<K>> lambda,
           std::vector<Mat<K>> rho, bool verify = true)
      : l_(std::move(left)), r_(std::move(right)), d_(dim), lambda_(std::move(lambda)), rho_(std::move(rho)) {
    if (lambda_.size() != l_->dim() || rho_.size() != r_->dim()) throw DomainError("bimodule: wrong number of action matrices");
    if (verify) check();
  }

  const AlgebraPtr<K>& left() const { return l_; }
  const AlgebraPtr<K>& right() const { return r_; }
  std::size_t dim() const { return d_; }
  const Mat<K>& lambda(std::size_t j) const { return lambda_[j]; }
  const Mat<K>& rho(std::size_t j) const { return rho_[j]; }
  Mat<K> lambda_elem(const Vec<K>& x) const { return combine(lambda_, x); }
  Mat<K> rho_elem(const Vec<K>& x) const { return combine(rho_, x); }

  /// Underlying right module over right().
  ModulePtr<K> right_module() const { return make_module<K>(r_, d_, rho_, false); }
  /// Underlying left module as a right module over opposite(left()).
  ModulePtr<K> left_as_right(const AlgebraPtr<K>& left_op) const { return make_module<K>(left_op, d_, lambda_, false); }

 private:
  Mat<K> combine(const std::vector<Mat<K>>& ms, const Vec<K>& x) const {
    Mat<K> m(d_, d_);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) m += ms[j] * x[j];
    return m;
  }

  void check() const {
    auto id = Mat<K>::identity(d_);
    if (lambda_elem(l_->unit()) != id || rho_elem(r_->unit()) != id) throw DomainError("bimodule: unit does not act as identity");
    for (const auto& g : l_->generators()) {
      auto lg = lambda_elem(g);
      for (std::size_t i = 0; i < l_->dim(); ++i)
        if (lg * lambda_[i] != lambda_elem(l_->mul(l_->basis(i), g)))
          throw DomainError("bimodule: left action is not multiplicative");
      for (const auto& h : r_->generators())
        if (lg * rho_elem(h) != rho_elem(h) * lg) throw DomainError("bimodule: left and right actions do not commute");
    }
    for (const auto& h : r_->generators()) {
      auto rh = rho_elem(h);
      for (std::size_t i = 0; i < r_->dim(); ++i)
        if (rho_[i] * rh != rho_elem(r_->mul(r_->basis(i), h)))
          throw DomainError("bimodule: right action is not multiplicative");
    }
  }

  AlgebraPtr<K> l_, r_;
  std::size_t d_;
  std::vector<Mat<K>> lambda_, rho_;
};

template <class K>
using BimodulePtr = std::shared_ptr<const Bimodule<K>>;

template <class K>
BimodulePtr<K> make_bimodule(AlgebraPtr<K> l, AlgebraPtr<K> r, std::size_t d, std::vector<Mat<K>> lambda,
                             std::vector<Mat<K>> rho, bool verify = true) {
  return std::make_shared<const Bimodule<K>>(std::move(l), std::move(r), d, std::move(lambda), std::move(rho), verify);
}

/// A as an A-A-bimodule.
template <class K>
BimodulePtr<K> regular_bimodule(const AlgebraPtr<K>& a) {
  std::vector<Mat<K>> lambda, rho;
  for (std::size_t j = 0; j < a->dim(); ++j) {
    lambda.push_back(a->left_mult_elem(a->basis(j)));
    rho.push_back(a->right_mult(j));
  }
  return make_bimodule<K>(a, a, a->dim(), std::move(lambda), std::move(rho), false);
}

/// Restriction of scalars on both sides (pass nullptr to keep a side).
template <class K>
BimodulePtr<K> restrict_bimodule(const BimodulePtr<K>& n, const RingHom<K>* left, const RingHom<K>* right) {
  std::vector<Mat<K>> lambda, rho;
  AlgebraPtr<K> l = n->left(), r = n->right();
  if (left) {
    if (!same_algebra(*left->target(), *n->left())) throw DomainError("restrict_bimodule: left algebra mismatch");
    l = left->source();
    for (std::size_t i = 0; i < l->dim(); ++i) lambda.push_back(n->lambda_elem(left->image_of_basis(i)));
  } else {
    for (std::size_t i = 0; i < l->dim(); ++i) lambda.push_back(n->lambda(i));
  }
  if (right) {
    if (!same_algebra(*right->target(), *n->right())) throw DomainError("restrict_bimodule: right algebra mismatch");
    r = right->source();
    for (std::size_t i = 0; i < r->dim(); ++i) rho.push_back(n->rho_elem(right->image_of_basis(i)));
  } else {
    for (std::size_t i = 0; i < r->dim(); ++i) rho.push_back(n->rho(i));
  }
  return make_bimodule<K>(l, r, n->dim(), std::move(lambda), std::move(rho), false);
}

/// Forgets the right action.
template <class K>
BimodulePtr<K> as_left_module(const BimodulePtr<K>& n) {
  auto k = ground_field<K>();
  std::vector<Mat<K>> lambda;
  for (std::size_t i = 0; i < n->left()->dim(); ++i) lambda.push_back(n->lambda(i));
  return make_bimodule<K>(n->left(), k, n->dim(), std::move(lambda), {Mat<K>::identity(n->dim())}, false);
}

/// Right module as a k-A bimodule.
template <class K>
BimodulePtr<K> as_bimodule(const ModulePtr<K>& m) {
  auto k = ground_field<K>();
  return make_bimodule<K>(k, m->algebra(), m->dim(), {Mat<K>::identity(m->dim())}, m->action(), false);
}

/// Left module over A from a right module over opposite(A) with identical
/// structure constants transposed.
template <class K>
BimodulePtr<K> left_module_from_opposite(const AlgebraPtr<K>& a, const ModulePtr<K>& m) {
  auto k = ground_field<K>();
  return make_bimodule<K>(a, k, m->dim(), m->action(), {Mat<K>::identity(m->dim())});
}

template <class K>
struct TensorResult {
  ModulePtr<K> module;  // over n.right()
  std::size_t dim = 0;
};

/// M (x)_A N for a right A-module M and an A-C-bimodule N; a right C-module.
/// Computed on the blocks M e_v (x) e_v N modulo m x (x) n - m (x) x n for
/// x = e_v g e_w, g a generator.
template <class K>
TensorResult<K> tensor_over(const Module<K>& m, const Bimodule<K>& n) {
  const auto& a = m.algebra();
  if (!same_algebra(*a, *n.left())) throw DomainError("tensor_over: algebras do not match");
  std::vector<Vec<K>> idem = a->has_idempotents() ? a->idempotents() : std::vector<Vec<K>>{a->unit()};
  const std::size_t nb = idem.size();
  std::vector<Subspace<K>> me, en;
  std::vector<std::size_t> off{0};
  for (const auto& e : idem) {
    me.emplace_back(m.dim() ? m.rho_elem(e) : Mat<K>(0, 0));
    en.emplace_back(n.dim() ? n.lambda_elem(e) : Mat<K>(0, 0));
    if (m.dim() == 0) me.back() = Subspace<K>(0);
    if (n.dim() == 0) en.back() = Subspace<K>(0);
    off.push_back(off.back() + me.back().dim() * en.back().dim());
  }
  const std::size_t total = off.back();
  auto idx = [&](std::size_t v, std::size_t i, std::size_t j) { return off[v] + i * en[v].dim() + j; };
  auto to_block = [&](std::size_t v, const Vec<K>& mv, const Vec<K>& nv, Vec<K>& out, const K& sign) {
    auto cm = me[v].coords(mv);
    auto cn = en[v].coords(nv);
    for (std::size_t i = 0; i < cm.size(); ++i) {
      if (cm[i].is_zero()) continue;
      for (std::size_t j = 0; j < cn.size(); ++j)
        if (!cn[j].is_zero()) out[idx(v, i, j)] += sign * cm[i] * cn[j];
    }
  };
  std::vector<Vec<K>> rels;
  const K one = K::from_int(1), minus = K::from_int(-1);
  for (const auto& g : a->non_idempotent_generators())
    for (std::size_t v = 0; v < nb; ++v)
      for (std::size_t w = 0; w < nb; ++w) {
        auto x = a->mul(a->mul(idem[v], g), idem[w]);
        if (is_zero(x) || me[v].dim() == 0 || en[w].dim() == 0) continue;
        auto rx = m.rho_elem(x);
        auto lx = n.lambda_elem(x);
        for (const auto& mb : me[v].basis()) {
          auto mx = rx.apply(mb);
          for (const auto& nb2 : en[w].basis()) {
            auto xn = lx.apply(nb2);
            auto rel = zero_vec<K>(total);
            if (!is_zero(mx)) to_block(w, mx, nb2, rel, one);
            if (!is_zero(xn)) to_block(v, mb, xn, rel, minus);
            if (!is_zero(rel)) rels.push_back(std::move(rel));
          }
        }
      }
  QuotientSpace<K> q(Subspace<K>::span(rels, total));
  TensorResult<K> out;
  out.dim = q.dim();
  const auto& c = n.right();
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < c->dim(); ++j) {
    Mat<K> r(q.dim(), q.dim());
    const auto& nr = n.rho(j);
    for (std::size_t row = 0; row < q.dim(); ++row) {
      // locate the complement basis vector m_i (x) n_k in its block
      auto col = q.complement()[row];
      std::size_t v = 0;
      while (off[v + 1] <= col) ++v;
      auto i = (col - off[v]) / en[v].dim(), k = (col - off[v]) % en[v].dim();
      auto img = zero_vec<K>(total);
      to_block(v, me[v].basis()[i], nr.apply(en[v].basis()[k]), img, one);
      r.set_row(row, q.coords(img));
    }
    rho.push_back(std::move(r));
  }
  out.module = make_module<K>(c, q.dim(), std::move(rho), false);
  return out;
}

template <class K>
std::size_t tensor_dim(const Module<K>& m, const Bimodule<K>& n) {
  return tensor_over(m, n).dim;
}

}  // namespace strathom
