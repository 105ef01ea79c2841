#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "caliber/exterior/blade.hpp"

namespace caliber {

template <class C>
struct CoeffTraits {
  static bool is_zero(const C& c) { return c == C(0); }
  static C zero() { return C(0); }
};

// Sparse alternating form over a coefficient ring C. Terms are kept sorted by
// blade mask with no zero coefficients, so structural equality is term equality.
template <class C>
class Form {
 public:
  using Coeff = C;
  using Term = std::pair<BladeMask, C>;

  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) { check_shape(); }

  static Form from_terms(int dim, int degree, std::vector<Term> terms) {
    Form f(dim, degree);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (blade::degree(t.first) != degree || (t.first & ~blade::full(dim)))
        throw InvalidArgument("term blade does not match form shape");
      if (!f.terms_.empty() && f.terms_.back().first == t.first)
        f.terms_.back().second = f.terms_.back().second + t.second;
      else
        f.terms_.push_back(std::move(t));
    }
    f.prune();
    return f;
  }

  static Form from_map(int dim, int degree, std::map<BladeMask, C>&& acc) {
    Form f(dim, degree);
    f.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!CoeffTraits<C>::is_zero(c)) f.terms_.emplace_back(m, std::move(c));
    return f;
  }

  static Form basis(int dim, const std::vector<int>& idx, C c = C(1)) {
    return from_terms(dim, static_cast<int>(idx.size()), {{blade::from_indices(idx, dim), std::move(c)}});
  }

  static Form scalar(int dim, C c) { return from_terms(dim, 0, {{0, std::move(c)}}); }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(BladeMask m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, BladeMask key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return CoeffTraits<C>::zero();
  }

  bool operator==(const Form& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  Form operator-() const {
    Form r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Form& operator+=(const Form& o) { return *this = combine(*this, o, false); }
  Form& operator-=(const Form& o) { return *this = combine(*this, o, true); }
  friend Form operator+(const Form& a, const Form& b) { return combine(a, b, false); }
  friend Form operator-(const Form& a, const Form& b) { return combine(a, b, true); }

  friend Form operator*(const C& s, const Form& f) {
    Form r(f.dim_, f.degree_);
    if (CoeffTraits<C>::is_zero(s)) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) r.terms_.emplace_back(t.first, s * t.second);
    r.prune();
    return r;
  }

  template <class F>
  Form map_coefficients(F&& fn) const {
    Form r(dim_, degree_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, fn(t.second));
    r.prune();
    return r;
  }

  friend Form wedge(const Form& a, const Form& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("wedge: dimension mismatch");
    std::map<BladeMask, C> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        int s = blade::wedge_sign(ta.first, tb.first);
        if (s == 0) continue;
        C p = ta.second * tb.second;
        auto [it, fresh] = acc.try_emplace(ta.first | tb.first, CoeffTraits<C>::zero());
        if (s > 0)
          it->second = it->second + p;
        else
          it->second = it->second - p;
      }
    return from_map(a.dim_, a.degree_ + b.degree_, std::move(acc));
  }

  // Contraction with a vector whose components are coefficients of the same ring.
  friend Form interior(const std::vector<C>& v, const Form& f) {
    if (static_cast<int>(v.size()) != f.dim_) throw DimensionMismatch("interior: dimension mismatch");
    if (f.degree_ == 0) throw InvalidArgument("interior: cannot contract a 0-form");
    std::map<BladeMask, C> acc;
    for (const auto& t : f.terms_) {
      BladeMask m = t.first;
      int pos = 0;
      for (BladeMask rest = m; rest; rest &= rest - 1, ++pos) {
        int i = std::countr_zero(rest);
        if (CoeffTraits<C>::is_zero(v[i])) continue;
        C p = v[i] * t.second;
        auto [it, fresh] = acc.try_emplace(m & ~(BladeMask{1} << i), CoeffTraits<C>::zero());
        if (pos & 1)
          it->second = it->second - p;
        else
          it->second = it->second + p;
      }
    }
    return from_map(f.dim_, f.degree_ - 1, std::move(acc));
  }

 private:
  void check_shape() const {
    if (dim_ < 1 || dim_ > kMaxFormDim) throw InvalidArgument("form dimension out of range");
    if (degree_ < 0) throw InvalidArgument("negative form degree");
  }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return CoeffTraits<C>::is_zero(t.second); }),
                 terms_.end());
  }

  static Form combine(const Form& a, const Form& b, bool subtract) {
    if (a.dim_ != b.dim_ || a.degree_ != b.degree_) throw DimensionMismatch("form sum: shape mismatch");
    Form r(a.dim_, a.degree_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
        ++ib;
      } else {
        C c = ia->second;
        if (subtract)
          c = c - ib->second;
        else
          c = c + ib->second;
        if (!CoeffTraits<C>::is_zero(c)) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  int dim_ = 1;
  int degree_ = 0;
  std::vector<Term> terms_;
};

// A complex-valued form stored as its real and imaginary parts.
template <class C>
struct ComplexForm {
  Form<C> re;
  Form<C> im;

  ComplexForm() = default;
  ComplexForm(Form<C> r, Form<C> i) : re(std::move(r)), im(std::move(i)) {
    if (re.dim() != im.dim() || re.degree() != im.degree())
      throw DimensionMismatch("complex form parts differ in shape");
  }
  static ComplexForm real(Form<C> r) {
    Form<C> z(r.dim(), r.degree());
    return ComplexForm(std::move(r), std::move(z));
  }

  int dim() const { return re.dim(); }
  int degree() const { return re.degree(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const ComplexForm& o) const { return re == o.re && im == o.im; }

  ComplexForm conj() const { return {re, -im}; }
  ComplexForm times_i() const { return {-im, re}; }
  // Multiplication by i^m.
  ComplexForm times_i_pow(int m) const {
    switch (((m % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return times_i();
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }

  friend ComplexForm operator+(const ComplexForm& a, const ComplexForm& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexForm operator-(const ComplexForm& a, const ComplexForm& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexForm operator*(const C& s, const ComplexForm& f) { return {s * f.re, s * f.im}; }

  friend ComplexForm wedge(const ComplexForm& a, const ComplexForm& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
  }
  friend ComplexForm wedge(const ComplexForm& a, const Form<C>& b) { return {wedge(a.re, b), wedge(a.im, b)}; }
  friend ComplexForm wedge(const Form<C>& a, const ComplexForm& b) { return {wedge(a, b.re), wedge(a, b.im)}; }
};

// f^k with the wedge product; f^0 is the constant 1.
template <class F>
F wedge_power(const F& f, int k, const F& one) {
  F acc = one;
  for (int i = 0; i < k; ++i) acc = wedge(acc, f);
  return acc;
}

}  // namespace caliber
