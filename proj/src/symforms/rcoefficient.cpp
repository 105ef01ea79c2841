#include "caliber/symforms/rcoefficient.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace caliber {

namespace {

constexpr int kRBias = 128;
constexpr int kFieldBits = 5;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

}  // namespace

void RCoefficient::unpack(std::uint64_t key, int* exps, int& r_exp) {
  r_exp = static_cast<int>(key & 0xFF) - kRBias;
  exps[0] = static_cast<int>((key >> 8) & 1);
  key >>= 9;
  for (int i = 1; i < kMaxVars; ++i) {
    exps[i] = static_cast<int>(key & kFieldMask);
    key >>= kFieldBits;
  }
}

std::uint64_t RCoefficient::pack(const int* exps, int r_exp) {
  if (r_exp < -kRBias || r_exp > 127) throw InvalidArgument("r exponent out of representable range");
  if (exps[0] < 0 || exps[0] > 1) throw InvalidArgument("unreduced x0 exponent");
  std::uint64_t key = 0;
  for (int i = kMaxVars - 1; i >= 1; --i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent) throw InvalidArgument("monomial exponent out of representable range");
    key = (key << kFieldBits) | static_cast<std::uint64_t>(exps[i]);
  }
  key = (key << 1) | static_cast<std::uint64_t>(exps[0]);
  key = (key << 8) | static_cast<std::uint64_t>(r_exp + kRBias);
  return key;
}

RCoefficient::RCoefficient(const mpq_class& c) {
  if (sgn(c) != 0) {
    int exps[kMaxVars] = {};
    terms_.push_back({pack(exps, 0), c});
  }
}

RCoefficient RCoefficient::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, 1, e, 0);
}

RCoefficient RCoefficient::r_power(int m, int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("symbolic coefficients support 1..12 variables");
  RCoefficient out;
  out.nvars_ = nvars;
  int exps[kMaxVars] = {};
  out.terms_.push_back({pack(exps, m), 1});
  return out;
}

RCoefficient RCoefficient::monomial(int nvars, const mpq_class& c, const std::vector<int>& exponents, int r_exp) {
  if (nvars < 1 || nvars > kMaxVars) throw InvalidArgument("symbolic coefficients support 1..12 variables");
  if (static_cast<int>(exponents.size()) != nvars) throw DimensionMismatch("monomial exponent count differs from nvars");
  RCoefficient out;
  out.nvars_ = nvars;
  if (sgn(c) == 0) return out;
  int exps[kMaxVars] = {};
  std::copy(exponents.begin(), exponents.end(), exps);
  // Fold x0^(2q) into powers of (r^2 - sum x_i^2) by repeated reduction.
  int extra = exps[0] / 2;
  exps[0] %= 2;
  std::vector<Term> cur;
  int base[kMaxVars];
  std::copy(exps, exps + kMaxVars, base);
  cur.push_back({pack(base, r_exp), c});
  for (int s = 0; s < extra; ++s) {
    std::vector<Term> next;
    for (const auto& t : cur) {
      int e[kMaxVars], m;
      unpack(t.key, e, m);
      int e0 = e[0] + 2;
      e[0] = e0;
      push_reduced(next, nvars, t.c, e, m);
    }
    normalize(next);
    cur.swap(next);
  }
  out.terms_ = std::move(cur);
  normalize(out.terms_);
  return out;
}

void RCoefficient::push_reduced(std::vector<Term>& out, int nvars, const mpq_class& c, int* exps, int r_exp) {
  if (exps[0] < 2) {
    out.push_back({pack(exps, r_exp), c});
    return;
  }
  exps[0] -= 2;
  if (exps[0] >= 2) throw InvalidArgument("x0 exponent too large to reduce in one step");
  out.push_back({pack(exps, r_exp + 2), c});
  for (int i = 1; i < nvars; ++i) {
    exps[i] += 2;
    out.push_back({pack(exps, r_exp), -c});
    exps[i] -= 2;
  }
}

void RCoefficient::normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::uint64_t key = terms[r].key;
    mpq_class sum = terms[r].c;
    std::size_t s = r + 1;
    for (; s < terms.size() && terms[s].key == key; ++s) sum += terms[s].c;
    if (sgn(sum) != 0) {
      terms[w].key = key;
      terms[w].c = std::move(sum);
      ++w;
    }
    r = s;
  }
  terms.resize(w);
}

int RCoefficient::join_vars(int a, int b) {
  if (a != 0 && b != 0 && a != b) throw DimensionMismatch("coefficients live in different dimensions");
  return std::max(a, b);
}

RCoefficient RCoefficient::operator-() const {
  RCoefficient out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

RCoefficient operator+(const RCoefficient& a, const RCoefficient& b) {
  RCoefficient out;
  out.nvars_ = RCoefficient::join_vars(a.nvars_, b.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->key < ib->key)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->key < ia->key) {
      out.terms_.push_back(*ib++);
    } else {
      mpq_class s = ia->c + ib->c;
      if (sgn(s) != 0) out.terms_.push_back({ia->key, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

RCoefficient operator-(const RCoefficient& a, const RCoefficient& b) { return a + (-b); }

RCoefficient operator*(const mpq_class& s, const RCoefficient& a) {
  RCoefficient out;
  out.nvars_ = a.nvars_;
  if (sgn(s) == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.c *= s;
  return out;
}

RCoefficient operator*(const RCoefficient& a, const RCoefficient& b) {
  RCoefficient out;
  out.nvars_ = RCoefficient::join_vars(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<RCoefficient::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  int ea[RCoefficient::kMaxVars], eb[RCoefficient::kMaxVars], e[RCoefficient::kMaxVars];
  for (const auto& ta : a.terms_) {
    int ma;
    RCoefficient::unpack(ta.key, ea, ma);
    for (const auto& tb : b.terms_) {
      int mb;
      RCoefficient::unpack(tb.key, eb, mb);
      for (int i = 0; i < RCoefficient::kMaxVars; ++i) e[i] = ea[i] + eb[i];
      RCoefficient::push_reduced(acc, out.nvars_, ta.c * tb.c, e, ma + mb);
    }
  }
  RCoefficient::normalize(acc);
  out.terms_ = std::move(acc);
  return out;
}

RCoefficient RCoefficient::times_r_power(int m) const {
  RCoefficient out;
  out.nvars_ = nvars_;
  out.terms_.reserve(terms_.size());
  int e[kMaxVars], r;
  for (const auto& t : terms_) {
    unpack(t.key, e, r);
    out.terms_.push_back({pack(e, r + m), t.c});
  }
  return out;
}

RCoefficient RCoefficient::derivative(int i) const {
  RCoefficient out;
  out.nvars_ = nvars_;
  if (i < 0 || (nvars_ > 0 && i >= nvars_) || i >= kMaxVars) throw InvalidArgument("derivative: variable index out of range");
  std::vector<Term> acc;
  int e[kMaxVars], r;
  for (const auto& t : terms_) {
    unpack(t.key, e, r);
    if (e[i] > 0) {
      mpq_class c = t.c * e[i];
      e[i] -= 1;
      acc.push_back({pack(e, r), std::move(c)});
      e[i] += 1;
    }
    if (r != 0) {
      if (nvars_ == 0) throw InvalidArgument("derivative: dimension unknown for a pure r-power");
      mpq_class c = t.c * r;
      e[i] += 1;
      push_reduced(acc, nvars_, c, e, r - 2);
    }
  }
  normalize(acc);
  out.terms_ = std::move(acc);
  return out;
}

double RCoefficient::evaluate(const double* x, int dim) const {
  double r2 = 0.0;
  for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
  const double r = std::sqrt(r2);
  double total = 0.0;
  int e[kMaxVars], m;
  for (const auto& t : terms_) {
    unpack(t.key, e, m);
    double v = t.c.get_d() * std::pow(r, m);
    for (int i = 0; i < std::min(dim, int(kMaxVars)); ++i)
      if (e[i]) v *= std::pow(x[i], e[i]);
    total += v;
  }
  return total;
}

bool RCoefficient::is_homogeneous(int degree) const {
  int e[kMaxVars], m;
  for (const auto& t : terms_) {
    unpack(t.key, e, m);
    int d = m;
    for (int i = 0; i < kMaxVars; ++i) d += e[i];
    if (d != degree) return false;
  }
  return true;
}

std::string RCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  int e[kMaxVars], m;
  bool first = true;
  for (const auto& t : terms_) {
    unpack(t.key, e, m);
    if (!first) os << (sgn(t.c) < 0 ? " - " : " + ");
    else if (sgn(t.c) < 0) os << "-";
    first = false;
    mpq_class a = abs(t.c);
    bool bare = true;
    if (a != 1) {
      os << a.get_str();
      bare = false;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      os << (bare ? "" : "*") << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      bare = false;
    }
    if (m != 0) {
      os << (bare ? "" : "*") << "r";
      if (m != 1) os << "^" << m;
      bare = false;
    }
    if (bare) os << "1";
  }
  return os.str();
}

}  // namespace caliber
