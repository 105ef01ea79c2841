#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "caliber/exterior/form.hpp"

namespace caliber {

// Exact coefficient on R^N minus the origin: a finite sum of
//   q * x0^a0 * x1^a1 ... * r^m,   q rational, m any integer, r = |x|.
// Canonical form uses r^2 = sum x_i^2 to eliminate x0^2, so a0 is 0 or 1.
// Monomials with a0 <= 1 are linearly independent, hence the form is unique.
class RCoefficient {
 public:
  static constexpr int kMaxVars = 12;
  static constexpr int kMaxExponent = 31;

  struct Term {
    std::uint64_t key;
    mpq_class c;
    bool operator==(const Term& o) const { return key == o.key && c == o.c; }
  };

  RCoefficient() = default;
  explicit RCoefficient(long c) : RCoefficient(mpq_class(c)) {}
  explicit RCoefficient(const mpq_class& c);

  static RCoefficient variable(int nvars, int i);
  static RCoefficient r_power(int m, int nvars = 0);
  static RCoefficient monomial(int nvars, const mpq_class& c, const std::vector<int>& exponents, int r_exp);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const RCoefficient& o) const { return terms_ == o.terms_; }

  RCoefficient operator-() const;
  friend RCoefficient operator+(const RCoefficient& a, const RCoefficient& b);
  friend RCoefficient operator-(const RCoefficient& a, const RCoefficient& b);
  friend RCoefficient operator*(const RCoefficient& a, const RCoefficient& b);
  friend RCoefficient operator*(const mpq_class& s, const RCoefficient& a);

  RCoefficient times_r_power(int m) const;
  RCoefficient derivative(int i) const;

  double evaluate(const double* x, int dim) const;
  // True when every monomial has total degree (x-degree plus r exponent) equal to `degree`.
  bool is_homogeneous(int degree) const;
  std::string to_string() const;

  static void unpack(std::uint64_t key, int* exps, int& r_exp);
  static std::uint64_t pack(const int* exps, int r_exp);

 private:
  static void normalize(std::vector<Term>& terms);
  static int join_vars(int a, int b);
  // Appends c * (monomial with exponents exps and r^m), reducing x0^2 when present.
  static void push_reduced(std::vector<Term>& out, int nvars, const mpq_class& c, int* exps, int r_exp);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

template <>
struct CoeffTraits<RCoefficient> {
  static bool is_zero(const RCoefficient& c) { return c.is_zero(); }
  static RCoefficient zero() { return RCoefficient(); }
};

}  // namespace caliber
