#pragma once

#include <map>
#include <optional>
#include <string>

#include "mumford/fq.hpp"

namespace mumford {

inline constexpr int kDefaultPrecision = 64;

// Truncated Laurent series over F_q in the uniformiser pi.  An element is
// either exact (all omitted digits are genuinely zero) or known only for
// exponents strictly below `prec()`.
class LocalElement {
 public:
  LocalElement() = default;

  static LocalElement exact_zero(FqSpecPtr spec);
  static LocalElement zero_to_precision(FqSpecPtr spec, long prec);
  static LocalElement from_int(FqSpecPtr spec, long c);
  static LocalElement from_fq(FqSpecPtr spec, const FqElement& c);
  static LocalElement pi_pow(FqSpecPtr spec, long e);  // pi^e, exact
  // c * pi^e, exact
  static LocalElement monomial(FqSpecPtr spec, const FqElement& c, long e);

  const FqSpecPtr& spec() const { return spec_; }
  bool is_exact() const { return exact_; }
  long prec() const { return prec_; }  // meaningful only when !is_exact()
  const std::map<long, FqElement>& terms() const { return c_; }

  bool known_zero() const { return c_.empty(); }        // zero as far as known
  bool is_exact_zero() const { return exact_ && c_.empty(); }

  // Valuation: nullopt means +infinity (exact zero).  Throws precision_error
  // when the element is zero to the current precision but not exactly.
  std::optional<long> valuation() const;

  LocalElement operator-() const;
  LocalElement operator+(const LocalElement& o) const;
  LocalElement operator-(const LocalElement& o) const;
  LocalElement operator*(const LocalElement& o) const;
  LocalElement operator/(const LocalElement& o) const;
  LocalElement inverse(long target_prec = kDefaultPrecision) const;
  // Multiply by pi^k.
  LocalElement shifted(long k) const;
  // Truncation to exponents < k; result is exact (a representative mod pi^k).
  LocalElement reduced_mod(long k) const;

  // Decidable equality; throws precision_error when indeterminate.
  bool operator==(const LocalElement& o) const;
  bool operator!=(const LocalElement& o) const { return !(*this == o); }

  // x == y mod pi^k, decided from digits below k.
  bool congruent_mod(const LocalElement& o, long k) const;

  std::string to_string() const;

 private:
  void set_term(long e, const FqElement& c);
  void clip();  // drop terms at/above prec_ for inexact elements

  FqSpecPtr spec_;
  std::map<long, FqElement> c_;  // exponent -> nonzero coefficient
  bool exact_ = true;
  long prec_ = 0;
  friend LocalElement parse_local_element(const FqSpecPtr&, const std::string&);
};

// Parses the textual format produced by to_string():
//   term ('+' term)* ['+' 'O(pi^N)']
//   term := coeff | coeff '*' 'pi' ['^' exp] | 'pi' ['^' exp]
//   coeff := integer | gpoly | '(' gpoly ')'     exp := ['('] integer [')']
// with gpoly a polynomial in the residue generator 'g'.
LocalElement parse_local_element(const FqSpecPtr& spec, const std::string& text);

// A point of P^1(K): class of (a : b), not both zero.
class ProjPoint {
 public:
  ProjPoint(LocalElement a, LocalElement b);
  static ProjPoint infinity(const FqSpecPtr& spec);
  static ProjPoint finite(const LocalElement& z);

  const LocalElement& a() const { return a_; }
  const LocalElement& b() const { return b_; }
  bool is_infinity() const;

  bool operator==(const ProjPoint& o) const;
  std::string to_string() const;

 private:
  LocalElement a_, b_;  // normalised: b == 1, or a == 1 with v(b) > 0
};

}  // namespace mumford
