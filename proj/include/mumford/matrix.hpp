#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mumford/laurent.hpp"

namespace mumford {

// 2x2 matrix over K, used as a representative of a class in PGL(2,K).
struct Mat2 {
  LocalElement a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const FqSpecPtr& spec);
  // Upper unipotent translation z -> z + x.
  static Mat2 translation(const LocalElement& x);
  // Lower unipotent.
  static Mat2 lower_translation(const LocalElement& x);
  static Mat2 diag(const LocalElement& x, const LocalElement& y);
  // The involution [[0, 1], [-1, 0]].
  static Mat2 inversion(const FqSpecPtr& spec);

  const FqSpecPtr& spec() const { return a.spec(); }
  Mat2 operator*(const Mat2& o) const;
  LocalElement det() const;
  Mat2 adjugate() const;  // adj(m), equals the inverse in PGL(2,K)
  Mat2 scaled(const LocalElement& s) const;
  Mat2 shifted(long k) const;  // multiply every entry by pi^k

  // Minimal valuation among the (known nonzero) entries.
  long min_valuation() const;
  // pi-power rescaling so that min_valuation() == 0.
  Mat2 primitive() const;
  // Scalars of K^*, decided exactly when entries are exact.
  bool is_scalar() const;
  bool proportional_to(const Mat2& o) const;  // equality in PGL(2,K)

  // Order in PGL(2,K), or nullopt if it exceeds the cap.
  std::optional<long> order_in_pgl(long cap = 2000) const;

  ProjPoint apply(const ProjPoint& pt) const;
  std::string to_string() const;
};

// Closure of a generating set inside PGL(2,K); throws domain_error when the
// generated group exceeds `cap` elements.  The identity is element 0.
std::vector<Mat2> generated_group(const std::vector<Mat2>& gens, size_t cap = 4096);

}  // namespace mumford
