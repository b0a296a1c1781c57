#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mumford/errors.hpp"

namespace mumford {

// A finite field F_q, q = p^t, realised as F_p[g]/(modulus).  The modulus is
// the lexicographically least monic irreducible of degree t (coefficients
// read from the x^(t-1) term down to the constant term).
struct FqSpec {
  long p = 0;
  int t = 1;
  std::vector<int> modulus;  // size t+1, modulus[t] == 1

  long long q() const;
  std::string modulus_string() const;
};

using FqSpecPtr = std::shared_ptr<const FqSpec>;

FqSpecPtr make_field(long p, int t);

class FqElement {
 public:
  FqElement() = default;
  FqElement(FqSpecPtr spec, long value);             // image of an integer
  FqElement(FqSpecPtr spec, std::vector<int> poly);  // coeffs in g, any length

  const FqSpecPtr& spec() const { return spec_; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of g^i, 0 <= i < t.
  int coeff(int i) const { return i < (int)c_.size() ? c_[i] : 0; }

  FqElement operator-() const;
  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator/(const FqElement& o) const;
  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }

  FqElement inverse() const;
  FqElement pow(long long e) const;
  long long multiplicative_order() const;

  // Index in the enumeration order used by element_by_index.
  long long index() const;

  std::string to_string() const;  // polynomial in g, e.g. "g+1"

 private:
  void reduce();
  FqSpecPtr spec_;
  std::vector<int> c_;  // dense, trailing zeros trimmed; empty == 0
};

// Deterministic enumeration of all q field elements: index i has base-p
// digits (c_0, c_1, ...) giving c_0 + c_1 g + ...
FqElement element_by_index(const FqSpecPtr& spec, long long i);
FqElement fq_generator(const FqSpecPtr& spec);  // the class of g
// Least element (in enumeration order) of multiplicative order q-1.
FqElement primitive_element(const FqSpecPtr& spec);
// Deterministic primitive n-th root of unity; requires n | q-1.
FqElement root_of_unity(const FqSpecPtr& spec, long long n);

bool same_field(const FqSpecPtr& a, const FqSpecPtr& b);

}  // namespace mumford
