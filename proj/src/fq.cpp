#include "mumford/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace mumford {

namespace {

int mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long qt = r / nr;
    std::swap(t -= qt * nt, nt);
    std::swap(r -= qt * nr, nr);
  }
  if (r != 1) throw domain_error("not invertible mod p");
  return (int)((t % p + p) % p);
}

using Poly = std::vector<int>;  // dense coeffs mod p, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (int)((r[i + j] + (long)a[i] * b[j]) % p);
  trim(r);
  return r;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
  trim(a);
  int leadinv = mod_inverse(m.back(), p);
  while (a.size() >= m.size()) {
    long lead = (long)a.back() * leadinv % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      long v = a[shift + i] - lead * m[i] % p;
      a[shift + i] = (int)((v % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, long long e, const Poly& m, long p) {
  Poly r = {1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {  // make monic
    int inv = mod_inverse(a.back(), p);
    for (int& c : a) c = (int)((long)c * inv % p);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree t over F_p.
bool is_irreducible(const Poly& f, long p) {
  int t = (int)f.size() - 1;
  if (t <= 0) return false;
  Poly x = {0, 1};
  // x^(p^t) == x mod f
  Poly xp = x;
  for (int i = 0; i < t; ++i) xp = poly_powmod(xp, p, f, p);
  Poly diff = xp;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (int)(((diff[1] - 1) % p + p) % p);
  diff = poly_mod(std::move(diff), f, p);  // x itself is not reduced when t = 1
  if (!diff.empty()) return false;
  // gcd(x^(p^(t/r)) - x, f) == 1 for prime divisors r of t
  for (int r = 2; r <= t; ++r) {
    if (t % r != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    Poly y = x;
    for (int i = 0; i < t / r; ++i) y = poly_powmod(y, p, f, p);
    Poly d = y;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (int)(((d[1] - 1) % p + p) % p);
    trim(d);
    Poly g = poly_gcd(d, f, p);
    if (!(g.size() == 1 && g[0] == 1)) return false;
  }
  return true;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

long long FqSpec::q() const {
  long long r = 1;
  for (int i = 0; i < t; ++i) {
    if (r > (1LL << 62) / p) throw domain_error("field too large");
    r *= p;
  }
  return r;
}

std::string FqSpec::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = t; i >= 0; --i) {
    int c = modulus[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (i == 0 || c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FqSpecPtr make_field(long p, int t) {
  if (!is_prime(p)) throw domain_error("p must be prime");
  if (t < 1 || t > 20) throw domain_error("extension degree out of range");
  static std::map<std::pair<long, int>, FqSpecPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find({p, t});
  if (it != cache.end()) return it->second;

  // Enumerate monic degree-t polynomials by the integer whose base-p digits
  // are (c_{t-1}, ..., c_1, c_0), most significant first, and take the least
  // irreducible one.
  auto spec = std::make_shared<FqSpec>();
  spec->p = p;
  spec->t = t;
  long long total = 1;
  for (int i = 0; i < t; ++i) total *= p;
  for (long long k = 0; k < total; ++k) {
    Poly g(t + 1, 0);
    g[t] = 1;
    long long v = k;
    for (int i = 0; i < t; ++i) {  // least significant digit of k is c_0
      g[i] = (int)(v % p);
      v /= p;
    }
    if (is_irreducible(g, p)) {
      spec->modulus.assign(g.begin(), g.end());
      spec->modulus.resize(t + 1, 0);
      spec->modulus[t] = 1;
      cache[{p, t}] = spec;
      return spec;
    }
  }
  throw domain_error("no irreducible polynomial found");
}

bool same_field(const FqSpecPtr& a, const FqSpecPtr& b) {
  return a && b && a->p == b->p && a->t == b->t;
}

FqElement::FqElement(FqSpecPtr spec, long value) : spec_(std::move(spec)) {
  long v = value % spec_->p;
  if (v < 0) v += spec_->p;
  if (v != 0) c_ = {(int)v};
}

FqElement::FqElement(FqSpecPtr spec, std::vector<int> poly)
    : spec_(std::move(spec)), c_(std::move(poly)) {
  reduce();
}

void FqElement::reduce() {
  long p = spec_->p;
  for (int& v : c_) v = (int)(((long)v % p + p) % p);
  if ((int)c_.size() > spec_->t) {
    Poly m(spec_->modulus.begin(), spec_->modulus.end());
    c_ = poly_mod(std::move(c_), m, p);
  }
  trim(c_);
}

FqElement FqElement::operator-() const {
  FqElement r = *this;
  for (int& v : r.c_) v = (int)((spec_->p - v) % spec_->p);
  trim(r.c_);
  return r;
}

FqElement FqElement::operator+(const FqElement& o) const {
  if (!same_field(spec_, o.spec_)) throw domain_error("field mismatch");
  std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (int)((coeff((int)i) + (long)o.coeff((int)i)) % spec_->p);
  FqElement e;
  e.spec_ = spec_;
  e.c_ = std::move(r);
  trim(e.c_);
  return e;
}

FqElement FqElement::operator-(const FqElement& o) const { return *this + (-o); }

FqElement FqElement::operator*(const FqElement& o) const {
  if (!same_field(spec_, o.spec_)) throw domain_error("field mismatch");
  FqElement e;
  e.spec_ = spec_;
  e.c_ = poly_mul(c_, o.c_, spec_->p);
  e.reduce();
  return e;
}

FqElement FqElement::operator/(const FqElement& o) const { return *this * o.inverse(); }

bool FqElement::operator==(const FqElement& o) const {
  return same_field(spec_, o.spec_) && c_ == o.c_;
}

FqElement FqElement::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero in F_q");
  // x^(q-2)
  return pow(spec_->q() - 2);
}

FqElement FqElement::pow(long long e) const {
  if (is_zero()) {
    if (e == 0) return FqElement(spec_, 1);
    if (e < 0) throw domain_error("inverse of zero in F_q");
    return *this;
  }
  long long m = spec_->q() - 1;
  e %= m;
  if (e < 0) e += m;
  FqElement base = *this, r(spec_, 1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

long long FqElement::multiplicative_order() const {
  if (is_zero()) throw domain_error("order of zero");
  long long n = spec_->q() - 1;
  // Start from q-1 and strip each prime factor while the power stays 1.
  long long ord = n;
  long long m = n;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    while (m % d == 0) m /= d;
    while (ord % d == 0 && pow(ord / d) == FqElement(spec_, 1)) ord /= d;
  }
  if (m > 1) {
    while (ord % m == 0 && pow(ord / m) == FqElement(spec_, 1)) ord /= m;
  }
  return ord;
}

long long FqElement::index() const {
  long long idx = 0, mult = 1;
  for (int i = 0; i < spec_->t; ++i) {
    idx += coeff(i) * mult;
    mult *= spec_->p;
  }
  return idx;
}

std::string FqElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = (int)c_.size() - 1; i >= 0; --i) {
    int c = c_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqElement element_by_index(const FqSpecPtr& spec, long long i) {
  std::vector<int> c;
  long long q = spec->q();
  if (i < 0 || i >= q) throw domain_error("element index out of range");
  for (int k = 0; k < spec->t; ++k) {
    c.push_back((int)(i % spec->p));
    i /= spec->p;
  }
  return FqElement(spec, std::move(c));
}

FqElement fq_generator(const FqSpecPtr& spec) {
  std::vector<int> c = {0, 1};
  c.resize(std::max(2, 2));
  return FqElement(spec, std::move(c));
}

FqElement primitive_element(const FqSpecPtr& spec) {
  long long q = spec->q();
  for (long long i = 1; i < q; ++i) {
    FqElement e = element_by_index(spec, i);
    if (e.multiplicative_order() == q - 1) return e;
  }
  throw domain_error("no primitive element found");
}

FqElement root_of_unity(const FqSpecPtr& spec, long long n) {
  long long q = spec->q();
  if (n <= 0 || (q - 1) % n != 0)
    throw domain_error("no primitive n-th root of unity: n does not divide q-1");
  return primitive_element(spec).pow((q - 1) / n);
}

}  // namespace mumford
