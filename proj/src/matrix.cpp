#include "mumford/matrix.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace mumford {

Mat2 Mat2::identity(const FqSpecPtr& spec) {
  return {LocalElement::from_int(spec, 1), LocalElement::exact_zero(spec),
          LocalElement::exact_zero(spec), LocalElement::from_int(spec, 1)};
}

Mat2 Mat2::translation(const LocalElement& x) {
  const FqSpecPtr& spec = x.spec();
  return {LocalElement::from_int(spec, 1), x, LocalElement::exact_zero(spec),
          LocalElement::from_int(spec, 1)};
}

Mat2 Mat2::lower_translation(const LocalElement& x) {
  const FqSpecPtr& spec = x.spec();
  return {LocalElement::from_int(spec, 1), LocalElement::exact_zero(spec), x,
          LocalElement::from_int(spec, 1)};
}

Mat2 Mat2::diag(const LocalElement& x, const LocalElement& y) {
  const FqSpecPtr& spec = x.spec();
  return {x, LocalElement::exact_zero(spec), LocalElement::exact_zero(spec), y};
}

Mat2 Mat2::inversion(const FqSpecPtr& spec) {
  return {LocalElement::exact_zero(spec), LocalElement::from_int(spec, 1),
          LocalElement::from_int(spec, -1), LocalElement::exact_zero(spec)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

LocalElement Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::adjugate() const { return {d, -b, -c, a}; }

Mat2 Mat2::scaled(const LocalElement& s) const { return {a * s, b * s, c * s, d * s}; }

Mat2 Mat2::shifted(long k) const {
  return {a.shifted(k), b.shifted(k), c.shifted(k), d.shifted(k)};
}

long Mat2::min_valuation() const {
  bool any = false;
  long m = 0;
  for (const LocalElement* e : {&a, &b, &c, &d}) {
    if (e->known_zero()) {
      if (!e->is_exact_zero())
        throw precision_error("matrix entry zero to precision; valuation unknown");
      continue;
    }
    long v = *e->valuation();
    if (!any || v < m) m = v, any = true;
  }
  if (!any) throw domain_error("zero matrix");
  return m;
}

Mat2 Mat2::primitive() const { return shifted(-min_valuation()); }

bool Mat2::is_scalar() const {
  if (!b.known_zero() || !c.known_zero()) return false;
  if (!b.is_exact_zero() || !c.is_exact_zero())
    throw precision_error("scalar test indeterminate (off-diagonal known only mod pi^N)");
  return a == d;
}

bool Mat2::proportional_to(const Mat2& o) const { return (*this * o.adjugate()).is_scalar(); }

std::optional<long> Mat2::order_in_pgl(long cap) const {
  Mat2 acc = *this;
  for (long n = 1; n <= cap; ++n) {
    if (acc.is_scalar()) return n;
    acc = acc * *this;
  }
  return std::nullopt;
}

ProjPoint Mat2::apply(const ProjPoint& pt) const {
  return ProjPoint(a * pt.a() + b * pt.b(), c * pt.a() + d * pt.b());
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << a.to_string() << ", " << b.to_string() << "], [" << c.to_string() << ", "
     << d.to_string() << "]]";
  return os.str();
}

namespace {

// Digest of the projective class of an (exact-entry) matrix: rescale so the
// minimal valuation is 0 and the first minimal-valuation entry is monic in
// its lowest digit, then hash a window of digits.
size_t pgl_digest(const Mat2& m) {
  Mat2 p = m.primitive();
  const LocalElement* entries[4] = {&p.a, &p.b, &p.c, &p.d};
  const LocalElement* pivot = nullptr;
  for (const LocalElement* e : entries) {
    if (!e->known_zero() && *e->valuation() == 0) {
      pivot = e;
      break;
    }
  }
  FqElement lead = pivot->terms().begin()->second;
  LocalElement unit = LocalElement::from_fq(p.spec(), lead.inverse());
  Mat2 q = p.scaled(unit);
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const LocalElement* e : {&q.a, &q.b, &q.c, &q.d}) {
    mix(0xabcdefull);
    int count = 0;
    for (const auto& [exp, coeff] : e->terms()) {
      if (++count > 24) break;
      mix((size_t)exp * 2654435761u);
      mix((size_t)coeff.index());
    }
  }
  return h;
}

}  // namespace

std::vector<Mat2> generated_group(const std::vector<Mat2>& gens, size_t cap) {
  if (gens.empty()) throw domain_error("empty generating set");
  const FqSpecPtr& spec = gens.front().spec();
  std::vector<Mat2> elems;
  std::unordered_map<size_t, std::vector<size_t>> index;
  auto find = [&](const Mat2& m) -> long {
    auto it = index.find(pgl_digest(m));
    if (it == index.end()) return -1;
    for (size_t i : it->second)
      if (elems[i].proportional_to(m)) return (long)i;
    return -1;
  };
  auto add = [&](const Mat2& m) -> bool {
    if (find(m) >= 0) return false;
    elems.push_back(m.primitive());
    index[pgl_digest(m)].push_back(elems.size() - 1);
    return true;
  };
  add(Mat2::identity(spec));
  std::deque<size_t> work;
  for (const Mat2& g : gens)
    if (add(g)) work.push_back(elems.size() - 1);
  while (!work.empty()) {
    size_t i = work.front();
    work.pop_front();
    for (const Mat2& g : gens) {
      for (const Mat2& prod : {elems[i] * g, g * elems[i]}) {
        if (add(prod)) {
          if (elems.size() > cap) throw domain_error("generated group exceeds cap");
          work.push_back(elems.size() - 1);
        }
      }
    }
  }
  return elems;
}

}  // namespace mumford
