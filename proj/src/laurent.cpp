#include "mumford/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace mumford {

namespace {
constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;
}

LocalElement LocalElement::exact_zero(FqSpecPtr spec) {
  LocalElement e;
  e.spec_ = std::move(spec);
  e.exact_ = true;
  return e;
}

LocalElement LocalElement::zero_to_precision(FqSpecPtr spec, long prec) {
  LocalElement e;
  e.spec_ = std::move(spec);
  e.exact_ = false;
  e.prec_ = prec;
  return e;
}

LocalElement LocalElement::from_int(FqSpecPtr spec, long c) {
  FqElement f(spec, c);
  return from_fq(spec, f);
}

LocalElement LocalElement::from_fq(FqSpecPtr spec, const FqElement& c) {
  return monomial(std::move(spec), c, 0);
}

LocalElement LocalElement::pi_pow(FqSpecPtr spec, long e) {
  FqElement one(spec, 1);
  return monomial(std::move(spec), one, e);
}

LocalElement LocalElement::monomial(FqSpecPtr spec, const FqElement& c, long e) {
  LocalElement r;
  r.spec_ = std::move(spec);
  r.exact_ = true;
  if (!c.is_zero()) r.c_[e] = c;
  return r;
}

void LocalElement::set_term(long e, const FqElement& c) {
  if (c.is_zero())
    c_.erase(e);
  else
    c_[e] = c;
}

void LocalElement::clip() {
  if (exact_) return;
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->first >= prec_)
      it = c_.erase(it);
    else
      ++it;
  }
}

std::optional<long> LocalElement::valuation() const {
  if (!c_.empty()) return c_.begin()->first;
  if (exact_) return std::nullopt;
  throw precision_error("valuation indeterminate: element is zero mod pi^" +
                        std::to_string(prec_) + " but not known exactly");
}

LocalElement LocalElement::operator-() const {
  LocalElement r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
  if (!same_field(spec_, o.spec_)) throw domain_error("field mismatch");
  LocalElement r;
  r.spec_ = spec_;
  r.exact_ = exact_ && o.exact_;
  r.prec_ = std::min(exact_ ? kInfPrec : prec_, o.exact_ ? kInfPrec : o.prec_);
  r.c_ = c_;
  for (const auto& [e, c] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end())
      r.c_[e] = c;
    else {
      FqElement s = it->second + c;
      if (s.is_zero())
        r.c_.erase(it);
      else
        it->second = s;
    }
  }
  r.clip();
  return r;
}

LocalElement LocalElement::operator-(const LocalElement& o) const { return *this + (-o); }

LocalElement LocalElement::operator*(const LocalElement& o) const {
  if (!same_field(spec_, o.spec_)) throw domain_error("field mismatch");
  LocalElement r;
  r.spec_ = spec_;
  r.exact_ = exact_ && o.exact_;
  if (!r.exact_) {
    // x*y = known*known + O(pi^(x.prec + v(y))) + O(pi^(y.prec + v(x))),
    // bounding v by the lowest stored exponent (or the precision itself for
    // an all-zero truncation).
    long vx = c_.empty() ? (exact_ ? kInfPrec : prec_) : c_.begin()->first;
    long vy = o.c_.empty() ? (o.exact_ ? kInfPrec : o.prec_) : o.c_.begin()->first;
    long p1 = exact_ ? kInfPrec : prec_ + std::min(vy, kInfPrec - prec_);
    long p2 = o.exact_ ? kInfPrec : o.prec_ + std::min(vx, kInfPrec - o.prec_);
    r.prec_ = std::min(p1, p2);
  }
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      long e = e1 + e2;
      FqElement prod = c1 * c2;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        if (!prod.is_zero()) r.c_[e] = prod;
      } else {
        FqElement s = it->second + prod;
        if (s.is_zero())
          r.c_.erase(it);
        else
          it->second = s;
      }
    }
  r.clip();
  return r;
}

LocalElement LocalElement::inverse(long target_prec) const {
  if (is_exact_zero()) throw domain_error("inverse of exact zero");
  if (c_.empty())
    throw precision_error("inverse indeterminate: element is zero mod pi^" +
                          std::to_string(prec_));
  long v = c_.begin()->first;
  // Digits of 1/x are reliable below prec - 2v for an inexact x; an exact x
  // can be inverted to any requested depth.
  long out_prec = exact_ ? -v + target_prec : prec_ - 2 * v;
  if (exact_ && c_.size() == 1) {
    return monomial(spec_, c_.begin()->second.inverse(), -v);
  }
  LocalElement r;
  r.spec_ = spec_;
  r.exact_ = false;
  r.prec_ = out_prec;
  if (out_prec <= -v) {
    return r;  // nothing representable at this precision
  }
  // Long division: maintain remainder rem = 1 - x*partial.
  LocalElement rem = from_int(spec_, 1);
  FqElement lead_inv = c_.begin()->second.inverse();
  while (!rem.c_.empty()) {
    long e = rem.c_.begin()->first;
    long digit_exp = e - v;
    if (digit_exp >= out_prec) break;
    FqElement d = rem.c_.begin()->second * lead_inv;
    r.c_[digit_exp] = d;
    rem = rem - monomial(spec_, d, digit_exp) * *this;
    // keep rem finite: drop terms that can no longer influence wanted digits
    for (auto it = rem.c_.begin(); it != rem.c_.end();) {
      if (it->first - v >= out_prec)
        it = rem.c_.erase(it);
      else
        ++it;
    }
  }
  r.clip();
  return r;
}

LocalElement LocalElement::operator/(const LocalElement& o) const {
  return *this * o.inverse();
}

LocalElement LocalElement::shifted(long k) const {
  LocalElement r;
  r.spec_ = spec_;
  r.exact_ = exact_;
  r.prec_ = exact_ ? 0 : prec_ + k;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LocalElement LocalElement::reduced_mod(long k) const {
  if (!exact_ && prec_ < k)
    throw precision_error("cannot reduce mod pi^" + std::to_string(k) +
                          ": element known only below pi^" + std::to_string(prec_));
  LocalElement r;
  r.spec_ = spec_;
  r.exact_ = true;
  for (const auto& [e, c] : c_)
    if (e < k) r.c_[e] = c;
  return r;
}

bool LocalElement::operator==(const LocalElement& o) const {
  LocalElement d = *this - o;
  if (!d.c_.empty()) return false;
  if (d.exact_) return true;
  throw precision_error("equality indeterminate at precision pi^" +
                        std::to_string(d.prec_));
}

bool LocalElement::congruent_mod(const LocalElement& o, long k) const {
  LocalElement d = *this - o;
  for (const auto& [e, c] : d.c_)
    if (e < k && !c.is_zero()) return false;
  if (d.exact_ || d.prec_ >= k) return true;
  throw precision_error("congruence mod pi^" + std::to_string(k) +
                        " indeterminate at precision pi^" + std::to_string(d.prec_));
}

std::string LocalElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    bool needs_parens = cs.find('+') != std::string::npos;
    bool unit_coeff = (cs == "1");
    if (e == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit_coeff) {
      os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    }
    os << "pi";
    if (e != 1) {
      if (e < 0)
        os << "^(" << e << ")";
      else
        os << "^" << e;
    }
  }
  if (!exact_) {
    if (!first) os << " + ";
    os << "O(pi^" << prec_ << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const FqSpecPtr& spec;

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_word(const std::string& w) {
    skip_ws();
    return s.compare(i, w.size(), w) == 0;
  }
  bool eat_word(const std::string& w) {
    if (peek_word(w)) {
      i += w.size();
      return true;
    }
    return false;
  }
  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    skip_ws();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
      throw domain_error("expected integer at position " + std::to_string(i) +
                         " in '" + s + "'");
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  long parse_exponent() {
    skip_ws();
    if (eat('(')) {
      long v = parse_int();
      if (!eat(')')) throw domain_error("missing ')' in exponent");
      return v;
    }
    return parse_int();
  }
  // g-polynomial without surrounding parens: e.g. "2g^2+g+1"
  FqElement parse_gpoly_body(bool stop_at_pi) {
    FqElement acc(spec, 0L);
    bool any = false;
    for (;;) {
      skip_ws();
      bool neg = false;
      if (any) {
        if (eat('+')) {
        } else if (eat('-')) {
          neg = true;
        } else
          break;
      } else if (eat('-')) {
        neg = true;
      }
      skip_ws();
      if (stop_at_pi && peek_word("pi")) {
        if (!any) throw domain_error("unexpected 'pi' in coefficient");
        // back out the consumed sign: not possible; disallow
        throw domain_error("coefficient/pi separator must be '*'");
      }
      long c = 1;
      bool have_num = false;
      if (i < s.size() && std::isdigit((unsigned char)s[i])) {
        c = parse_int();
        have_num = true;
      }
      skip_ws();
      // optional '*' between the numeral and g ("2*g"); '*pi' stays with
      // the caller as the coefficient/uniformiser separator
      if (have_num && i + 1 < s.size() && s[i] == '*') {
        size_t j = i + 1;
        while (j < s.size() && std::isspace((unsigned char)s[j])) j++;
        if (j < s.size() && s[j] == 'g') i = j;
      }
      long e = 0;
      if (i < s.size() && s[i] == 'g') {
        ++i;
        e = 1;
        if (eat('^')) e = parse_exponent();
      } else if (!have_num) {
        throw domain_error("expected coefficient term at position " + std::to_string(i));
      }
      std::vector<int> mono((size_t)e + 1, 0);
      mono[(size_t)e] = 1;
      FqElement term = FqElement(spec, neg ? -c : c) * FqElement(spec, mono);
      acc = acc + term;
      any = true;
      skip_ws();
      if (i < s.size() && (s[i] == '*' || s[i] == ')')) break;
      if (stop_at_pi) break;  // bare integer / single monomial coefficient
    }
    return acc;
  }
};

}  // namespace

LocalElement parse_local_element(const FqSpecPtr& spec, const std::string& text) {
  Parser P{text, 0, spec};
  LocalElement acc = LocalElement::exact_zero(spec);
  bool inexact = false;
  long prec = 0;
  bool first = true;
  for (;;) {
    P.skip_ws();
    if (P.i >= text.size()) break;
    bool neg = false;
    if (!first) {
      if (P.eat('+')) {
      } else if (P.eat('-')) {
        neg = true;
      } else {
        throw domain_error("expected '+' at position " + std::to_string(P.i) + " in '" +
                           text + "'");
      }
    } else if (P.eat('-')) {
      neg = true;
    }
    first = false;
    P.skip_ws();
    if (P.eat_word("O(")) {
      if (!P.eat_word("pi")) throw domain_error("expected pi in O(...)");
      long e = P.eat('^') ? P.parse_exponent() : 1;
      if (!P.eat(')')) throw domain_error("missing ')' in O(...)");
      inexact = true;
      prec = e;
      continue;
    }
    FqElement coeff(spec, 1L);
    bool have_coeff = false;
    if (P.eat('(')) {
      coeff = P.parse_gpoly_body(false);
      if (!P.eat(')')) throw domain_error("missing ')' in coefficient");
      have_coeff = true;
    } else if (!P.peek_word("pi")) {
      coeff = P.parse_gpoly_body(true);
      have_coeff = true;
    }
    if (neg) coeff = -coeff;
    long e = 0;
    P.skip_ws();
    bool has_pi = false;
    if (have_coeff) {
      if (P.eat('*')) {
        if (!P.eat_word("pi")) throw domain_error("expected pi after '*'");
        has_pi = true;
      }
    } else {
      if (!P.eat_word("pi")) throw domain_error("expected term");
      has_pi = true;
    }
    if (has_pi) {
      e = P.eat('^') ? P.parse_exponent() : 1;
    }
    acc = acc + LocalElement::monomial(spec, coeff, e);
  }
  if (inexact) {
    LocalElement tail = LocalElement::zero_to_precision(spec, prec);
    acc = acc + tail;
  }
  return acc;
}

ProjPoint::ProjPoint(LocalElement a, LocalElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (!same_field(a_.spec(), b_.spec())) throw domain_error("field mismatch");
  const FqSpecPtr& spec = a_.spec();
  if (a_.is_exact_zero() && b_.is_exact_zero())
    throw domain_error("projective point (0:0)");
  if (b_.is_exact_zero()) {  // infinity
    a_ = LocalElement::from_int(spec, 1);
    return;
  }
  if (a_.is_exact_zero()) {
    b_ = LocalElement::from_int(spec, 1);
    return;
  }
  auto va = a_.valuation();
  auto vb = b_.valuation();
  if (*va >= *vb) {
    a_ = a_ / b_;
    b_ = LocalElement::from_int(spec, 1);
  } else {
    b_ = b_ / a_;
    a_ = LocalElement::from_int(spec, 1);
  }
}

ProjPoint ProjPoint::infinity(const FqSpecPtr& spec) {
  return ProjPoint(LocalElement::from_int(spec, 1), LocalElement::exact_zero(spec));
}

ProjPoint ProjPoint::finite(const LocalElement& z) {
  return ProjPoint(z, LocalElement::from_int(z.spec(), 1));
}

bool ProjPoint::is_infinity() const { return b_.is_exact_zero(); }

bool ProjPoint::operator==(const ProjPoint& o) const {
  // cross-multiplication is well-defined on classes
  LocalElement lhs = a_ * o.b_;
  LocalElement rhs = b_ * o.a_;
  return lhs == rhs;
}

std::string ProjPoint::to_string() const {
  if (is_infinity()) return "inf";
  return (a_ / b_).to_string();
}

}  // namespace mumford
