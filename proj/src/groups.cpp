#include "mumford/groups.hpp"

#include <numeric>
#include <sstream>

namespace mumford {

namespace {

long long ll_pow(long p, int t) {
  long long r = 1;
  for (int i = 0; i < t; ++i) {
    if (r > (1LL << 62) / p) throw domain_error("p^t too large");
    r *= p;
  }
  return r;
}

bool divides(long a, long long b) { return a != 0 && b % a == 0; }

}  // namespace

GroupTag GroupTag::trivial(long p) { return make_tag(GroupKind::Trivial, p, 1, 0); }
GroupTag GroupTag::cyclic(long p, long n) { return make_tag(GroupKind::Cyclic, p, n, 0); }
GroupTag GroupTag::dihedral(long p, long n) {
  return make_tag(GroupKind::Dihedral, p, n, 0);
}
GroupTag GroupTag::elem_abelian(long p, int t) {
  return make_tag(GroupKind::ElemAbelian, p, 1, t);
}
GroupTag GroupTag::borel(long p, int t, long n) {
  return make_tag(GroupKind::Borel, p, n, t);
}
GroupTag GroupTag::tetra(long p) { return make_tag(GroupKind::Tetra, p, 1, 0); }
GroupTag GroupTag::octa(long p) { return make_tag(GroupKind::Octa, p, 1, 0); }
GroupTag GroupTag::icosa(long p) { return make_tag(GroupKind::Icosa, p, 1, 0); }
GroupTag GroupTag::pgl2(long p, int t) { return make_tag(GroupKind::PGL2, p, 1, t); }
GroupTag GroupTag::psl2(long p, int t) { return make_tag(GroupKind::PSL2, p, 1, t); }

bool GroupTag::operator==(const GroupTag& o) const {
  return kind == o.kind && p == o.p && n == o.n && t == o.t;
}

GroupTag make_tag(GroupKind kind, long p, long n, int t) {
  GroupTag g;
  g.p = p;
  switch (kind) {
    case GroupKind::Trivial:
      g.kind = GroupKind::Trivial;
      g.n = 1;
      g.t = 0;
      return g;
    case GroupKind::Cyclic:
      if (n < 1) throw domain_error("cyclic order must be positive");
      if (n == 1) return make_tag(GroupKind::Trivial, p, 1, 0);
      if (n == p) return make_tag(GroupKind::ElemAbelian, p, 1, 1);
      if (n % p == 0) throw domain_error("Z_n with p | n is not in the catalog");
      g.kind = GroupKind::Cyclic;
      g.n = n;
      g.t = 0;
      return g;
    case GroupKind::Dihedral:
      if (n < 1) throw domain_error("dihedral parameter must be positive");
      if (n == 1) return make_tag(GroupKind::Cyclic, p, 2, 0);
      if (n % p == 0) throw domain_error("D_n with p | n is not in the catalog");
      if (p == 2 && n % 2 == 0) throw domain_error("D_n in char 2 requires odd n");
      g.kind = GroupKind::Dihedral;
      g.n = n;
      g.t = 0;
      return g;
    case GroupKind::ElemAbelian:
      if (t < 0) throw domain_error("negative rank");
      if (t == 0) return make_tag(GroupKind::Trivial, p, 1, 0);
      g.kind = GroupKind::ElemAbelian;
      g.n = 1;
      g.t = t;
      return g;
    case GroupKind::Borel:
      if (t < 0 || n < 1) throw domain_error("bad Borel parameters");
      if (t == 0) return make_tag(GroupKind::Cyclic, p, n, 0);
      if (n == 1) return make_tag(GroupKind::ElemAbelian, p, 1, t);
      if (!divides(n, ll_pow(p, t) - 1))
        throw domain_error("B(t,n) requires n | p^t - 1");
      g.kind = GroupKind::Borel;
      g.n = n;
      g.t = t;
      return g;
    case GroupKind::Tetra:
      if (p == 2 || p == 3) throw domain_error("T does not occur in characteristic 2 or 3");
      g.kind = kind;
      g.n = 1;
      g.t = 0;
      return g;
    case GroupKind::Octa:
      if (p == 2 || p == 3) throw domain_error("O does not occur in characteristic 2 or 3");
      g.kind = kind;
      g.n = 1;
      g.t = 0;
      return g;
    case GroupKind::Icosa:
      if (p == 2 || p == 5) throw domain_error("I does not occur in characteristic 2 or 5");
      g.kind = kind;
      g.n = 1;
      g.t = 0;
      return g;
    case GroupKind::PGL2:
    case GroupKind::PSL2:
      if (t < 1) throw domain_error("P?L(2, p^t) requires t >= 1");
      if (kind == GroupKind::PSL2 && p == 2) kind = GroupKind::PGL2;  // equal groups
      g.kind = kind;
      g.n = 1;
      g.t = t;
      return g;
  }
  throw domain_error("unknown group kind");
}

std::string GroupTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::Trivial: return "1";
    case GroupKind::Cyclic: os << "Zn(" << n << ")"; break;
    case GroupKind::Dihedral: os << "Dn(" << n << ")"; break;
    case GroupKind::ElemAbelian: os << "E(" << t << ")"; break;
    case GroupKind::Borel: os << "B(" << t << "," << n << ")"; break;
    case GroupKind::Tetra: return "T";
    case GroupKind::Octa: return "O";
    case GroupKind::Icosa: return "I";
    case GroupKind::PGL2: os << "PGL2(" << t << ")"; break;
    case GroupKind::PSL2: os << "PSL2(" << t << ")"; break;
  }
  return os.str();
}

GroupTag parse_tag(const std::string& s, long p) {
  auto params = [&s]() {
    size_t l = s.find('('), r = s.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
      throw domain_error("malformed group tag: " + s);
    std::vector<long> out;
    std::string body = s.substr(l + 1, r - l - 1);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) out.push_back(std::stol(piece));
    return out;
  };
  if (s == "1") return GroupTag::trivial(p);
  if (s == "T") return GroupTag::tetra(p);
  if (s == "O") return GroupTag::octa(p);
  if (s == "I") return GroupTag::icosa(p);
  if (s.rfind("Zn(", 0) == 0) return GroupTag::cyclic(p, params()[0]);
  if (s.rfind("Dn(", 0) == 0) return GroupTag::dihedral(p, params()[0]);
  if (s.rfind("E(", 0) == 0) return GroupTag::elem_abelian(p, (int)params()[0]);
  if (s.rfind("B(", 0) == 0) {
    auto v = params();
    if (v.size() != 2) throw domain_error("B(t,n) takes two parameters: " + s);
    return GroupTag::borel(p, (int)v[0], v[1]);
  }
  if (s.rfind("PGL2(", 0) == 0) return GroupTag::pgl2(p, (int)params()[0]);
  if (s.rfind("PSL2(", 0) == 0) return GroupTag::psl2(p, (int)params()[0]);
  throw domain_error("unknown group tag: " + s);
}

Int group_order(const GroupTag& g) {
  Int q;
  switch (g.kind) {
    case GroupKind::Trivial: return 1;
    case GroupKind::Cyclic: return g.n;
    case GroupKind::Dihedral: return 2 * Int(g.n);
    case GroupKind::ElemAbelian: return int_pow(g.p, g.t);
    case GroupKind::Borel: return int_pow(g.p, g.t) * g.n;
    case GroupKind::Tetra: return 12;
    case GroupKind::Octa: return 24;
    case GroupKind::Icosa: return 60;
    case GroupKind::PGL2:
      q = int_pow(g.p, g.t);
      return q * (q * q - 1);
    case GroupKind::PSL2:
      q = int_pow(g.p, g.t);
      return q * (q * q - 1) / (g.p == 2 ? 1 : 2);
  }
  throw domain_error("unknown group kind");
}

Int group_order_p_part(const GroupTag& g) {
  switch (g.kind) {
    case GroupKind::ElemAbelian:
    case GroupKind::Borel:
    case GroupKind::PGL2:
    case GroupKind::PSL2:
      return int_pow(g.p, g.t);
    case GroupKind::Dihedral:
      return g.p == 2 ? 2 : 1;
    default:
      return 1;
  }
}

long prime_to_p_part(long n, long p) {
  while (n % p == 0) n /= p;
  return n;
}

std::vector<BranchDatum> branch_data(const GroupTag& g) {
  long long q;
  switch (g.kind) {
    case GroupKind::Trivial:
      return {};
    case GroupKind::Cyclic:
      return {{g.n, 1}, {g.n, 1}};
    case GroupKind::Dihedral:
      if (g.p == 2) return {{2, 2}, {g.n, 1}};
      return {{2, 1}, {2, 1}, {g.n, 1}};
    case GroupKind::ElemAbelian: {
      Int e = int_pow(g.p, g.t);
      return {{e, e}};
    }
    case GroupKind::Borel: {
      Int ep = int_pow(g.p, g.t);
      return {{ep * g.n, ep}, {g.n, 1}};
    }
    case GroupKind::Tetra:
      return {{2, 1}, {3, 1}, {3, 1}};
    case GroupKind::Octa:
      // the branch indices of the degree-24 cover are (2, 3, 4)
      return {{2, 1}, {3, 1}, {4, 1}};
    case GroupKind::Icosa:
      if (g.p == 3) return {{6, 3}, {5, 1}};
      return {{2, 1}, {3, 1}, {5, 1}};
    case GroupKind::PGL2: {
      q = ll_pow(g.p, g.t);
      Int ep = q;
      return {{ep * (q - 1), ep}, {q + 1, 1}};
    }
    case GroupKind::PSL2: {
      q = ll_pow(g.p, g.t);
      long long h = (g.p == 2) ? 1 : 2;
      Int ep = q;
      return {{ep * ((q - 1) / h), ep}, {(q + 1) / h, 1}};
    }
  }
  throw domain_error("unknown group kind");
}

bool is_maximal_cyclic(long n, const GroupTag& amb) {
  if (n < 1) return false;
  long long q;
  switch (amb.kind) {
    case GroupKind::Trivial:
      return n == 1;
    case GroupKind::Cyclic:
      return n == amb.n;
    case GroupKind::Dihedral:
      // the rotation subgroup, or a reflection
      return n == amb.n || n == 2;
    case GroupKind::ElemAbelian:
      return n == amb.p;
    case GroupKind::Borel:
      return n == amb.n || n == amb.p;
    case GroupKind::Tetra:
      return n == 2 || n == 3;
    case GroupKind::Octa:
      return n == 2 || n == 3 || n == 4;
    case GroupKind::Icosa:
      return n == 2 || n == 3 || n == 5;
    case GroupKind::PGL2:
      q = ll_pow(amb.p, amb.t);
      return n == q - 1 || n == q + 1 || n == amb.p;
    case GroupKind::PSL2:
      q = ll_pow(amb.p, amb.t);
      if (amb.p == 2) return n == q - 1 || n == q + 1 || n == 2;
      return n == (q - 1) / 2 || n == (q + 1) / 2 || n == amb.p;
  }
  return false;
}

bool admissible_edge_tag(const GroupTag& g) {
  switch (g.kind) {
    case GroupKind::Trivial:
    case GroupKind::Cyclic:
    case GroupKind::ElemAbelian:
    case GroupKind::Borel:
      return true;
    default:
      return false;
  }
}

bool tag_is_cyclic(const GroupTag& g) {
  switch (g.kind) {
    case GroupKind::Cyclic:
      return true;
    case GroupKind::ElemAbelian:
      return g.t == 1;
    default:
      return false;
  }
}

bool tag_contains(const GroupTag& big, const GroupTag& small) {
  if (big.p != small.p) return false;
  long p = big.p;
  long long q = (big.kind == GroupKind::PGL2 || big.kind == GroupKind::PSL2)
                    ? ll_pow(p, big.t)
                    : 0;
  auto cyclic_in = [&](long n) -> bool {
    if (n == 1) return true;
    switch (big.kind) {
      case GroupKind::Trivial: return false;
      case GroupKind::Cyclic: return big.n % n == 0;
      case GroupKind::Dihedral: return big.n % n == 0 || n == 2;
      case GroupKind::ElemAbelian: return n == p;
      case GroupKind::Borel: return big.n % n == 0 || n == p;
      case GroupKind::Tetra: return n == 2 || n == 3;
      case GroupKind::Octa: return n == 2 || n == 3 || n == 4;
      case GroupKind::Icosa: return n == 2 || n == 3 || n == 5;
      case GroupKind::PGL2:
        return (q - 1) % n == 0 || (q + 1) % n == 0 || n == p;
      case GroupKind::PSL2:
        if (p == 2) return (q - 1) % n == 0 || (q + 1) % n == 0 || n == 2;
        return ((q - 1) / 2) % n == 0 || ((q + 1) / 2) % n == 0 || n == p;
    }
    return false;
  };
  switch (small.kind) {
    case GroupKind::Trivial:
      return true;
    case GroupKind::Cyclic:
      return cyclic_in(small.n);
    case GroupKind::ElemAbelian:
      switch (big.kind) {
        case GroupKind::ElemAbelian:
        case GroupKind::Borel:
          return small.t <= big.t;
        case GroupKind::PGL2:
        case GroupKind::PSL2:
          return small.t <= big.t;
        case GroupKind::Dihedral:
          return p == 2 && small.t == 1;
        case GroupKind::Icosa:
          return p == 3 && small.t == 1;
        default:
          return false;
      }
    case GroupKind::Borel:
      switch (big.kind) {
        case GroupKind::Borel:
          return small.t <= big.t && big.n % small.n == 0;
        case GroupKind::PGL2:
          return small.t <= big.t && (q - 1) % small.n == 0;
        case GroupKind::PSL2:
          return small.t <= big.t &&
                 ((p == 2 ? q - 1 : (q - 1) / 2) % small.n == 0);
        case GroupKind::Icosa:
          return p == 3 && small.t == 1 && small.n == 2;
        default:
          return false;
      }
    case GroupKind::Dihedral:
      switch (big.kind) {
        case GroupKind::Dihedral:
          return big.n % small.n == 0;
        case GroupKind::Tetra:
          return small.n == 2;
        case GroupKind::Octa:
          return small.n <= 4 && (small.n == 2 || small.n == 3 || small.n == 4);
        case GroupKind::Icosa:
          return small.n == 2 || small.n == 3 || small.n == 5;
        case GroupKind::PGL2:
          return (q - 1) % small.n == 0 || (q + 1) % small.n == 0;
        case GroupKind::PSL2:
          if (p == 2) return (q - 1) % small.n == 0 || (q + 1) % small.n == 0;
          return ((q - 1) / 2) % small.n == 0 || ((q + 1) / 2) % small.n == 0;
        default:
          return false;
      }
    case GroupKind::Tetra:
      return big.kind == GroupKind::Tetra || big.kind == GroupKind::Octa ||
             big.kind == GroupKind::Icosa || big.kind == GroupKind::PGL2 ||
             big.kind == GroupKind::PSL2;
    case GroupKind::Octa:
      return big.kind == GroupKind::Octa || big.kind == GroupKind::PGL2;
    case GroupKind::Icosa:
      return big.kind == GroupKind::Icosa || big.kind == GroupKind::PGL2 ||
             big.kind == GroupKind::PSL2;
    case GroupKind::PGL2:
      return (big.kind == GroupKind::PGL2 && small.t <= big.t && big.t % small.t == 0);
    case GroupKind::PSL2:
      return ((big.kind == GroupKind::PGL2 || big.kind == GroupKind::PSL2) &&
              small.t <= big.t && big.t % small.t == 0);
  }
  return false;
}

std::vector<Mat2> embed(const GroupTag& g, const FqSpecPtr& spec) {
  if (g.p != spec->p) throw domain_error("tag characteristic differs from session field");
  std::vector<Mat2> gens;
  auto add_torus = [&](long n) {
    LocalElement zeta = LocalElement::from_fq(spec, root_of_unity(spec, n));
    gens.push_back(Mat2::diag(zeta, LocalElement::from_int(spec, 1)));
  };
  auto add_translations = [&](int t) {
    if (t > spec->t)
      throw domain_error("E_t does not embed: rank exceeds session field degree");
    for (int i = 0; i < t; ++i) {
      std::vector<int> mono((size_t)i + 1, 0);
      mono[(size_t)i] = 1;
      FqElement b(spec, mono);
      gens.push_back(Mat2::translation(LocalElement::from_fq(spec, b)));
    }
  };
  switch (g.kind) {
    case GroupKind::Trivial:
      gens.push_back(Mat2::identity(spec));
      return gens;
    case GroupKind::Cyclic:
      add_torus(g.n);
      return gens;
    case GroupKind::Dihedral:
      add_torus(g.n);
      gens.push_back(Mat2::inversion(spec));
      return gens;
    case GroupKind::ElemAbelian:
      add_translations(g.t);
      return gens;
    case GroupKind::Borel:
      add_translations(g.t);
      add_torus(g.n);
      return gens;
    case GroupKind::PGL2:
      if (g.t != spec->t)
        throw domain_error("embed supports PGL2(t) only over F_(p^t) itself");
      add_translations(g.t);
      if (spec->q() > 2) add_torus(spec->q() - 1);
      gens.push_back(Mat2::inversion(spec));
      return gens;
    case GroupKind::PSL2:
      if (g.t != spec->t)
        throw domain_error("embed supports PSL2(t) only over F_(p^t) itself");
      add_translations(g.t);
      gens.push_back(Mat2::inversion(spec));
      return gens;
    default:
      throw domain_error("embed is not implemented for tag " + g.to_string());
  }
}

}  // namespace mumford
