#include <mumford/cases.hpp>

#include <algorithm>

#include <json.hpp>

#include <mumford/errors.hpp>

namespace mumford {

namespace {

long long ll_pow(long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Params {
  long p;
  int t;
  long long q;
  long half;  // 2 when the PSL convention halves the torus orders
  long nminus, nplus;
};

Params core_params(const CaseId& id) {
  Params pr;
  pr.p = id.p;
  pr.t = id.t;
  if (!is_prime(id.p)) throw domain_error("p must be prime");
  if (id.t < 1) throw domain_error("t must be >= 1");
  pr.q = ll_pow(id.p, id.t);
  pr.half = (id.psl && id.p != 2) ? 2 : 1;
  pr.nminus = (pr.q - 1) / pr.half;
  pr.nplus = (pr.q + 1) / pr.half;
  return pr;
}

void need(bool cond, const std::string& what) {
  if (!cond) throw domain_error("case parameter constraint violated: " + what);
}

int require_set(int value, const std::string& name) {
  if (value < 0) throw domain_error("missing case parameter " + name);
  return value;
}

// builds A-type chains for both the P?L core and the icosahedral (primed,
// p = 3) core, where P?L(2,q), t, n+, n- read I, 1, 5, 2
struct ACore {
  GroupTag core;       // P?L(2,q) or I
  GroupTag borel_edge; // B(t, n-) or B(1, 2)
  GroupTag torus;      // Z_{n+} or Z_5
  long p;
  int t;               // tower step
  long nminus, nplus;
};

ACore a_core(const CaseId& id, bool primed) {
  ACore c;
  c.p = id.p;
  if (primed) {
    need(id.p == 3, "primed A-cases require p = 3");
    c.core = GroupTag::icosa(3);
    c.t = 1;
    c.nminus = 2;
    c.nplus = 5;
  } else {
    Params pr = core_params(id);
    c.core = id.psl ? GroupTag::psl2(id.p, id.t) : GroupTag::pgl2(id.p, id.t);
    c.t = pr.t;
    c.nminus = pr.nminus;
    c.nplus = pr.nplus;
  }
  c.borel_edge = make_tag(GroupKind::Borel, c.p, c.nminus, c.t);
  c.torus = make_tag(GroupKind::Cyclic, c.p, c.nplus, 0);
  return c;
}

GroupTag tower(const ACore& c, int ti, long n, const std::string& name) {
  need(ti >= 1, name + " >= 1");
  need(ti % c.t == 0, "t | " + name);
  return make_tag(GroupKind::Borel, c.p, n, ti);
}

}  // namespace

std::string family_name(CaseFamily f) {
  switch (f) {
    case CaseFamily::A1: return "A1";
    case CaseFamily::A2: return "A2";
    case CaseFamily::A3: return "A3";
    case CaseFamily::A4: return "A4";
    case CaseFamily::A5: return "A5";
    case CaseFamily::A1p: return "A1'";
    case CaseFamily::A2p: return "A2'";
    case CaseFamily::A3p: return "A3'";
    case CaseFamily::A4p: return "A4'";
    case CaseFamily::A5p: return "A5'";
    case CaseFamily::A1pp: return "A1''";
    case CaseFamily::A2pp: return "A2''";
    case CaseFamily::A3pp: return "A3''";
    case CaseFamily::B: return "B";
    case CaseFamily::C: return "C";
    case CaseFamily::D: return "D";
    case CaseFamily::E: return "E";
    case CaseFamily::F1: return "F1";
    case CaseFamily::F2: return "F2";
    case CaseFamily::F1p: return "F1'";
  }
  return "?";
}

std::string CaseId::to_string() const {
  std::string s = family_name(family) + " p=" + std::to_string(p) +
                  " t=" + std::to_string(t);
  auto add = [&](const char* name, long v) {
    if (v >= 0) s += std::string(" ") + name + "=" + std::to_string(v);
  };
  add("t1", t1);
  add("t2", t2);
  add("t3", t3);
  add("t4", t4);
  add("t5", t5);
  add("n", n);
  if (psl) s += " PSL";
  if (q1_chain) s += " q1=chain";
  if (q2_chain) s += " q2=chain";
  return s;
}

CaseId parse_case(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw domain_error("empty case descriptor");
  CaseId id;
  static const std::vector<std::pair<std::string, CaseFamily>> names = {
      {"A1''", CaseFamily::A1pp}, {"A2''", CaseFamily::A2pp},
      {"A3''", CaseFamily::A3pp}, {"A1'", CaseFamily::A1p},
      {"A2'", CaseFamily::A2p},   {"A3'", CaseFamily::A3p},
      {"A4'", CaseFamily::A4p},   {"A5'", CaseFamily::A5p},
      {"F1'", CaseFamily::F1p},   {"A1", CaseFamily::A1},
      {"A2", CaseFamily::A2},     {"A3", CaseFamily::A3},
      {"A4", CaseFamily::A4},     {"A5", CaseFamily::A5},
      {"B", CaseFamily::B},       {"C", CaseFamily::C},
      {"D", CaseFamily::D},       {"E", CaseFamily::E},
      {"F1", CaseFamily::F1},     {"F2", CaseFamily::F2},
  };
  bool found = false;
  for (const auto& [name, fam] : names)
    if (tokens[0] == name) {
      id.family = fam;
      found = true;
      break;
    }
  if (!found) throw domain_error("unknown case family " + tokens[0]);
  for (size_t i = 1; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "PGL") {
      id.psl = false;
      continue;
    }
    if (tok == "PSL") {
      id.psl = true;
      continue;
    }
    if (tok == "q1=chain") {
      id.q1_chain = true;
      continue;
    }
    if (tok == "q2=chain") {
      id.q2_chain = true;
      continue;
    }
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw domain_error("bad case token " + tok + " (want key=value)");
    std::string key = tok.substr(0, eq);
    long value;
    try {
      value = std::stol(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw domain_error("bad value in case token " + tok);
    }
    if (key == "p") id.p = value;
    else if (key == "t") id.t = (int)value;
    else if (key == "t1") id.t1 = (int)value;
    else if (key == "t2") id.t2 = (int)value;
    else if (key == "t3") id.t3 = (int)value;
    else if (key == "t4") id.t4 = (int)value;
    else if (key == "t5") id.t5 = (int)value;
    else if (key == "n") id.n = value;
    else throw domain_error("unknown case parameter " + key);
  }
  if (id.p == 0) throw domain_error("case descriptor needs p=<prime>");
  return id;
}

GroupTree build_case(const CaseId& id) {
  GroupTree tree;
  auto vertex = [&](const GroupTag& tag) {
    int vid = (int)tree.vertices.size();
    tree.vertices.push_back({vid, tag});
    return vid;
  };
  auto edge = [&](int a, int b, const GroupTag& tag) {
    tree.edges.push_back({a, b, tag});
  };
  auto end = [&](int at, const GroupTag& tag) { tree.ends.push_back({at, tag}); };
  long p = id.p;
  if (!is_prime(p)) throw domain_error("p must be prime");

  switch (id.family) {
    case CaseFamily::A1:
    case CaseFamily::A1p: {
      ACore c = a_core(id, id.family == CaseFamily::A1p);
      GroupTag pendant = tower(c, require_set(id.t1, "t1"), c.nminus, "t1");
      int v0 = vertex(c.core), v1 = vertex(pendant);
      edge(v0, v1, c.borel_edge);
      end(v1, pendant);
      end(v0, c.torus);
      break;
    }
    case CaseFamily::A2:
    case CaseFamily::A2p: {
      ACore c = a_core(id, id.family == CaseFamily::A2p);
      // B(t2, n+) needs n+ | p^{t2} - 1; make_tag enforces it
      GroupTag left = make_tag(GroupKind::Borel, p, c.nplus, require_set(id.t2, "t2"));
      GroupTag right = tower(c, require_set(id.t1, "t1"), c.nminus, "t1");
      int vl = vertex(left), v0 = vertex(c.core), vr = vertex(right);
      edge(vl, v0, c.torus);
      edge(v0, vr, c.borel_edge);
      end(vl, left);
      end(vr, right);
      break;
    }
    case CaseFamily::A3:
    case CaseFamily::A3p: {
      ACore c = a_core(id, id.family == CaseFamily::A3p);
      GroupTag left = tower(c, require_set(id.t3, "t3"), c.nminus, "t3");
      GroupTag right = tower(c, require_set(id.t1, "t1"), c.nminus, "t1");
      int vl = vertex(left), c1 = vertex(c.core), c2 = vertex(c.core),
          vr = vertex(right);
      edge(vl, c1, c.borel_edge);
      edge(c1, c2, c.torus);
      edge(c2, vr, c.borel_edge);
      end(vl, left);
      end(vr, right);
      break;
    }
    case CaseFamily::A4:
    case CaseFamily::A4p: {
      ACore c = a_core(id, id.family == CaseFamily::A4p);
      GroupTag left = make_tag(GroupKind::Borel, p, c.nplus, require_set(id.t4, "t4"));
      int vl = vertex(left), v0 = vertex(c.core);
      edge(vl, v0, c.torus);
      end(vl, left);
      end(v0, c.borel_edge);
      break;
    }
    case CaseFamily::A5:
    case CaseFamily::A5p: {
      ACore c = a_core(id, id.family == CaseFamily::A5p);
      GroupTag left = tower(c, require_set(id.t5, "t5"), c.nminus, "t5");
      int vl = vertex(left), c1 = vertex(c.core), c2 = vertex(c.core);
      edge(vl, c1, c.borel_edge);
      edge(c1, c2, c.torus);
      end(vl, left);
      end(c2, c.borel_edge);
      break;
    }
    case CaseFamily::A1pp: {
      need(p == 2, "double-primed A-cases require p = 2");
      need(id.n >= 3 && id.n % 2 == 1, "n odd >= 3");
      GroupTag e2 = make_tag(GroupKind::ElemAbelian, 2, 1, require_set(id.t2, "t2"));
      GroupTag dn = make_tag(GroupKind::Dihedral, 2, id.n, 0);
      GroupTag b1 = make_tag(GroupKind::Borel, 2, id.n, require_set(id.t1, "t1"));
      int vl = vertex(e2), v0 = vertex(dn), vr = vertex(b1);
      edge(vl, v0, make_tag(GroupKind::ElemAbelian, 2, 1, 1));
      // Z_n is the only edge tag on this side that satisfies the mu-Hurwitz
      // consistency identity and the Borel-chain pattern of the sibling cases
      edge(v0, vr, make_tag(GroupKind::Cyclic, 2, id.n, 0));
      end(vl, e2);
      end(vr, b1);
      break;
    }
    case CaseFamily::A2pp: {
      need(p == 2, "double-primed A-cases require p = 2");
      need(id.n >= 3 && id.n % 2 == 1, "n odd >= 3");
      GroupTag e2 = make_tag(GroupKind::ElemAbelian, 2, 1, require_set(id.t2, "t2"));
      GroupTag e1 = make_tag(GroupKind::ElemAbelian, 2, 1, require_set(id.t1, "t1"));
      GroupTag dn = make_tag(GroupKind::Dihedral, 2, id.n, 0);
      int vl = vertex(e2), d1 = vertex(dn), d2 = vertex(dn), vr = vertex(e1);
      edge(vl, d1, make_tag(GroupKind::ElemAbelian, 2, 1, 1));
      edge(d1, d2, make_tag(GroupKind::Cyclic, 2, id.n, 0));
      edge(d2, vr, make_tag(GroupKind::ElemAbelian, 2, 1, 1));
      end(vl, e2);
      end(vr, e1);
      break;
    }
    case CaseFamily::A3pp: {
      need(p == 2, "double-primed A-cases require p = 2");
      Params pr = core_params(id);
      GroupTag e2 = make_tag(GroupKind::ElemAbelian, 2, 1, require_set(id.t2, "t2"));
      GroupTag dplus = make_tag(GroupKind::Dihedral, 2, pr.nplus, 0);
      GroupTag core = GroupTag::pgl2(2, id.t);
      GroupTag borel_edge = make_tag(GroupKind::Borel, 2, pr.nminus, id.t);
      int t1 = require_set(id.t1, "t1");
      need(t1 >= 1 && t1 % id.t == 0, "t | t1");
      GroupTag right = make_tag(GroupKind::Borel, 2, pr.nminus, t1);
      int vl = vertex(e2), vd = vertex(dplus), v0 = vertex(core), vr = vertex(right);
      edge(vl, vd, make_tag(GroupKind::ElemAbelian, 2, 1, 1));
      edge(vd, v0, make_tag(GroupKind::Cyclic, 2, pr.nplus, 0));
      edge(v0, vr, borel_edge);
      end(vl, e2);
      end(vr, right);
      break;
    }
    case CaseFamily::B: {
      need(id.n >= 2, "n >= 2");
      GroupTag left = make_tag(GroupKind::Borel, p, id.n, require_set(id.t1, "t'1"));
      GroupTag right = make_tag(GroupKind::Borel, p, id.n, require_set(id.t2, "t'2"));
      int vl = vertex(left), vr = vertex(right);
      edge(vl, vr, make_tag(GroupKind::Cyclic, p, id.n, 0));
      end(vl, left);
      end(vr, right);
      break;
    }
    case CaseFamily::C: {
      GroupTag left = make_tag(GroupKind::ElemAbelian, p, 1, require_set(id.t3, "t'3"));
      GroupTag right = make_tag(GroupKind::ElemAbelian, p, 1, require_set(id.t4, "t'4"));
      int vl = vertex(left), vr = vertex(right);
      edge(vl, vr, GroupTag::trivial(p));
      end(vl, left);
      end(vr, right);
      break;
    }
    case CaseFamily::D:
    case CaseFamily::E:
      throw domain_error(
          "cases D and E are segment constraints (trivial edge at the center, "
          "or a classical non-dihedral center), not parameterized amalgams; "
          "their mu >= 1/12 check lives in the segment tables");
    case CaseFamily::F1:
    case CaseFamily::F1p: {
      bool primed = id.family == CaseFamily::F1p;
      need(p != 2, "F-cases require p != 2");
      ACore c = a_core(id, primed);
      GroupTag dplus = make_tag(GroupKind::Dihedral, p, c.nplus, 0);
      GroupTag left = tower(c, require_set(id.t3, "t3"), c.nminus, "t3");
      int vl = vertex(left), v0 = vertex(c.core), vd = vertex(dplus);
      edge(vl, v0, c.borel_edge);
      edge(v0, vd, c.torus);
      end(vl, left);
      GroupTag z2 = make_tag(GroupKind::Cyclic, p, 2, 0);
      auto q_branch = [&](int ti, bool chain) {
        if (chain) {
          // (F1') branch through a PSL(2,3) vertex; the consistent
          // continuation is along its Borel, which is E_1 for q = 3
          need(primed, "chain Q-branches only occur in F1'");
          need(ti >= 1, "chain Q-branch needs t_i >= 1");
          GroupTag psl = GroupTag::psl2(3, 1);
          GroupTag et = make_tag(GroupKind::ElemAbelian, 3, 1, ti);
          int vp = vertex(psl), ve = vertex(et);
          edge(vd, vp, z2);
          edge(vp, ve, make_tag(GroupKind::ElemAbelian, 3, 1, 1));
          end(ve, et);
        } else if (ti == 0) {
          end(vd, z2);
        } else {
          GroupTag qt = make_tag(GroupKind::Borel, p, 2, ti);
          int vq = vertex(qt);
          edge(vd, vq, z2);
          end(vq, qt);
        }
      };
      q_branch(require_set(id.t1, "t1"), id.q1_chain);
      q_branch(require_set(id.t2, "t2"), id.q2_chain);
      break;
    }
    case CaseFamily::F2: {
      need(p != 2, "F-cases require p != 2");
      need(id.n >= 2, "n >= 2");
      Params pr = core_params(id);
      need((pr.q - 1) % id.n == 0, "n | q - 1");
      GroupTag bt = make_tag(GroupKind::Borel, p, id.n, id.t);
      GroupTag dn = make_tag(GroupKind::Dihedral, p, id.n, 0);
      int vb = vertex(bt), vd = vertex(dn);
      edge(vb, vd, make_tag(GroupKind::Cyclic, p, id.n, 0));
      end(vb, bt);
      GroupTag z2 = make_tag(GroupKind::Cyclic, p, 2, 0);
      for (int ti : {require_set(id.t1, "t1"), require_set(id.t2, "t2")}) {
        if (ti == 0) {
          end(vd, z2);
        } else {
          GroupTag qt = make_tag(GroupKind::Borel, p, 2, ti);
          int vq = vertex(qt);
          edge(vd, vq, z2);
          end(vq, qt);
        }
      }
      break;
    }
  }
  validate(tree);
  return tree;
}

std::vector<BranchPoint> case_branches(const CaseId& id) {
  GroupTree tree = build_case(id);
  std::vector<BranchPoint> out;
  for (const auto& end : tree.ends)
    out.push_back({group_order(end.tag), group_order_p_part(end.tag)});
  return out;
}

Rat mu_from_branches(const std::vector<BranchPoint>& branches) {
  Rat sum = -2;
  for (const auto& b : branches) sum += Rat(b.e + b.ep - 2, b.e);
  return sum / 2;
}

AbPair case_ab(const CaseId& id) {
  auto qpow = [&](int e) { return Int(int_pow(Int(id.p), id.t * e)); };
  Rat half = id.psl && id.p != 2 ? Rat(1, 2) : Rat(1);
  Int q = int_pow(Int(id.p), id.t);
  switch (id.family) {
    case CaseFamily::A1: {
      int n = require_set(id.t1, "t1") / id.t;
      build_case(id);  // surface constraint violations first
      return {Rat(qpow(n) - q - 1), half * qpow(n) * (q * q - 1)};
    }
    case CaseFamily::A2: {
      build_case(id);
      int n = require_set(id.t2, "t2") / id.t;
      int m = require_set(id.t1, "t1") / id.t;
      if (n >= m)
        return {Rat(qpow(n + 1) - qpow(n - m + 1) - qpow(n - m) - q + 1),
                half * qpow(n) * (q * q - 1)};
      return {Rat(qpow(m + 1) - qpow(m - n + 1) + qpow(m - n) - q - 1),
              half * qpow(m) * (q * q - 1)};
    }
    case CaseFamily::A3: {
      build_case(id);
      int n = require_set(id.t1, "t1") / id.t;
      int m = require_set(id.t3, "t3") / id.t;
      if (n > m) std::swap(n, m);  // the row is symmetric in the two towers
      return {Rat(qpow(m) - qpow(m - n) - 1), half * qpow(m) * (q - 1)};
    }
    case CaseFamily::A4: {
      build_case(id);
      int n = require_set(id.t4, "t4") / id.t;
      return {Rat(qpow(n + 1) - qpow(n) - qpow(n - 1) - q + 1),
              half * qpow(n) * (q * q - 1)};
    }
    case CaseFamily::A5: {
      build_case(id);
      int n = require_set(id.t5, "t5") / id.t;
      return {Rat(qpow(n) - qpow(n - 1) - 1), half * qpow(n) * (q - 1)};
    }
    case CaseFamily::A3pp: {
      build_case(id);
      if (id.t2 != 1)
        throw domain_error("A3'' has a tabulated (a,b) only for t2 = 1");
      int n = require_set(id.t1, "t1") / id.t;
      return {Rat(qpow(n), 2) - 1, Rat(qpow(n) * (q - 1))};
    }
    case CaseFamily::F1:
    case CaseFamily::F2:
    case CaseFamily::F1p: {
      GroupTree tree = build_case(id);
      if (id.t1 != 0 || id.t2 != 0 || id.q1_chain || id.q2_chain)
        throw domain_error(
            "the F-case (a,b) values are tabulated only for t1 = t2 = 0");
      // ramification orders (2, 2, nq); n is the dihedral parameter (n- in
      // F1, the chosen divisor in F2)
      long n = id.family == CaseFamily::F2 ? id.n
               : id.family == CaseFamily::F1p
                   ? 5
                   : (long)((int_pow(Int(id.p), id.t) + 1) /
                            (id.psl && id.p != 2 ? 2 : 1))
                         .convert_to<long>();
      Int qq = id.family == CaseFamily::F1p ? Int(3) : q;
      return {Rat(qq - 2), Rat(2 * n * qq)};
    }
    default:
      throw domain_error("case " + family_name(id.family) +
                         " has no tabulated (a,b) row");
  }
}

AttainVerdict attains_bound(const CaseId& id) {
  Rat ratio = mu(build_case(id));  // = (g-1)/|Aut| along the genus family
  Int a = boost::multiprecision::numerator(ratio);
  Int b = boost::multiprecision::denominator(ratio);
  AttainVerdict v;
  if (a <= 0) return v;
  // equality |Aut| = F(g) with g - 1 = a N, |Aut| = b N forces g = s^2 and
  // 2 a s^2 + (2a - b) s + b = 0
  Int A = 2 * a, B = 2 * a - b, C = b;
  Int disc = B * B - 4 * A * C;
  if (disc < 0) return v;
  Int r = isqrt(disc);
  if (r * r != disc) return v;
  for (Int s : {Int((-B + r)), Int((-B - r))}) {
    if (s <= 0 || s % (2 * A) != 0) continue;
    s /= 2 * A;
    if (s < 2) continue;
    if ((s * s - 1) % a != 0) continue;  // N = (s^2-1)/a must be integral
    Int g = s * s;
    Int order = b * (g - 1) / a;
    if (compare_to_bound(order, g) == 0) v.genera.push_back(g);
  }
  std::sort(v.genera.begin(), v.genera.end());
  v.genera.erase(std::unique(v.genera.begin(), v.genera.end()), v.genera.end());
  v.attains = !v.genera.empty();
  return v;
}

std::string lambda0_note(const CaseId& id) {
  switch (id.family) {
    case CaseFamily::A1:
      return id.t1 == 2 * id.t
                 ? "lambda0 = q^2 via the lower bound |Aut| >= q^2 n-"
                 : "lambda0 = 1";
    case CaseFamily::A5:
      return id.t5 == id.t
                 ? "lambda0 = n+ (Z_{n+} acts freely)"
                 : "lambda0 = 1";
    case CaseFamily::B:
      return id.t1 == id.t2
                 ? "lambda0 = p^tau with p^tau the non-identified p-part"
                 : "lambda0 = 1";
    case CaseFamily::F1:
    case CaseFamily::F1p:
      return (id.t1 == 0 && id.t2 == 0)
                 ? "lambda0 = n+ (Z_{n+} acts freely)"
                 : "lambda0 = 1";
    case CaseFamily::F2:
      return (id.t1 == 0 && id.t2 == 0)
                 ? "lambda0 = 2 p^tau with p^tau the non-identified p-part"
                 : "lambda0 = 1";
    case CaseFamily::A3pp:
      return id.t2 == 1 ? "lambda0 = q + 1 (Z_{n+} acts freely)"
                        : "lambda0 = 1";
    default:
      return "lambda0 = 1";
  }
}

std::string case_report(const CaseId& id) {
  nlohmann::json j;
  j["case"] = id.to_string();
  GroupTree tree = build_case(id);
  j["tree"] = nlohmann::json::parse(tree.to_json());
  Rat m = mu(tree);
  j["mu"] = m.str();
  auto branches = case_branches(id);
  nlohmann::json ends = nlohmann::json::array();
  for (const auto& b : branches)
    ends.push_back({{"e", b.e.str()}, {"ep", b.ep.str()}});
  j["branches"] = ends;
  j["mu_from_branches"] = mu_from_branches(branches).str();
  j["consistent"] = mu_from_branches(branches) == m;
  try {
    AbPair ab = case_ab(id);
    j["a"] = ab.a.str();
    j["b"] = ab.b.str();
    j["ab_matches_mu"] = (ab.ratio() == m);
  } catch (const domain_error& ex) {
    j["ab"] = std::string("unavailable: ") + ex.what();
  }
  AttainVerdict v = attains_bound(id);
  j["attains_bound"] = v.attains;
  if (v.attains) {
    nlohmann::json gs = nlohmann::json::array();
    for (const Int& g : v.genera) gs.push_back(g.str());
    j["attained_genera"] = gs;
  }
  j["lambda0"] = lambda0_note(id);
  return j.dump(2);
}

}  // namespace mumford
