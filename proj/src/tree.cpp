#include "mumford/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mumford {

namespace {

// Distance in the ball model: (n1,u1), (n2,u2) meet at level
// m = min(n1, n2, v(u1-u2)).
long ball_distance(const TreeVertex& v, const TreeVertex& w) {
  long m = std::min(v.level, w.level);
  LocalElement diff = v.center - w.center;
  if (!diff.is_exact_zero()) m = std::min(m, *diff.valuation());
  return (v.level - m) + (w.level - m);
}

}  // namespace

TreeVertex TreeVertex::base(const FqSpecPtr& spec) {
  return {0, LocalElement::exact_zero(spec)};
}

TreeVertex TreeVertex::make(long level, const LocalElement& center) {
  return {level, center.reduced_mod(level)};
}

TreeVertex TreeVertex::standard(const FqSpecPtr& spec, long j) {
  return {j, LocalElement::exact_zero(spec)};
}

Mat2 TreeVertex::lattice_rep() const {
  const FqSpecPtr& sp = spec();
  return {LocalElement::pi_pow(sp, level), center, LocalElement::exact_zero(sp),
          LocalElement::from_int(sp, 1)};
}

bool TreeVertex::operator==(const TreeVertex& o) const {
  return level == o.level && center == o.center;
}

bool TreeVertex::operator<(const TreeVertex& o) const {
  if (level != o.level) return level < o.level;
  auto it1 = center.terms().begin(), e1 = center.terms().end();
  auto it2 = o.center.terms().begin(), e2 = o.center.terms().end();
  for (; it1 != e1 && it2 != e2; ++it1, ++it2) {
    if (it1->first != it2->first) return it1->first < it2->first;
    if (it1->second.index() != it2->second.index())
      return it1->second.index() < it2->second.index();
  }
  return (it1 == e1) && (it2 != e2);
}

std::string TreeVertex::to_string() const {
  return "(" + std::to_string(level) + ", " + center.to_string() + ")";
}

TreeVertex vertex_from_lattice(const Mat2& m) {
  LocalElement det = m.det();
  if (det.known_zero()) {
    if (det.is_exact_zero()) throw domain_error("singular lattice matrix");
    throw precision_error("lattice determinant zero to precision");
  }
  long vdet = *det.valuation();
  // Decide which column operation puts the matrix in upper-triangular form.
  bool c_zero = m.c.is_exact_zero();
  long n;
  LocalElement u = LocalElement::exact_zero(m.spec());
  if (c_zero || (!m.d.known_zero() && (m.c.known_zero() ||
                                       *m.c.valuation() >= *m.d.valuation()))) {
    if (m.d.known_zero() && !m.d.is_exact_zero())
      throw precision_error("lattice entry valuation indeterminate");
    long vd = *m.d.valuation();
    n = vdet - 2 * vd;
    u = m.b / m.d;
  } else {
    if (m.c.known_zero())
      throw precision_error("lattice entry valuation indeterminate");
    long vc = *m.c.valuation();
    n = vdet - 2 * vc;
    u = m.a / m.c;
  }
  return TreeVertex::make(n, u);
}

TreeVertex act(const Mat2& g, const TreeVertex& v) {
  return vertex_from_lattice(g * v.lattice_rep());
}

long tree_distance(const TreeVertex& v, const TreeVertex& w) {
  Mat2 t = v.lattice_rep().adjugate() * w.lattice_rep();
  long a = t.min_valuation();
  long vdet = *t.det().valuation();
  long d = vdet - 2 * a;
  if (d < 0) throw domain_error("elementary divisor computation failed");
  return d;
}

bool is_fixed(const Mat2& g, const TreeVertex& v) { return act(g, v) == v; }

std::vector<TreeVertex> neighbors(const TreeVertex& v) {
  std::vector<TreeVertex> out;
  out.push_back(TreeVertex::make(v.level - 1, v.center));
  const FqSpecPtr& sp = v.spec();
  long long q = sp->q();
  for (long long i = 0; i < q; ++i) {
    LocalElement child =
        v.center + LocalElement::monomial(sp, element_by_index(sp, i), v.level);
    out.push_back(TreeVertex{v.level + 1, child});
  }
  return out;
}

std::vector<TreeVertex> geodesic(const TreeVertex& v, const TreeVertex& w) {
  long m = std::min(v.level, w.level);
  LocalElement diff = v.center - w.center;
  if (!diff.is_exact_zero()) m = std::min(m, *diff.valuation());
  std::vector<TreeVertex> path;
  for (long j = v.level; j >= m; --j) path.push_back(TreeVertex::make(j, v.center));
  for (long j = m + 1; j <= w.level; ++j) path.push_back(TreeVertex::make(j, w.center));
  return path;
}

std::vector<TreeVertex> apartment(const ProjPoint& x, const ProjPoint& y, long j_min,
                                  long j_max) {
  const FqSpecPtr& sp = x.a().spec();
  Mat2 g{y.a(), x.a(), y.b(), x.b()};
  if (g.det().known_zero()) {
    if (g.det().is_exact_zero()) throw domain_error("apartment needs two distinct ends");
    throw precision_error("apartment ends equal to current precision");
  }
  std::vector<TreeVertex> out;
  for (long j = j_min; j <= j_max; ++j) out.push_back(act(g, TreeVertex::standard(sp, j)));
  return out;
}

TreeVertex median(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) {
  const FqSpecPtr& sp = x.a().spec();
  auto col_det = [](const ProjPoint& u, const ProjPoint& v) {
    return u.a() * v.b() - v.a() * u.b();
  };
  LocalElement da = col_det(z, x);  // coefficient for the y column
  LocalElement db = col_det(y, z);  // coefficient for the x column
  LocalElement d0 = col_det(y, x);
  for (const LocalElement* e : {&da, &db, &d0}) {
    if (e->known_zero()) {
      if (e->is_exact_zero()) throw domain_error("median needs three distinct ends");
      throw precision_error("median ends coincide to current precision");
    }
  }
  Mat2 h{y.a() * da, x.a() * db, y.b() * da, x.b() * db};
  return act(h, TreeVertex::base(sp));
}

bool WindowSpec::contains(const TreeVertex& v) const {
  return ball_distance(center, v) <= radius;
}

long TreeWindow::index_of(const TreeVertex& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return (long)i;
  return -1;
}

std::string TreeWindow::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const TreeVertex& v : vertices)
    j["vertices"].push_back({{"level", v.level}, {"center", v.center.to_string()}});
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges) j["edges"].push_back({{"a", a}, {"b", b}});
  j["boundary"] = boundary;
  return j.dump(2);
}

std::string TreeWindow::to_dot() const {
  std::ostringstream os;
  os << "graph tree_window {\n";
  for (size_t i = 0; i < vertices.size(); ++i) {
    bool is_boundary =
        std::find(boundary.begin(), boundary.end(), (int)i) != boundary.end();
    os << "  v" << i << " [label=\"" << vertices[i].to_string() << "\""
       << (is_boundary ? ", style=dashed" : "") << "];\n";
  }
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

TreeWindow window_from_vertices(std::vector<TreeVertex> verts, const WindowSpec* clip) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const TreeVertex& a, const TreeVertex& b) { return a == b; }),
              verts.end());
  if (clip) {
    std::vector<TreeVertex> kept;
    for (const TreeVertex& v : verts)
      if (clip->contains(v)) kept.push_back(v);
    verts = std::move(kept);
  }
  TreeWindow w;
  w.vertices = std::move(verts);
  std::map<TreeVertex, int> pos;
  for (size_t i = 0; i < w.vertices.size(); ++i) pos[w.vertices[i]] = (int)i;
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    TreeVertex parent = TreeVertex::make(w.vertices[i].level - 1, w.vertices[i].center);
    auto it = pos.find(parent);
    if (it != pos.end()) w.edges.push_back({it->second, (int)i});
  }
  if (clip) {
    for (size_t i = 0; i < w.vertices.size(); ++i)
      if (ball_distance(clip->center, w.vertices[i]) == clip->radius)
        w.boundary.push_back((int)i);
  }
  return w;
}

TreeWindow enumerate_window(const WindowSpec& w) {
  std::set<TreeVertex> seen;
  std::deque<std::pair<TreeVertex, int>> queue;
  seen.insert(w.center);
  queue.push_back({w.center, 0});
  std::vector<TreeVertex> verts;
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    verts.push_back(v);
    if (d == w.radius) continue;
    for (const TreeVertex& nb : neighbors(v)) {
      if (seen.insert(nb).second) queue.push_back({nb, d + 1});
    }
  }
  return window_from_vertices(std::move(verts), &w);
}

TreeWindow mirror(const Mat2& g, const WindowSpec& w) {
  TreeWindow all = enumerate_window(w);
  std::vector<TreeVertex> fixed;
  for (const TreeVertex& v : all.vertices)
    if (is_fixed(g, v)) fixed.push_back(v);
  // The fixed-point set of an isometry is convex, so the induced subgraph is
  // already the spanned subtree; keep the geodesic closure as a safeguard.
  std::vector<TreeVertex> span = fixed;
  for (size_t i = 0; i + 1 < fixed.size(); ++i) {
    auto path = geodesic(fixed[i], fixed[i + 1]);
    span.insert(span.end(), path.begin(), path.end());
  }
  return window_from_vertices(std::move(span), &w);
}

TreeWindow tree_of_points(const std::vector<ProjPoint>& points, const WindowSpec& w) {
  if (points.size() < 3) throw domain_error("tree_of_points needs at least 3 ends");
  std::vector<TreeVertex> medians;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      for (size_t k = j + 1; k < points.size(); ++k)
        medians.push_back(median(points[i], points[j], points[k]));
  std::vector<TreeVertex> span = medians;
  for (size_t i = 0; i < medians.size(); ++i)
    for (size_t j = i + 1; j < medians.size(); ++j) {
      auto path = geodesic(medians[i], medians[j]);
      span.insert(span.end(), path.begin(), path.end());
    }
  return window_from_vertices(std::move(span), &w);
}

LinkRep link_rep(const std::vector<Mat2>& elements, const TreeVertex& v) {
  Mat2 A = v.lattice_rep();
  Mat2 Ainv = A.adjugate();
  LinkRep rep;
  for (const Mat2& g : elements) {
    Mat2 conj = (Ainv * g * A).primitive();
    for (const LocalElement* e : {&conj.a, &conj.b, &conj.c, &conj.d}) {
      if (!e->known_zero() && *e->valuation() < 0)
        throw domain_error("element does not stabilise the vertex");
    }
    auto digit0 = [](const LocalElement& e) {
      auto it = e.terms().find(0);
      return it == e.terms().end() ? FqElement(e.spec(), 0L) : it->second;
    };
    std::array<FqElement, 4> m = {digit0(conj.a), digit0(conj.b), digit0(conj.c),
                                  digit0(conj.d)};
    FqElement det = m[0] * m[3] - m[1] * m[2];
    if (det.is_zero()) throw domain_error("element does not stabilise the vertex");
    // projective normal form: first nonzero entry = 1
    for (auto& entry : m) {
      if (!entry.is_zero()) {
        FqElement inv = entry.inverse();
        for (auto& x : m) x = x * inv;
        break;
      }
    }
    bool kernel = m[1].is_zero() && m[2].is_zero() && m[0] == m[3];
    rep.images.push_back(m);
    rep.in_kernel.push_back(kernel);
  }
  return rep;
}

}  // namespace mumford
