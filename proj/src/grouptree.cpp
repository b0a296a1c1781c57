#include "mumford/grouptree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mumford {

namespace {

std::map<int, std::vector<std::pair<int, const GroupTree::Edge*>>> adjacency(
    const GroupTree& t) {
  std::map<int, std::vector<std::pair<int, const GroupTree::Edge*>>> adj;
  for (const auto& v : t.vertices) adj[v.id];
  for (const auto& e : t.edges) {
    adj[e.a].push_back({e.b, &e});
    adj[e.b].push_back({e.a, &e});
  }
  return adj;
}

std::vector<int> path_between(const GroupTree& t, int from, int to) {
  auto adj = adjacency(t);
  std::map<int, int> parent;
  std::vector<int> stack = {from};
  parent[from] = from;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (auto [w, e] : adj[v]) {
      if (!parent.count(w)) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> path;
  if (!parent.count(to)) return path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string path_string(const std::vector<int>& path) {
  std::ostringstream os;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) os << " - ";
    os << path[i];
  }
  return os.str();
}

}  // namespace

const GroupTree::Vertex* GroupTree::find_vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

std::string GroupTree::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices)
    j["vertices"].push_back({{"id", v.id}, {"tag", v.tag.to_string()}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges)
    j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"tag", e.tag.to_string()}});
  j["ends"] = nlohmann::json::array();
  for (const auto& e : ends)
    j["ends"].push_back({{"at", e.at}, {"tag", e.tag.to_string()}});
  return j.dump(2);
}

GroupTree GroupTree::from_json(const std::string& text, long p) {
  nlohmann::json j = nlohmann::json::parse(text);
  GroupTree t;
  for (const auto& v : j.at("vertices"))
    t.vertices.push_back({v.at("id").get<int>(), parse_tag(v.at("tag").get<std::string>(), p)});
  for (const auto& e : j.at("edges"))
    t.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(),
                       parse_tag(e.at("tag").get<std::string>(), p)});
  if (j.contains("ends"))
    for (const auto& e : j.at("ends"))
      t.ends.push_back({e.at("at").get<int>(), parse_tag(e.at("tag").get<std::string>(), p)});
  return t;
}

void validate(const GroupTree& t) {
  if (t.vertices.empty()) throw domain_error("tree of groups must have a vertex");
  std::set<int> ids;
  long p = t.vertices.front().tag.p;
  for (const auto& v : t.vertices) {
    if (!ids.insert(v.id).second)
      throw domain_error("duplicate vertex id " + std::to_string(v.id));
    if (v.tag.p != p) throw domain_error("mixed characteristics in tree");
  }
  for (const auto& e : t.edges) {
    if (!ids.count(e.a) || !ids.count(e.b))
      throw domain_error("edge references missing vertex");
    if (e.a == e.b) throw domain_error("loop edge is not a tree");
  }
  for (const auto& e : t.ends)
    if (!ids.count(e.at)) throw domain_error("end attached to missing vertex");
  // connected + acyclic
  if (t.edges.size() + 1 != t.vertices.size())
    throw domain_error("graph is not a tree: |E| != |V| - 1");
  auto adj = adjacency(t);
  std::set<int> seen;
  std::vector<int> stack = {t.vertices.front().id};
  seen.insert(stack.front());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != t.vertices.size()) throw domain_error("graph is not connected");

  for (const auto& e : t.edges) {
    if (!admissible_edge_tag(e.tag))
      throw domain_error("edge tag " + e.tag.to_string() +
                         " is not cyclic-mod-p (must be 1, Z_n, E_t or B(t,n))");
    const GroupTag& ta = t.find_vertex(e.a)->tag;
    const GroupTag& tb = t.find_vertex(e.b)->tag;
    for (const GroupTag* vt : {&ta, &tb}) {
      if (group_order(*vt) % group_order(e.tag) != 0)
        throw domain_error("edge group order does not divide vertex group order on edge " +
                           std::to_string(e.a) + "-" + std::to_string(e.b));
      if (!tag_contains(*vt, e.tag))
        throw domain_error("edge group " + e.tag.to_string() +
                           " is not contained in vertex group " + vt->to_string());
      // the prime-to-p part of the edge group must be maximal cyclic
      long tame = (e.tag.kind == GroupKind::Cyclic)  ? e.tag.n
                  : (e.tag.kind == GroupKind::Borel) ? e.tag.n
                                                     : 1;
      tame = prime_to_p_part(tame, p);
      if (tame > 1 && vt->kind != GroupKind::PGL2 && vt->kind != GroupKind::PSL2 &&
          !is_maximal_cyclic(tame, *vt))
        throw domain_error("edge group Z_" + std::to_string(tame) +
                           " is not maximal cyclic in " + vt->to_string());
      // at a P?L(2,q) vertex the edge is the Borel or the nonsplit torus
      if (vt->kind == GroupKind::PGL2 || vt->kind == GroupKind::PSL2) {
        long long q = 1;
        for (int i = 0; i < vt->t; ++i) q *= p;
        long half = (vt->kind == GroupKind::PSL2 && p != 2) ? 2 : 1;
        bool ok = (e.tag.kind == GroupKind::Borel && e.tag.t == vt->t &&
                   e.tag.n == (q - 1) / half) ||
                  // degenerate Borel when the split torus is trivial
                  (e.tag.kind == GroupKind::ElemAbelian && e.tag.t == vt->t &&
                   (q - 1) / half == 1) ||
                  (e.tag.kind == GroupKind::Cyclic && e.tag.n == (q + 1) / half) ||
                  e.tag.kind == GroupKind::Trivial;
        if (!ok)
          throw domain_error("edge at a " + vt->to_string() +
                             " vertex must be its Borel B(t,n-) or Z_(n+), got " +
                             e.tag.to_string());
      }
    }
  }
  for (const auto& end : t.ends) {
    const GroupTag& vt = t.find_vertex(end.at)->tag;
    if (group_order(vt) % group_order(end.tag) != 0 || !tag_contains(vt, end.tag))
      throw domain_error("end stabiliser " + end.tag.to_string() +
                         " is not a subgroup of its vertex group " + vt.to_string());
  }
}

Rat mu(const GroupTree& t) {
  Rat m = 0;
  for (const auto& e : t.edges) m += Rat(1, group_order(e.tag));
  for (const auto& v : t.vertices) m -= Rat(1, group_order(v.tag));
  return m;
}

Int kps_genus(const GroupTree& t, const Int& quotient_order) {
  Rat gm1 = Rat(quotient_order) * mu(t);
  if (denominator(gm1) != 1)
    throw domain_error("|N/Gamma| * mu is not an integer: " + gm1.str());
  Int g = numerator(gm1) + 1;
  if (g < 2) throw domain_error("genus " + g.str() + " is smaller than 2");
  return g;
}

GroupTree contract(const GroupTree& t, const std::vector<int>& keep) {
  validate(t);
  std::set<int> kept(keep.begin(), keep.end());
  for (int id : kept)
    if (!t.find_vertex(id)) throw domain_error("keep set references missing vertex");
  if (kept.empty()) throw domain_error("keep set is empty");
  // kept subgraph must be connected
  for (auto it = kept.begin(); it != kept.end(); ++it) {
    auto path = path_between(t, *kept.begin(), *it);
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (!kept.count(path[i]))
        throw domain_error("keep set is not connected: geodesic " + path_string(path) +
                           " leaves it");
  }

  GroupTree cur = t;
  for (;;) {
    // count degrees
    std::map<int, int> deg;
    for (const auto& v : cur.vertices) deg[v.id] = 0;
    for (const auto& e : cur.edges) {
      deg[e.a]++;
      deg[e.b]++;
    }
    int leaf = -1;
    for (const auto& v : cur.vertices)
      if (!kept.count(v.id) && deg[v.id] <= 1) {
        leaf = v.id;
        break;
      }
    if (leaf == -1) break;
    const GroupTag& leaf_tag = cur.find_vertex(leaf)->tag;
    if (cur.vertices.size() == 1)
      throw domain_error("cannot prune the last vertex");
    // find the pendant edge
    auto eit = std::find_if(cur.edges.begin(), cur.edges.end(), [&](const auto& e) {
      return e.a == leaf || e.b == leaf;
    });
    if (eit == cur.edges.end()) throw domain_error("disconnected vertex in contraction");
    int attach = eit->a == leaf ? eit->b : eit->a;
    const GroupTag& attach_tag = cur.find_vertex(attach)->tag;
    if (!(eit->tag == leaf_tag)) {
      auto witness = path_between(t, leaf, *kept.begin());
      throw domain_error(
          "monotonicity violation along geodesic " + path_string(witness) +
          ": pruned leaf group " + leaf_tag.to_string() +
          " differs from its pendant edge group " + eit->tag.to_string());
    }
    if (!tag_contains(attach_tag, leaf_tag)) {
      auto witness = path_between(t, leaf, *kept.begin());
      throw domain_error("monotonicity violation along geodesic " +
                         path_string(witness) + ": " + leaf_tag.to_string() +
                         " does not embed into " + attach_tag.to_string());
    }
    // re-attach ends, drop leaf
    for (auto& end : cur.ends)
      if (end.at == leaf) end.at = attach;
    cur.edges.erase(eit);
    cur.vertices.erase(std::find_if(cur.vertices.begin(), cur.vertices.end(),
                                    [&](const auto& v) { return v.id == leaf; }));
  }
  return cur;
}

long herrlich_dim(const GroupTree& t, long f) {
  long cv = 0, dv = 0, ce = 0, de = 0;
  auto classify = [](const GroupTag& g, long& c, long& d) {
    if (g.kind == GroupKind::Trivial) return;
    if (tag_is_cyclic(g))
      ++c;
    else
      ++d;
  };
  for (const auto& v : t.vertices) classify(v.tag, cv, dv);
  for (const auto& e : t.edges) classify(e.tag, ce, de);
  return 3 * (f + dv - de - 1) + 2 * (cv - ce);
}

}  // namespace mumford
