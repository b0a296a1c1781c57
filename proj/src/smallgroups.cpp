#include <mumford/smallgroups.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include <mumford/errors.hpp>

namespace mumford::smallgroups {

int Group::inverse(int a) const {
  for (int b = 0; b < n; ++b)
    if (mul[a][b] == 0) return b;
  throw domain_error("element without inverse in Cayley table");
}

int Group::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul[x][a];
    ++k;
    if (k > n) throw domain_error("element order exceeds group order");
  }
  return k;
}

std::vector<int> Group::order_spectrum() const {
  std::vector<int> sp(n);
  for (int a = 0; a < n; ++a) sp[a] = element_order(a);
  std::sort(sp.begin(), sp.end());
  return sp;
}

std::vector<int> Group::center() const {
  std::vector<int> z;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b)
      if (mul[a][b] != mul[b][a]) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> Group::derived_subgroup() const {
  std::set<int> gen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // [a,b] = a b a^-1 b^-1
      int c = mul[mul[mul[a][b]][inverse(a)]][inverse(b)];
      gen.insert(c);
    }
  // close under multiplication
  std::vector<int> elems(gen.begin(), gen.end());
  std::vector<bool> in(n, false);
  for (int e : elems) in[e] = true;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      int c = mul[elems[i]][elems[j]];
      if (!in[c]) {
        in[c] = true;
        elems.push_back(c);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

int Group::conjugacy_class_count() const {
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++count;
    for (int g = 0; g < n; ++g) seen[mul[mul[g][a]][inverse(g)]] = true;
  }
  return count;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

std::vector<int> Group::generators() const {
  // grow greedily: add the least element outside the current closure
  auto closure_of = [&](const std::vector<int>& gen_list) {
    std::vector<bool> in(n, false);
    std::vector<int> elems = {0};
    in[0] = true;
    for (size_t i = 0; i < elems.size(); ++i)
      for (int g : gen_list) {
        int c = mul[elems[i]][g];
        if (!in[c]) {
          in[c] = true;
          elems.push_back(c);
        }
      }
    return elems;
  };
  std::vector<int> gens;
  std::vector<int> cl = closure_of(gens);
  while ((int)cl.size() < n) {
    std::vector<bool> in(n, false);
    for (int e : cl) in[e] = true;
    for (int a = 1; a < n; ++a)
      if (!in[a]) {
        gens.push_back(a);
        break;
      }
    cl = closure_of(gens);
  }
  return gens;
}

bool Group::is_valid() const {
  if ((int)mul.size() != n) return false;
  for (const auto& row : mul) {
    if ((int)row.size() != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int a = 0; a < n; ++a)
    if (mul[0][a] != a || mul[a][0] != a) return false;
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == 0) has_inv = true;
    if (!has_inv) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
  return true;
}

Group trivial_group() {
  Group g;
  g.n = 1;
  g.mul = {{0}};
  return g;
}

Group cyclic_group(int n) {
  Group g;
  g.n = n;
  g.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

Group alternating_a5() {
  // even permutations of five points, identity first, then sorted
  std::vector<std::array<int, 5>> elems;
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::array<int, 5>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
  Group g;
  g.n = (int)elems.size();
  g.mul.assign(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      std::array<int, 5> c;
      // (ab)(x) = a(b(x))
      for (int x = 0; x < 5; ++x) c[x] = elems[a][elems[b][x]];
      g.mul[a][b] = index.at(c);
    }
  return g;
}

namespace {

// Try to extend generator images to a homomorphism by a breadth-first
// closure: every group element is reached as (earlier element) * gen, and
// the image is forced at the same step. Returns the full image map, or an
// empty vector on inconsistency.
std::vector<int> extend_hom(const Group& src, const std::vector<int>& gens,
                            const Group& dst, const std::vector<int>& images) {
  std::vector<int> f(src.n, -1);
  f[0] = 0;
  std::vector<int> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int a = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      int b = src.mul[a][gens[k]];
      int fb = dst.mul[f[a]][images[k]];
      if (f[b] == -1) {
        f[b] = fb;
        queue.push_back(b);
      } else if (f[b] != fb) {
        return {};
      }
    }
  }
  if ((int)queue.size() != src.n) return {};  // gens do not generate src
  return f;
}

bool is_bijection(const std::vector<int>& f, int n) {
  std::vector<bool> hit(n, false);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// invariant fingerprint, cheap to compare, used before real iso tests
struct Fingerprint {
  std::vector<int> spectrum;
  int center_size;
  int derived_size;
  std::vector<int> derived_spectrum;
  int class_count;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  fp.spectrum = g.order_spectrum();
  fp.center_size = (int)g.center().size();
  auto der = g.derived_subgroup();
  fp.derived_size = (int)der.size();
  for (int e : der) fp.derived_spectrum.push_back(g.element_order(e));
  std::sort(fp.derived_spectrum.begin(), fp.derived_spectrum.end());
  fp.class_count = g.conjugacy_class_count();
  return fp;
}

// all image assignments for src's generators into dst that extend to a
// bijective homomorphism; stops after the first when first_only
std::vector<std::vector<int>> iso_search(const Group& src, const Group& dst,
                                         bool first_only) {
  std::vector<std::vector<int>> found;
  auto gens = src.generators();
  if (gens.empty()) {
    if (dst.n == 1) found.push_back({0});
    return found;
  }
  // candidates per generator, matched on element order
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = src.element_order(gens[k]);
    for (int x = 0; x < dst.n; ++x)
      if (dst.element_order(x) == ord) cand[k].push_back(x);
    if (cand[k].empty()) return found;
  }
  std::vector<int> images(gens.size());
  std::vector<size_t> idx(gens.size(), 0);
  size_t pos = 0;
  while (true) {
    if (idx[pos] == cand[pos].size()) {
      if (pos == 0) break;
      idx[pos] = 0;
      --pos;
      ++idx[pos];
      continue;
    }
    images[pos] = cand[pos][idx[pos]];
    if (pos + 1 < gens.size()) {
      ++pos;
      continue;
    }
    auto f = extend_hom(src, gens, dst, images);
    if (!f.empty() && is_bijection(f, dst.n)) {
      found.push_back(f);
      if (first_only) return found;
    }
    ++idx[pos];
  }
  return found;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Group& g) {
  return iso_search(g, g, false);
}

bool isomorphic(const Group& a, const Group& b) {
  if (a.n != b.n) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  return !iso_search(a, b, true).empty();
}

bool is_solvable(const Group& g) {
  std::vector<int> current(g.n);
  std::iota(current.begin(), current.end(), 0);
  while (current.size() > 1) {
    // derived subgroup of the subgroup given by `current`
    std::set<int> comm;
    for (int a : current)
      for (int b : current)
        comm.insert(g.mul[g.mul[g.mul[a][b]][g.inverse(a)]][g.inverse(b)]);
    std::vector<int> next(comm.begin(), comm.end());
    std::vector<bool> in(g.n, false);
    for (int e : next) in[e] = true;
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < next.size(); ++j) {
        int c = g.mul[next[i]][next[j]];
        if (!in[c]) {
          in[c] = true;
          next.push_back(c);
        }
      }
    if (next.size() == current.size()) return false;  // series stalled
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return true;
}

Group cyclic_extension(const Group& base, const std::vector<int>& phi, int z,
                       int p) {
  const int m = base.n;
  Group g;
  g.n = m * p;
  g.mul.assign(g.n, std::vector<int>(g.n));
  // iterated powers of phi
  std::vector<std::vector<int>> phipow(p, std::vector<int>(m));
  std::iota(phipow[0].begin(), phipow[0].end(), 0);
  for (int i = 1; i < p; ++i)
    for (int x = 0; x < m; ++x) phipow[i][x] = phi[phipow[i - 1][x]];
  auto id = [m](int a, int i) { return i * m + a; };
  for (int i = 0; i < p; ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < p; ++j)
        for (int b = 0; b < m; ++b) {
          int prod = base.mul[a][phipow[i][b]];
          if (i + j >= p) prod = base.mul[prod][z];
          g.mul[id(a, i)][id(b, j)] = id(prod, (i + j) % p);
        }
  return g;
}

namespace {

std::vector<int> primes_dividing(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// conjugation by z as a permutation of the group
std::vector<int> inner_aut(const Group& g, int z) {
  std::vector<int> f(g.n);
  int zi = g.inverse(z);
  for (int x = 0; x < g.n; ++x) f[x] = g.mul[g.mul[z][x]][zi];
  return f;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

std::vector<int> invert_perm(const std::vector<int>& f) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[f[i]] = (int)i;
  return h;
}

size_t perm_key(const std::vector<int>& f) {
  size_t h = 1469598103934665603ull;
  for (int v : f) {
    h ^= (size_t)(v + 1);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const std::vector<Group>& groups_of_order(int n) {
  static std::map<int, std::vector<Group>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (n < 1 || n > 100) throw domain_error("group enumeration supports orders 1..100");

  // recursive worker, assumes the lock is held
  std::function<const std::vector<Group>&(int)> enumerate =
      [&](int order) -> const std::vector<Group>& {
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<Group> classes;
    if (order == 1) {
      classes.push_back(trivial_group());
      cache[order] = std::move(classes);
      return cache[order];
    }
    std::vector<Fingerprint> prints;
    auto consider = [&](Group&& cand) {
      auto fp = fingerprint(cand);
      for (size_t i = 0; i < classes.size(); ++i) {
        if (prints[i] != fp) continue;
        if (!iso_search(classes[i], cand, true).empty()) return;
      }
      classes.push_back(std::move(cand));
      prints.push_back(std::move(fp));
    };
    for (int p : primes_dividing(order)) {
      for (const Group& base : enumerate(order / p)) {
        auto auts = automorphisms(base);
        // pre-hash inner automorphisms for the phi^p condition
        std::map<std::vector<int>, std::vector<int>> inner;  // perm -> z list
        for (int z = 0; z < base.n; ++z) inner[inner_aut(base, z)].push_back(z);
        // reduce phi up to conjugacy in Aut(base): conjugate data give
        // isomorphic extensions
        std::unordered_set<size_t> seen;
        for (const auto& phi : auts) {
          if (seen.count(perm_key(phi))) continue;
          for (const auto& alpha : auts)
            seen.insert(perm_key(compose(compose(alpha, phi), invert_perm(alpha))));
          // phi^p must be inner, realized by some z with phi(z) = z
          std::vector<int> power(base.n);
          std::iota(power.begin(), power.end(), 0);
          for (int i = 0; i < p; ++i) power = compose(phi, power);
          auto zit = inner.find(power);
          if (zit == inner.end()) continue;
          for (int z : zit->second) {
            if (phi[z] != z) continue;
            consider(cyclic_extension(base, phi, z, p));
          }
        }
      }
    }
    if (order == 60) {
      Group a5 = alternating_a5();
      bool present = false;
      auto fp = fingerprint(a5);
      for (size_t i = 0; i < classes.size(); ++i)
        if (prints[i] == fp && !iso_search(classes[i], a5, true).empty())
          present = true;
      if (!present) {
        classes.push_back(std::move(a5));
        prints.push_back(std::move(fp));
      }
    }
    cache[order] = std::move(classes);
    return cache[order];
  };
  return enumerate(n);
}

long group_count(int n) { return (long)groups_of_order(n).size(); }

long nonsolvable_count(int n) {
  long c = 0;
  for (const Group& g : groups_of_order(n))
    if (!is_solvable(g)) ++c;
  return c;
}

}  // namespace mumford::smallgroups
