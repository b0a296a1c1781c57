#include <mumford/hurwitz.hpp>

#include <algorithm>

#include <mumford/errors.hpp>

namespace mumford {

Rat hurwitz_genus(const CoverData& cover) {
  if (cover.group_order < 1) throw domain_error("group order must be positive");
  Rat sum = -2;
  for (const auto& b : cover.branch) {
    if (b.e < 1 || b.ep < 1 || b.e % b.ep != 0)
      throw domain_error("branch point needs ep | e with both positive");
    sum += Rat(b.e + b.ep - 2, b.e);
  }
  // 2g - 2 = |G| * sum
  return (Rat(cover.group_order) * sum + 2) / 2;
}

Rat ab_ratio(const CoverData& cover) {
  Rat g = hurwitz_genus(cover);
  if (g < 2) throw domain_error("ab_ratio needs genus >= 2");
  return Rat(cover.group_order) / (g - 1);
}

int compare_to_bound(const Int& n, const Int& g) {
  if (g < 2) throw domain_error("bound F(g) is defined for g >= 2");
  // n vs 4g + 2(g+1)sqrt(g).  Move the linear part over; both sides of the
  // remaining comparison are then nonnegative, so squaring is safe.
  Int lhs = n - 4 * g;
  Int rhs_sq = 4 * g * (g + 1) * (g + 1);  // (2(g+1)sqrt(g))^2
  if (lhs <= 0) {
    // n <= 4g < F(g)
    return -1;
  }
  Int lhs_sq = lhs * lhs;
  if (lhs_sq < rhs_sq) return -1;
  if (lhs_sq > rhs_sq) return 1;
  return 0;
}

bool within_bound(const Int& n, const Int& g) {
  return compare_to_bound(n, g) <= 0;
}

bool lambda_criterion(const Int& lambda0, const Int& a, const Int& b) {
  if (lambda0 < 1 || a < 1 || b < 1)
    throw domain_error("lambda_criterion needs positive arguments");
  return compare_to_bound(lambda0 * b, lambda0 * a + 1) <= 0;
}

std::vector<Int> bound_attained_at(const Int& a, const Int& b) {
  // a(g-1) + b = 4g + 2(g+1)sqrt(g) forces g = s^2 a perfect square, and
  // substituting g = s^2 gives (a-4)s^2 - 2s^3 - 2s + b - a = 0, i.e.
  //   2s^3 - (a-4)s^2 + 2s + a - b = 0.
  // Integer roots divide |a - b| (or, when a = b, s = 0 only, excluded by
  // g >= 2), so trial division over divisors suffices.
  std::vector<Int> out;
  if (a < 1 || b < 1) throw domain_error("bound_attained_at needs positive a, b");
  Int c = a - b;
  if (c == 0) {
    // the cubic degenerates to s(2s^2 - (a-4)s + 2) = 0; an integer root of
    // the quadratic factor divides its constant term 2
    for (Int d : {Int(1), Int(2)})
      if (d >= 2 && 2 * d * d - (a - 4) * d + 2 == 0) out.push_back(d * d);
    return out;
  }
  Int ac = c < 0 ? -c : c;
  // any integer root divides the constant term a - b
  for (Int s = 2; s * s <= ac; ++s) {
    if (ac % s != 0) continue;
    for (Int d : {Int(s), Int(ac / s)}) {
      if (d < 2) continue;
      if (2 * d * d * d - (a - 4) * d * d + 2 * d + c == 0) out.push_back(d * d);
    }
  }
  if (ac >= 2 && 2 * ac * ac * ac - (a - 4) * ac * ac + 2 * ac + c == 0)
    out.push_back(ac * ac);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> exceptional_orders(const Int& g) {
  std::vector<Int> out;
  if (g < 2) return out;
  Int top = 12 * (g - 1);
  // walk down from 12(g-1) while still above F(g)
  for (Int n = top; n > 4 * g; --n) {
    if (compare_to_bound(n, g) > 0)
      out.insert(out.begin(), n);
    else
      break;
  }
  return out;
}

CensusReport census_exceptional(const std::map<Int, long>& gnu_table,
                                const std::map<Int, long>& nonsolvable_table) {
  CensusReport report;
  report.total = 0;
  report.nonsolvable_total = 0;
  for (Int g = 5; g <= 8; ++g) {
    CensusGenusRow row;
    row.g = g;
    row.orders = exceptional_orders(g);
    row.group_count = 0;
    for (const Int& n : row.orders) {
      auto it = gnu_table.find(n);
      if (it == gnu_table.end())
        throw domain_error("census: missing group count for order " + n.str());
      row.group_count += it->second;
      auto ns = nonsolvable_table.find(n);
      if (ns != nonsolvable_table.end() && ns->second > 0) {
        report.nonsolvable[n] += ns->second;
        report.nonsolvable_total += ns->second;
      }
    }
    report.total += row.group_count;
    report.per_genus.push_back(std::move(row));
  }
  return report;
}

}  // namespace mumford
