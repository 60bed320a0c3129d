#pragma once

// Cross-check implementations that work directly on Young diagrams, with no
// bead encoding anywhere: border strips are verified cell by cell.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fockcrystal/partition.hpp"
#include "fockcrystal/rational.hpp"

namespace oracle {

inline bool contains(const fc::Partition& outer, const fc::Partition& inner) {
  for (std::size_t u = 1; u <= inner.length(); ++u)
    if (inner.row(u) > outer.row(u)) return false;
  return true;
}

// cells of outer/inner as (row, col), 1-indexed
inline std::vector<std::pair<long long, long long>> skew_cells(const fc::Partition& outer,
                                                               const fc::Partition& inner) {
  std::vector<std::pair<long long, long long>> cells;
  for (std::size_t u = 1; u <= outer.length(); ++u)
    for (long long c = inner.row(u) + 1; c <= outer.row(u); ++c)
      cells.emplace_back(static_cast<long long>(u), c);
  return cells;
}

// connected, no 2x2 square; returns (true, rows spanned - 1) on success
inline std::pair<bool, long long> border_strip_height(const fc::Partition& outer,
                                                      const fc::Partition& inner) {
  auto cells = skew_cells(outer, inner);
  if (cells.empty()) return {false, 0};
  std::set<std::pair<long long, long long>> in(cells.begin(), cells.end());
  for (auto& [r, c] : cells)
    if (in.count({r, c + 1}) && in.count({r + 1, c}) && in.count({r + 1, c + 1}))
      return {false, 0};
  // flood fill from the first cell
  std::vector<std::pair<long long, long long>> stack{cells.front()};
  std::set<std::pair<long long, long long>> seen{cells.front()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto [dr, dc] : {std::pair{1LL, 0LL}, {-1LL, 0LL}, {0LL, 1LL}, {0LL, -1LL}}) {
      std::pair<long long, long long> nb{r + dr, c + dc};
      if (in.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        stack.push_back(nb);
      }
    }
  }
  if (seen.size() != cells.size()) return {false, 0};
  std::set<long long> rows;
  for (auto& [r, c] : cells) rows.insert(r);
  return {true, static_cast<long long>(rows.size()) - 1};
}

// all mu < la with la/mu a border strip of size e, with heights
inline std::vector<std::pair<fc::Partition, long long>> ribbon_removals_diagram(
    const fc::Partition& la, long long e) {
  std::vector<std::pair<fc::Partition, long long>> out;
  if (la.size() < e) return out;
  for (auto& mu : fc::partitions_of(la.size() - e)) {
    if (!contains(la, mu)) continue;
    auto [ok, ht] = border_strip_height(la, mu);
    if (ok) out.emplace_back(mu, ht);
  }
  return out;
}

// all nu > la with nu/la a border strip of size e, with heights
inline std::vector<std::pair<fc::Partition, long long>> ribbon_additions_diagram(
    const fc::Partition& la, long long e) {
  std::vector<std::pair<fc::Partition, long long>> out;
  for (auto& nu : fc::partitions_of(la.size() + e)) {
    if (!contains(nu, la)) continue;
    auto [ok, ht] = border_strip_height(nu, la);
    if (ok) out.emplace_back(nu, ht);
  }
  return out;
}

// symmetric group character by peeling border strips off the diagram
inline fc::Int chi_diagram(const fc::Partition& label, const fc::Partition& cls) {
  if (label.size() != cls.size()) throw std::invalid_argument("size mismatch");
  if (label.empty()) return 1;
  long long r = cls.row(1);
  std::vector<long long> rest_parts(cls.parts().begin() + 1, cls.parts().end());
  fc::Partition rest(rest_parts);
  fc::Int total = 0;
  for (auto& [mu, ht] : ribbon_removals_diagram(label, r))
    total += (ht % 2 == 0 ? 1 : -1) * chi_diagram(mu, rest);
  return total;
}

// repeatedly strip any e-ribbon; the endpoint does not depend on choices
inline fc::Partition e_core_diagram(const fc::Partition& la, long long e) {
  fc::Partition cur = la;
  for (;;) {
    auto rem = ribbon_removals_diagram(cur, e);
    if (rem.empty()) return cur;
    cur = rem.front().first;
  }
}

}  // namespace oracle
