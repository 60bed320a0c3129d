#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fc {

// Integer partition, stored as strictly positive non-increasing parts.
class Partition {
 public:
  Partition() = default;
  // strips trailing zeros; throws std::invalid_argument on negative or increasing input
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  long long size() const;            // number of boxes
  long long row(std::size_t u) const;  // 1-indexed part, 0 beyond the last row
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // "4,2,1"; empty partition prints as ""
  std::string str() const;

 private:
  std::vector<long long> parts_;
};

Partition parse_partition(const std::string& s);  // accepts "" and "0" for the empty partition

// ---- beta sets ----------------------------------------------------------
// The charged beta set of (lambda, charge) is the infinite strictly decreasing
// set { lambda_u + charge + 1 - u : u >= 1 }; below row length it is the
// consecutive tail charge - length, charge - length - 1, ...

// first n beads, decreasing
std::vector<long long> beta_window(const Partition&, long long charge, std::size_t n);
bool beta_member(const Partition&, long long charge, long long x);

// reconstruct (partition, charge) from a strictly decreasing window; the charge
// is read off the window as beads[n-1] + n - 1
std::pair<Partition, long long> partition_from_window(const std::vector<long long>& beads);
// same, but the caller asserts the charge; throws std::invalid_argument
// ("tail not consecutive") when the window disagrees with the stated charge
Partition partition_from_window(const std::vector<long long>& beads, long long charge);

// ---- hooks ---------------------------------------------------------------
// an e-hook is a pair (x, x+e) with x+e a bead and x not a bead
using Hook = std::pair<long long, long long>;

// all removable e-hooks, sorted by x ascending
std::vector<Hook> e_hooks(const Partition&, long long charge, long long e);
Partition remove_e_hook(const Partition&, long long charge, const Hook&, long long e);
// greedy chain to the e-core: repeatedly remove the hook with the largest x;
// returned in removal order
std::vector<Hook> e_hook_removal_sequence(const Partition&, long long charge, long long e);

// ---- quotient towers -----------------------------------------------------
struct ChargedMulti {
  std::vector<Partition> mu;       // components, index p = 1..l
  std::vector<long long> charges;  // s_p, sum equals the input charge
};

// split beta_d(lambda) along residue classes mod l: bead b with b = p mod l
// (p in 1..l) goes to component p at position c = (b - p + l)/l
ChargedMulti beta_quotient(const Partition&, long long charge, long long l);
// inverse: assemble the union of p - l + l*beta_{s_p}(mu^p); returns (lambda, charge)
std::pair<Partition, long long> beta_compose(const ChargedMulti&);

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;
  std::vector<long long> charges;
  long long weight = 0;
};
CoreQuotient e_core_quotient(const Partition&, long long e);

// ---- two-core scaffolding --------------------------------------------------
Partition staircase(long long t);                      // (t, t-1, ..., 1)
std::array<long long, 2> staircase_charges(long long t);  // 2-quotient charges of staircase(t)
// the unique partition with 2-core staircase(t) and 2-quotient (mu1, mu2)
Partition from_two_quotient(long long t, const Partition& mu1, const Partition& mu2);
long long two_core_index(const Partition&);  // t with 2-core = staircase(t)

// ---- statistics ------------------------------------------------------------
long long a_value(const Partition&);  // sum (u-1) * lambda_u
// dominance: a <= b iff all prefix sums of a are <= those of b (equal sizes required)
bool dominance_leq(const Partition& a, const Partition& b);

// ---- enumeration ------------------------------------------------------------
std::vector<Partition> partitions_of(long long n);  // descending lexicographic
std::vector<std::array<Partition, 2>> bipartitions_of(long long n);

}  // namespace fc
