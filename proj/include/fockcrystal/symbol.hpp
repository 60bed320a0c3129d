#pragma once

#include <string>
#include <vector>

#include "fockcrystal/partition.hpp"
#include "fockcrystal/weight.hpp"

namespace fc {

// Charged two-row symbol in canonical form: row X carries charge t >= 0 and
// partition mu1, row Y carries charge -1-t and partition mu2.
struct ChargedSymbol {
  long long t = 0;
  Partition mu1, mu2;

  bool operator==(const ChargedSymbol& o) const {
    return t == o.t && mu1 == o.mu1 && mu2 == o.mu2;
  }
  bool operator!=(const ChargedSymbol& o) const { return !(*this == o); }
  bool operator<(const ChargedSymbol& o) const {
    if (t != o.t) return t < o.t;
    if (mu1 != o.mu1) return mu1 < o.mu1;
    return mu2 < o.mu2;
  }
};

ChargedSymbol make_symbol(long long t, Partition mu1, Partition mu2);  // t >= 0

// explicit charged presentation (used by shift/flip); charges sum to an odd number
struct ChargedRows {
  long long c1 = 0, c2 = 0;
  Partition r1, r2;
};

ChargedRows rows_of(const ChargedSymbol&);
ChargedRows shifted(const ChargedRows&, long long m);  // both charges + m
ChargedRows flipped(const ChargedRows&);               // swap the two rows
ChargedSymbol canonicalize(const ChargedRows&);        // shift to charge sum -1, order rows

long long defect(const ChargedSymbol&);  // 2t + 1
long long rank(const ChargedSymbol&);    // |mu1| + |mu2| + t(t+1)

std::string symbol_str(const ChargedSymbol&);       // "t:mu1/mu2"
ChargedSymbol parse_symbol(const std::string&);
// two-row bead picture truncated to a window, e.g. "{3,1,0,... / 0,-1,...}"
std::string symbol_pretty(const ChargedSymbol&, std::size_t window);

// ---- hooks within a row ----------------------------------------------------
struct RowHook {
  int row = 1;  // 1 or 2
  Hook h;
  bool operator==(const RowHook& o) const { return row == o.row && h == o.h; }
};
std::vector<RowHook> d_hooks(const ChargedSymbol&, long long d);
ChargedSymbol remove_d_hook(const ChargedSymbol&, const RowHook&, long long d);
// additions of a d-hook into one row: (x -> x+d with x a bead of that row)
std::vector<std::pair<long long, ChargedSymbol>> d_hook_additions(const ChargedSymbol&,
                                                                  long long d, int into_row);
ChargedSymbol d_core(const ChargedSymbol&, long long d);  // greedy, order-independent

// ---- cohooks across the rows ------------------------------------------------
// a d-cohook is a pair (x, x+d) with x+d a bead of one row and x not a bead of
// the other; removing it moves the bead across and lowers the rank by d
struct Cohook {
  long long x = 0;
  int from_row = 1;  // the row containing the bead x + d
  bool operator==(const Cohook& o) const { return x == o.x && from_row == o.from_row; }
};
std::vector<Cohook> d_cohooks(const ChargedSymbol&, long long d);
ChargedSymbol remove_d_cohook(const ChargedSymbol&, const Cohook&, long long d);
// additions: new bead x+d in into_row, bead x taken from the other row
std::vector<std::pair<long long, ChargedSymbol>> d_cohook_additions(const ChargedSymbol&,
                                                                    long long d, int into_row);
ChargedSymbol d_cocore(const ChargedSymbol&, long long d);  // greedy, order-independent

// ---- kappa sequence and the order -------------------------------------------
// merged non-increasing rearrangement of the two bead sets; entry i (1-indexed)
// eventually equals -floor(i/2)
std::vector<long long> kappa_window(const ChargedSymbol&, std::size_t n);
long long symbol_a_value(const ChargedSymbol&);  // sum (i-1)(kappa_i + floor(i/2))
// partial order on symbols of equal t and rank: A <= B iff A == B or the
// kappa-sequence of B is strictly below that of A for dominance
bool symbol_order_leq(const ChargedSymbol& a, const ChargedSymbol& b);

// ---- weight -------------------------------------------------------------------
// weight on the BC quiver with q of order 2d: level-2 Fock weight at charges
// (t, d-1-t) minus (t/2) delta, twisted t times by residue negation
Weight symbol_weight(const ChargedSymbol&, long long d);

std::vector<ChargedSymbol> symbols_of_rank(long long n);

}  // namespace fc
