#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fockcrystal/partition.hpp"
#include "fockcrystal/weight.hpp"

namespace fc {

// Charged higher-level Fock space: l charged rows, basis indexed by l-multipartitions.
struct FockContext {
  QuiverSpec spec;
  std::vector<long long> charges;  // s_p, p = 1..l

  std::size_t level() const { return charges.size(); }
};

using MP = std::vector<Partition>;          // one component per charge
using FockVec = std::map<MP, Rat>;          // exact linear combination of basis vectors

struct Box {
  long long x = 0;      // row, 1-indexed
  long long y = 0;      // column, 1-indexed
  std::size_t p = 0;    // component, 0-indexed

  bool operator==(const Box& o) const { return x == o.x && y == o.y && p == o.p; }
};

// shifted content s_p + y - x and its residue v^{ct}
long long box_content(const FockContext&, const Box&);
Residue box_residue(const FockContext&, const Box&);

std::vector<Box> addable_boxes(const FockContext&, const MP&, const Residue&);
std::vector<Box> removable_boxes(const FockContext&, const MP&, const Residue&);

MP add_box(const MP&, const Box&);
MP remove_box(const MP&, const Box&);

// Chevalley action with unit coefficients: f adds every addable i-box, e removes
FockVec apply_f(const FockContext&, const FockVec&, const Residue&);
FockVec apply_e(const FockContext&, const FockVec&, const Residue&);

// weight of a basis vector: sum_p Lambda_{v^{s_p}} - sum_i n_i alpha_i, and on finite
// specs additionally -sum_p Delta(s_p, N) delta with N the arrow-cycle size
Weight weight_of(const FockContext&, const MP&);

// basis vectors are orthonormal
Rat pairing(const FockVec&, const FockVec&);

FockVec& axpy(FockVec&, const Rat&, const FockVec&);  // a += c * b, pruning zeros

}  // namespace fc
