#pragma once

#include <optional>
#include <vector>

#include "fockcrystal/fock.hpp"

namespace fc {

// i-signature of a basis vector: i-boxes ordered by shifted content ascending,
// ties broken by component index descending; "+" for addable, "-" for removable.
// Adjacent "-+" pairs cancel recursively; the reduced word is +^phi -^eps.
struct Signature {
  std::vector<std::pair<Box, bool>> word;  // (box, addable?) in signature order
  long long eps = 0;                       // surviving "-" count
  long long phi = 0;                       // surviving "+" count
  std::optional<Box> good_add;             // rightmost surviving "+", target of f~
  std::optional<Box> good_remove;          // leftmost surviving "-", target of e~
};

Signature signature(const FockContext&, const MP&, const Residue&);

long long eps_value(const FockContext&, const MP&, const Residue&);
long long phi_value(const FockContext&, const MP&, const Residue&);

std::optional<MP> f_tilde(const FockContext&, const MP&, const Residue&);
std::optional<MP> e_tilde(const FockContext&, const MP&, const Residue&);

// highest weight: eps_i = 0 for every vertex i (finite specs)
bool is_highest_weight(const FockContext&, const MP&);

}  // namespace fc
