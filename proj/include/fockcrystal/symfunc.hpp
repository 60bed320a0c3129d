#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fockcrystal/partition.hpp"
#include "fockcrystal/rational.hpp"

namespace fc {

// Symmetric function with exact coefficients, expanded in the power-sum basis:
// the key nu stands for p_nu = p_{nu_1} p_{nu_2} ...
using SymFunc = std::map<Partition, Rat>;

Rat z_value(const Partition&);  // prod parts * prod multiplicities!

// symmetric group character table of degree m, rows and columns indexed by
// partitions_of(m); computed once per degree and cached
struct CharTable {
  std::vector<Partition> parts;
  std::vector<std::vector<Int>> chi;  // chi[label][class]
  std::size_t index(const Partition&) const;
};
const CharTable& char_table(long long m);
Int chi(const Partition& label, const Partition& cls);

// degree cap for character-table work; FOCKCRYSTAL_MAX_DEGREE overrides
long long max_degree();

SymFunc phi(const Partition&);                   // sum_nu z_nu^{-1} chi^lambda_nu p_nu
std::map<Partition, Rat> to_phi(const SymFunc&);  // expand in the phi basis
SymFunc from_phi(const std::map<Partition, Rat>&);

SymFunc add(SymFunc, const SymFunc&);
SymFunc scale(SymFunc, const Rat&);

SymFunc p_multiply(const SymFunc&, const Partition&);  // multiply by p_lambda
SymFunc p_lower(const SymFunc&, long long n);          // n * d/d p_n, adjoint of p_n *

// Hall pairing <p_mu, p_nu> = z_mu delta
Rat hall(const SymFunc&, const SymFunc&);

SymFunc frob_up(const SymFunc&, long long a);    // p_nu -> p_{a nu}
SymFunc frob_down(const SymFunc&, long long a);  // adjoint: p_{a mu} -> (z_{a mu}/z_mu) p_mu

// p_n * phi_lambda expanded in the phi basis
std::map<Partition, Rat> phi_mult_p(const Partition& la, long long n);
// adjoint: n d/dp_n applied to phi_lambda, in the phi basis
std::map<Partition, Rat> phi_lower_p(const Partition& la, long long n);

}  // namespace fc
