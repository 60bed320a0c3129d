#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockcrystal/crystal.hpp"
#include "fockcrystal/symbol.hpp"
#include "fockcrystal/symfunc.hpp"

namespace fc {

enum class GroupFamily { GU, Sp, SOodd };
inline bool is_bc(GroupFamily g) { return g != GroupFamily::GU; }

// Fock charges of the series-t component of the branching graph
std::vector<long long> gu_charges(long long e, long long t);  // e odd
std::vector<long long> bc_charges(long long d, long long t);  // q-order 2d

// param is e (order of -q) for GU, f (order of q) for BC
QuiverSpec group_quiver(GroupFamily, long long param);
FockContext series_context(GroupFamily, long long param, long long t);
long long series_rank(GroupFamily, long long t, long long mu_size);

struct HeckeInfo {
  long long t = 0;
  std::string q1, q2;      // cyclotomic parameters
  std::string parameter;   // "q^2" or "q"
  std::string relation;    // renormalized rank-1 relation
};
HeckeInfo hecke_parameters(GroupFamily, long long t);

// ---- branching graph ---------------------------------------------------------
struct BranchNode {
  long long t = 0;
  MP mu;
  long long rank = 0;
  bool hw = false;
  std::string id;  // "t:mu1/mu2"
};
struct BranchEdge {
  std::size_t from = 0, to = 0;
  std::string residue;
};
struct BranchGraph {
  GroupFamily fam;
  long long param = 0;
  QuiverSpec spec;
  std::vector<BranchNode> nodes;  // sorted by (rank, t, components)
  std::vector<BranchEdge> edges;
};
std::string node_id(long long t, const MP&);
BranchGraph branching_graph(GroupFamily, long long param, long long max_rank);

// ---- blocks -------------------------------------------------------------------
struct GuBlock {
  Partition core;
  long long weight = 0;
  std::vector<Partition> labels;
};
std::vector<GuBlock> gu_blocks(long long e, long long n);

struct BcBlock {
  ChargedSymbol core;  // d-core (odd q-order) or d-cocore (even q-order)
  long long weight = 0;
  std::vector<ChargedSymbol> labels;
};
std::vector<BcBlock> bc_blocks(long long f, long long n);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};
// weight attached to a unipotent label through the companion circle quiver
Weight gu_label_weight(long long e, const Partition&);
// the block partition and the weight-fiber partition of the labels coincide
CheckReport gu_block_weight_check(long long e, long long n);
CheckReport bc_block_weight_check(long long f, long long n);  // f even

// ---- Brauer trees (weight-1 BC blocks) -----------------------------------------
struct BrauerTree {
  ChargedSymbol core;
  std::vector<ChargedSymbol> left;   // ordered walk toward the exceptional vertex
  std::vector<ChargedSymbol> right;  // ordered walk away from it
};
BrauerTree brauer_tree(long long f, const BcBlock&);

// ---- Heisenberg transport -------------------------------------------------------
// (b_n x 1 + 1 x b_n) on the level-2 basis, each factor acting through phi
FockVec level2_mult_p(const FockVec&, long long n);
FockVec level2_lower_p(const FockVec&, long long n);
// |mu, t> -> sign * phi_{Lambda}: sign from the a-statistic of the composed partition
std::pair<Rat, Partition> intertwine_basis(long long t, const MP&);
std::map<Partition, Rat> intertwine_phi(long long t, const FockVec&);

// ---- cuspidal counting ------------------------------------------------------------
struct HwKernel {
  long long dim = 0;
  std::vector<std::string> basis_node_ids;  // column labels of the kernel
  std::vector<std::vector<Rat>> basis;
};
// joint kernel at rank n of every e_i together with the lowering operators of
// index 2em, transported to symmetric functions
HwKernel gu_hw_kernel(long long e, long long n, int row_order = 0);
long long gu_hw_crystal_count(long long e, long long n);

std::vector<Partition> gl_cuspidal_partitions(long long m, long long e, long long ell);
// digits (m_-1, m_0, m_1, ...) of a cuspidal partition; trailing zeros trimmed
std::vector<long long> gl_cuspidal_type(const Partition&, long long e, long long ell);
std::string hecke_factorization(const std::vector<long long>& type);

struct CuspidalReport {
  long long rank = 0;
  std::vector<std::string> weakly;  // highest-weight node ids at this rank
  bool has_dim = false;
  long long cuspidal_dim = 0;
};
CuspidalReport cuspidal_report(GroupFamily, long long param, long long n);

}  // namespace fc
