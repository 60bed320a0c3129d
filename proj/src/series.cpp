#include "fockcrystal/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fockcrystal/linalg.hpp"

namespace fc {

std::vector<long long> gu_charges(long long e, long long t) {
  if (e < 3 || e % 2 == 0)
    throw unsupported_error("unitary branching needs an odd multiplicative order >= 3");
  if (t < 0) throw std::invalid_argument("series index must be >= 0");
  auto sig = staircase_charges(t);
  return {-(e + 1) / 2 + sig[0], sig[1]};
}

std::vector<long long> bc_charges(long long d, long long t) {
  if (d < 1) throw std::invalid_argument("cohook length must be >= 1");
  if (t < 0) throw std::invalid_argument("series index must be >= 0");
  if (t % 2 == 0) return {t, d - 1 - t};
  return {t - d, -1 - t};
}

QuiverSpec group_quiver(GroupFamily g, long long param) {
  if (g == GroupFamily::GU) return QuiverSpec::gu_mod(param);
  return QuiverSpec::bc_mod(param);
}

FockContext series_context(GroupFamily g, long long param, long long t) {
  if (g == GroupFamily::GU) return FockContext{QuiverSpec::gu_mod(param), gu_charges(param, t)};
  if (param % 2 != 0)
    throw unsupported_error("symplectic/orthogonal branching needs an even multiplicative order");
  return FockContext{QuiverSpec::bc_mod(param), bc_charges(param / 2, t)};
}

long long series_rank(GroupFamily g, long long t, long long mu_size) {
  if (g == GroupFamily::GU) return t * (t + 1) / 2 + 2 * mu_size;
  return t * (t + 1) + mu_size;
}

HeckeInfo hecke_parameters(GroupFamily g, long long t) {
  if (t < 0) throw std::invalid_argument("series index must be >= 0");
  HeckeInfo h;
  h.t = t;
  QuiverSpec c0 = g == GroupFamily::GU ? QuiverSpec::gu_char0() : QuiverSpec::bc_char0();
  long long a = t, b = -1 - t;  // exponents of -q
  if (g == GroupFamily::GU && t % 2 == 0) std::swap(a, b);
  auto mk = [&](long long m) {
    if (g == GroupFamily::GU) return from_mq_exponent(c0, m);
    return normalize(c0, imod(m, 2) == 0 ? 1 : -1, m);
  };
  h.q1 = residue_str(c0, mk(a));
  h.q2 = residue_str(c0, mk(b));
  h.parameter = g == GroupFamily::GU ? "q^2" : "q";
  std::ostringstream rel;
  rel << "(T0+1)(T0-q^" << 2 * t + 1 << ")=0";
  h.relation = rel.str();
  return h;
}

std::string node_id(long long t, const MP& mu) {
  std::ostringstream os;
  os << t << ":" << mu[0].str() << "/" << mu[1].str();
  return os.str();
}

BranchGraph branching_graph(GroupFamily g, long long param, long long max_rank) {
  if (max_rank < 0) throw std::invalid_argument("max rank must be >= 0");
  BranchGraph graph;
  graph.fam = g;
  graph.param = param;
  graph.spec = group_quiver(g, param);
  if (g != GroupFamily::GU && param % 2 != 0)
    throw unsupported_error("symplectic/orthogonal branching needs an even multiplicative order");

  struct Key {
    long long t;
    MP mu;
    bool operator<(const Key& o) const {
      if (t != o.t) return t < o.t;
      return mu < o.mu;
    }
  };
  std::map<Key, std::size_t> index;

  for (long long t = 0; series_rank(g, t, 0) <= max_rank; ++t) {
    FockContext ctx = series_context(g, param, t);
    long long base = series_rank(g, t, 0);
    long long step = g == GroupFamily::GU ? 2 : 1;
    for (long long m = 0; base + step * m <= max_rank; ++m) {
      for (auto& mu : bipartitions_of(m)) {
        BranchNode node;
        node.t = t;
        node.mu = {mu[0], mu[1]};
        node.rank = base + step * m;
        node.hw = is_highest_weight(ctx, node.mu);
        node.id = node_id(t, node.mu);
        graph.nodes.push_back(std::move(node));
      }
    }
  }
  std::sort(graph.nodes.begin(), graph.nodes.end(), [](const BranchNode& a, const BranchNode& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.t != b.t) return a.t < b.t;
    return a.mu < b.mu;
  });
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    index[Key{graph.nodes[i].t, graph.nodes[i].mu}] = i;

  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const BranchNode& node = graph.nodes[i];
    FockContext ctx = series_context(g, param, node.t);
    for (const Residue& v : vertices(graph.spec)) {
      auto up = f_tilde(ctx, node.mu, v);
      if (!up) continue;
      auto it = index.find(Key{node.t, *up});
      if (it == index.end()) continue;  // beyond the rank window
      graph.edges.push_back(BranchEdge{i, it->second, residue_str(graph.spec, v)});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const BranchEdge& a, const BranchEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.residue < b.residue;
  });
  return graph;
}

std::vector<GuBlock> gu_blocks(long long e, long long n) {
  if (e < 2) throw std::invalid_argument("multiplicative order must be >= 2");
  if (n < 0) throw std::invalid_argument("rank must be >= 0");
  std::map<Partition, GuBlock> by_core;
  for (auto& la : partitions_of(n)) {
    CoreQuotient cq = e_core_quotient(la, e);
    auto it = by_core.find(cq.core);
    if (it == by_core.end()) {
      GuBlock b;
      b.core = cq.core;
      b.weight = cq.weight;
      b.labels = {la};
      by_core.emplace(cq.core, std::move(b));
    } else {
      it->second.labels.push_back(la);
    }
  }
  std::vector<GuBlock> out;
  for (auto& [core, b] : by_core) {
    std::sort(b.labels.begin(), b.labels.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const GuBlock& a, const GuBlock& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.core < b.core;
  });
  return out;
}

std::vector<BcBlock> bc_blocks(long long f, long long n) {
  if (f < 2) throw std::invalid_argument("multiplicative order must be >= 2");
  if (n < 0) throw std::invalid_argument("rank must be >= 0");
  bool odd = f % 2 != 0;
  long long d = odd ? f : f / 2;
  std::map<ChargedSymbol, BcBlock> by_core;
  for (auto& sym : symbols_of_rank(n)) {
    ChargedSymbol core = odd ? d_core(sym, d) : d_cocore(sym, d);
    long long w = (rank(sym) - rank(core)) / d;
    auto it = by_core.find(core);
    if (it == by_core.end()) {
      BcBlock b;
      b.core = core;
      b.weight = w;
      b.labels = {sym};
      by_core.emplace(core, std::move(b));
    } else {
      if (it->second.weight != w) throw std::logic_error("inconsistent block weight");
      it->second.labels.push_back(sym);
    }
  }
  std::vector<BcBlock> out;
  for (auto& [core, b] : by_core) {
    std::sort(b.labels.begin(), b.labels.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BcBlock& a, const BcBlock& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.core < b.core;
  });
  return out;
}

Weight gu_label_weight(long long e, const Partition& la) {
  QuiverSpec circle = QuiverSpec::gu_circle(e);
  FockContext ctx{circle, {0}};
  Weight w = weight_of(ctx, {la});
  return kappa_star(w);
}

namespace {

// the two set partitions of `labels` induced by the key maps agree
template <class L, class KeyA, class KeyB>
CheckReport compare_fibers(const std::vector<L>& labels, KeyA key_a, KeyB key_b,
                           std::string (*render)(const L&)) {
  CheckReport rep;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      bool same_a = key_a(labels[i]) == key_a(labels[j]);
      bool same_b = key_b(labels[i]) == key_b(labels[j]);
      if (same_a == same_b) continue;
      rep.ok = false;
      std::ostringstream os;
      os << render(labels[i]) << " vs " << render(labels[j]) << ": "
         << (same_a ? "same block, different weight" : "same weight, different block");
      rep.mismatches.push_back(os.str());
    }
  return rep;
}

std::string weight_key(const Weight& w) { return weight_json(w); }

std::string render_partition(const Partition& la) { return la.str(); }
std::string render_symbol(const ChargedSymbol& s) { return symbol_str(s); }

}  // namespace

CheckReport gu_block_weight_check(long long e, long long n) {
  std::vector<Partition> labels = partitions_of(n);
  std::map<std::string, std::string> block_key, wt_key;
  for (auto& la : labels) {
    CoreQuotient cq = e_core_quotient(la, e);
    std::string bk = cq.core.str() + "#" + std::to_string(cq.weight);
    if (e % 2 == 0) {
      // even order: the weight separates blocks only within one 2-core series
      bk += "@" + e_core_quotient(la, 2).core.str();
    }
    block_key[la.str()] = bk;
    std::string wk = weight_key(gu_label_weight(e, la));
    if (e % 2 == 0) wk += "@" + e_core_quotient(la, 2).core.str();
    wt_key[la.str()] = wk;
  }
  return compare_fibers(
      labels, [&](const Partition& la) { return block_key.at(la.str()); },
      [&](const Partition& la) { return wt_key.at(la.str()); }, render_partition);
}

CheckReport bc_block_weight_check(long long f, long long n) {
  if (f % 2 != 0) throw unsupported_error("weight fibers need an even multiplicative order");
  long long d = f / 2;
  std::vector<ChargedSymbol> labels = symbols_of_rank(n);
  std::map<std::string, std::string> block_key, wt_key;
  for (auto& s : labels) {
    block_key[symbol_str(s)] = symbol_str(d_cocore(s, d));
    wt_key[symbol_str(s)] = weight_key(symbol_weight(s, d));
  }
  return compare_fibers(
      labels, [&](const ChargedSymbol& s) { return block_key.at(symbol_str(s)); },
      [&](const ChargedSymbol& s) { return wt_key.at(symbol_str(s)); }, render_symbol);
}

BrauerTree brauer_tree(long long f, const BcBlock& block) {
  if (f < 2) throw std::invalid_argument("multiplicative order must be >= 2");
  if (block.weight != 1) throw std::invalid_argument("Brauer tree needs a weight-1 block");
  BrauerTree tree;
  tree.core = block.core;
  bool odd = f % 2 != 0;
  long long d = odd ? f : f / 2;
  std::vector<std::pair<long long, ChargedSymbol>> left, right;
  if (odd) {
    left = d_hook_additions(block.core, d, 1);
    right = d_hook_additions(block.core, d, 2);
  } else {
    left = d_cohook_additions(block.core, d, 2);
    right = d_cohook_additions(block.core, d, 1);
  }
  // left arm walks down toward the exceptional vertex
  std::sort(left.begin(), left.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::sort(right.begin(), right.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::set<ChargedSymbol> expected(block.labels.begin(), block.labels.end());
  std::set<ChargedSymbol> got;
  for (auto& [x, s] : left) {
    tree.left.push_back(s);
    got.insert(s);
  }
  for (auto& [x, s] : right) {
    tree.right.push_back(s);
    got.insert(s);
  }
  if (got != expected) throw std::logic_error("tree vertices do not exhaust the block");
  return tree;
}

FockVec level2_mult_p(const FockVec& v, long long n) {
  FockVec out;
  for (auto& [mp, c] : v) {
    if (mp.size() != 2) throw std::invalid_argument("level-2 vector expected");
    for (int p = 0; p < 2; ++p) {
      for (auto& [nu, coef] : phi_mult_p(mp[p], n)) {
        MP key = mp;
        key[p] = nu;
        Rat add = c * coef;
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(key, add);
        else {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

FockVec level2_lower_p(const FockVec& v, long long n) {
  FockVec out;
  for (auto& [mp, c] : v) {
    if (mp.size() != 2) throw std::invalid_argument("level-2 vector expected");
    for (int p = 0; p < 2; ++p) {
      for (auto& [nu, coef] : phi_lower_p(mp[p], n)) {
        MP key = mp;
        key[p] = nu;
        Rat add = c * coef;
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(key, add);
        else {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

std::pair<Rat, Partition> intertwine_basis(long long t, const MP& mu) {
  if (mu.size() != 2) throw std::invalid_argument("level-2 basis vector expected");
  Partition la = from_two_quotient(t, mu[0], mu[1]);
  Rat sign = a_value(la) % 2 == 0 ? Rat(1) : Rat(-1);
  return {sign, la};
}

std::map<Partition, Rat> intertwine_phi(long long t, const FockVec& v) {
  std::map<Partition, Rat> out;
  for (auto& [mp, c] : v) {
    auto [sign, la] = intertwine_basis(t, mp);
    Rat add = c * sign;
    auto it = out.find(la);
    if (it == out.end())
      out.emplace(la, add);
    else {
      it->second += add;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

long long gu_hw_crystal_count(long long e, long long n) {
  long long count = 0;
  for (long long t = 0; series_rank(GroupFamily::GU, t, 0) <= n; ++t) {
    long long rem = n - series_rank(GroupFamily::GU, t, 0);
    if (rem % 2 != 0) continue;
    FockContext ctx = series_context(GroupFamily::GU, e, t);
    for (auto& mu : bipartitions_of(rem / 2))
      if (is_highest_weight(ctx, {mu[0], mu[1]})) ++count;
  }
  return count;
}

HwKernel gu_hw_kernel(long long e, long long n, int row_order) {
  struct Col {
    long long t;
    MP mu;
  };
  std::vector<Col> cols;
  for (long long t = 0; series_rank(GroupFamily::GU, t, 0) <= n; ++t) {
    long long rem = n - series_rank(GroupFamily::GU, t, 0);
    if (rem % 2 != 0) continue;
    for (auto& mu : bipartitions_of(rem / 2)) cols.push_back(Col{t, {mu[0], mu[1]}});
  }
  HwKernel result;
  for (auto& c : cols) result.basis_node_ids.push_back(node_id(c.t, c.mu));
  std::map<std::string, std::vector<Rat>> rows;
  auto row_at = [&](const std::string& id) -> std::vector<Rat>& {
    auto it = rows.find(id);
    if (it == rows.end()) it = rows.emplace(id, std::vector<Rat>(cols.size(), Rat(0))).first;
    return it->second;
  };

  QuiverSpec spec = QuiverSpec::gu_mod(e);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    FockContext ctx = series_context(GroupFamily::GU, e, cols[j].t);
    FockVec unit{{cols[j].mu, Rat(1)}};
    // raising operators: one row per (vertex, target node) pair
    for (const Residue& v : vertices(spec)) {
      for (auto& [nu, coef] : apply_e(ctx, unit, v)) {
        std::string id = "e|" + residue_str(spec, v) + "|" + node_id(cols[j].t, nu);
        row_at(id)[j] += coef;
      }
    }
    // transported lowering operators: rows indexed by power-sum monomials
    auto [sign, la] = intertwine_basis(cols[j].t, cols[j].mu);
    SymFunc f = scale(phi(la), sign);
    for (long long m = 1; 2 * e * m <= n; ++m) {
      SymFunc g = p_lower(f, 2 * e * m);
      for (auto& [rho, coef] : g) {
        std::string id = "b|" + std::to_string(2 * e * m) + "|" + rho.str();
        row_at(id)[j] += coef;
      }
    }
  }

  std::vector<std::vector<Rat>> mat;
  for (auto& [id, row] : rows) mat.push_back(row);
  if (row_order == 1) std::reverse(mat.begin(), mat.end());
  NullspaceResult ns = nullspace(mat, cols.size());
  result.dim = static_cast<long long>(ns.dim);
  result.basis = std::move(ns.basis);
  return result;
}

std::vector<Partition> gl_cuspidal_partitions(long long m, long long e, long long ell) {
  if (m < 0) throw std::invalid_argument("rank must be >= 0");
  if (e < 2 || ell < 2) throw std::invalid_argument("orders must be >= 2");
  std::vector<Partition> out;
  // choose the total e-divisible mass, then its ell-adic spreads; the rest is 1's
  for (long long mass = 0; e * mass <= m; ++mass) {
    long long ones = m - e * mass;
    std::vector<std::vector<long long>> spreads;  // multisets of powers ell^j summing to mass
    std::vector<long long> cur;
    std::function<void(long long, long long)> go = [&](long long rem, long long maxpow) {
      if (rem == 0) {
        spreads.push_back(cur);
        return;
      }
      long long p = 1;
      while (p <= rem && p <= maxpow) p *= ell;
      if (p > rem || p > maxpow) p /= ell;
      for (; p >= 1; p /= ell) {
        cur.push_back(p);
        go(rem - p, p);
        cur.pop_back();
        if (p == 1) break;
      }
    };
    go(mass, mass == 0 ? 1 : mass);
    for (auto& spread : spreads) {
      std::vector<long long> all;
      for (long long p : spread) all.push_back(e * p);
      for (long long i = 0; i < ones; ++i) all.push_back(1);
      std::sort(all.rbegin(), all.rend());
      out.push_back(Partition(all));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long long> gl_cuspidal_type(const Partition& la, long long e, long long ell) {
  if (e < 2 || ell < 2) throw std::invalid_argument("orders must be >= 2");
  std::vector<long long> type{0};  // type[0] = multiplicity of part 1
  for (long long part : la.parts()) {
    if (part == 1) {
      ++type[0];
      continue;
    }
    if (part % e != 0) throw std::invalid_argument("part is neither 1 nor a multiple of " +
                                                   std::to_string(e));
    long long q = part / e;
    long long j = 0;
    while (q % ell == 0) {
      q /= ell;
      ++j;
    }
    if (q != 1) throw std::invalid_argument("part " + std::to_string(part) +
                                            " is not of the admissible shape");
    if (static_cast<long long>(type.size()) < j + 2) type.resize(j + 2, 0);
    ++type[j + 1];
  }
  while (type.size() > 1 && type.back() == 0) type.pop_back();
  return type;
}

std::string hecke_factorization(const std::vector<long long>& type) {
  if (type.empty()) throw std::invalid_argument("empty type");
  std::ostringstream os;
  os << "H(Q_t;q^2)_" << type[0];
  for (std::size_t j = 1; j < type.size(); ++j) os << " (x) H(1,1;1)_" << type[j];
  return os.str();
}

CuspidalReport cuspidal_report(GroupFamily g, long long param, long long n) {
  CuspidalReport rep;
  rep.rank = n;
  for (long long t = 0; series_rank(g, t, 0) <= n; ++t) {
    long long rem = n - series_rank(g, t, 0);
    long long step = g == GroupFamily::GU ? 2 : 1;
    if (rem % step != 0) continue;
    FockContext ctx = series_context(g, param, t);
    for (auto& mu : bipartitions_of(rem / step)) {
      MP node{mu[0], mu[1]};
      if (is_highest_weight(ctx, node)) rep.weakly.push_back(node_id(t, node));
    }
  }
  if (g == GroupFamily::GU) {
    rep.has_dim = true;
    rep.cuspidal_dim = gu_hw_kernel(param, n).dim;
  }
  return rep;
}

}  // namespace fc
