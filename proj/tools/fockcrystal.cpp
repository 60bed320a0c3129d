#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockcrystal/crystal.hpp"
#include "fockcrystal/fock.hpp"
#include "fockcrystal/partition.hpp"
#include "fockcrystal/quiver.hpp"
#include "fockcrystal/series.hpp"
#include "fockcrystal/symbol.hpp"
#include "fockcrystal/symfunc.hpp"
#include "fockcrystal/weight.hpp"

using json = nlohmann::ordered_json;
using namespace fc;

namespace {

struct Options {
  std::string group;
  long long e = -1, f = -1, d = -1;
  long long rank = -1, max_rank = -1;
  long long t = -1;
  long long n = -1;
  long long ell = -1;
  std::string mu = "/";
  std::string format = "json";
  std::string out;
};

GroupFamily family_of(const std::string& g) {
  if (g == "gu") return GroupFamily::GU;
  if (g == "sp") return GroupFamily::Sp;
  if (g == "so-odd") return GroupFamily::SOodd;
  throw std::invalid_argument("unknown group: '" + g + "' (expected gu, sp, or so-odd)");
}

// exactly one arithmetic flag; --d is shorthand for --f = 2d
long long resolve_param(GroupFamily fam, const Options& o) {
  if (fam == GroupFamily::GU) {
    if (o.f >= 0 || o.d >= 0) throw std::invalid_argument("--f/--d do not apply to gu; use --e");
    if (o.e < 0) throw std::invalid_argument("--e is required for gu");
    return o.e;
  }
  if (o.e >= 0) throw std::invalid_argument("--e does not apply to sp/so-odd; use --f or --d");
  if (o.f >= 0 && o.d >= 0) throw std::invalid_argument("give only one of --f, --d");
  if (o.f >= 0) return o.f;
  if (o.d >= 0) return 2 * o.d;
  throw std::invalid_argument("--f or --d is required for sp/so-odd");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw std::invalid_argument("--format " + o.format + " is not supported by this subcommand");
}

std::string mp_str(const MP& mu) { return mu[0].str() + "/" + mu[1].str(); }

MP parse_mp(const std::string& s) {
  auto cut = s.find('/');
  if (cut == std::string::npos || s.find('/', cut + 1) != std::string::npos)
    throw std::invalid_argument("bipartition expected as mu1/mu2, e.g. '2,1/1'");
  return {parse_partition(s.substr(0, cut)), parse_partition(s.substr(cut + 1))};
}

json weight_doc(const Weight& w) { return json::parse(weight_json(w)); }

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---- branch --------------------------------------------------------------

std::string run_branch(const Options& o) {
  require_format(o, {"dot", "json", "tsv"});
  GroupFamily fam = family_of(o.group);
  long long param = resolve_param(fam, o);
  if (o.max_rank < 0) throw std::invalid_argument("--max-rank is required");
  BranchGraph g = branching_graph(fam, param, o.max_rank);
  std::ostringstream os;
  if (o.format == "dot") {
    os << "digraph branching {\n  rankdir=BT;\n";
    for (const auto& n : g.nodes) {
      os << "  \"" << n.id << "\" [label=\"" << n.id << "\"";
      if (n.hw) os << ", peripheries=2";
      os << "];\n";
    }
    for (const auto& e : g.edges)
      os << "  \"" << g.nodes[e.from].id << "\" -> \"" << g.nodes[e.to].id << "\" [label=\""
         << e.residue << "\"];\n";
    os << "}\n";
    return os.str();
  }
  if (o.format == "json") {
    json doc;
    doc["nodes"] = json::array();
    for (const auto& n : g.nodes)
      doc["nodes"].push_back(
          {{"id", n.id}, {"t", n.t}, {"mu", mp_str(n.mu)}, {"rank", n.rank}, {"hw", n.hw}});
    doc["edges"] = json::array();
    for (const auto& e : g.edges)
      doc["edges"].push_back(
          {{"from", g.nodes[e.from].id}, {"to", g.nodes[e.to].id}, {"residue", e.residue}});
    return doc.dump(2) + "\n";
  }
  os << "id\trank\tt\tmu\thw\n";
  for (const auto& n : g.nodes)
    os << n.id << '\t' << n.rank << '\t' << n.t << '\t' << mp_str(n.mu) << '\t' << (n.hw ? 1 : 0)
       << '\n';
  os << "\nfrom\tto\tresidue\n";
  for (const auto& e : g.edges)
    os << g.nodes[e.from].id << '\t' << g.nodes[e.to].id << '\t' << e.residue << '\n';
  return os.str();
}

// ---- blocks --------------------------------------------------------------

std::string run_blocks(const Options& o) {
  require_format(o, {"json", "tsv"});
  GroupFamily fam = family_of(o.group);
  long long param = resolve_param(fam, o);
  if (o.rank < 0) throw std::invalid_argument("--rank is required");
  struct Row {
    std::string core;
    long long weight = 0;
    std::vector<std::string> labels;
  };
  std::vector<Row> rows;
  if (fam == GroupFamily::GU) {
    for (const auto& b : gu_blocks(param, o.rank)) {
      Row r{b.core.str(), b.weight, {}};
      for (const auto& la : b.labels) r.labels.push_back(la.str());
      std::sort(r.labels.begin(), r.labels.end());
      rows.push_back(std::move(r));
    }
  } else {
    for (const auto& b : bc_blocks(param, o.rank)) {
      Row r{symbol_str(b.core), b.weight, {}};
      for (const auto& s : b.labels) r.labels.push_back(symbol_str(s));
      std::sort(r.labels.begin(), r.labels.end());
      rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.core < b.core; });
  if (o.format == "json") {
    json doc = json::array();
    for (const auto& r : rows)
      doc.push_back({{"block", {{"core", r.core}, {"weight", r.weight}}}, {"labels", r.labels}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "core\tweight\tlabel\n";
  for (const auto& r : rows)
    for (const auto& l : r.labels) os << r.core << '\t' << r.weight << '\t' << l << '\n';
  return os.str();
}

// ---- cuspidal ------------------------------------------------------------

std::string run_cuspidal(const Options& o) {
  require_format(o, {"json", "tsv"});
  if (o.rank < 0) throw std::invalid_argument("--rank is required");
  if (o.group == "gl") {
    if (o.f >= 0 || o.d >= 0) throw std::invalid_argument("--f/--d do not apply to gl; use --e");
    if (o.e < 0 || o.ell < 2) throw std::invalid_argument("gl needs --e and --ell >= 2");
    struct Row {
      std::string partition;
      std::vector<long long> type;
      std::string factorization;
    };
    std::vector<Row> rows;
    for (const auto& la : gl_cuspidal_partitions(o.rank, o.e, o.ell)) {
      auto type = gl_cuspidal_type(la, o.e, o.ell);
      rows.push_back({la.str(), type, hecke_factorization(type)});
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.partition < b.partition; });
    if (o.format == "json") {
      json doc;
      doc["rank"] = o.rank;
      doc["e"] = o.e;
      doc["ell"] = o.ell;
      doc["partitions"] = json::array();
      for (const auto& r : rows)
        doc["partitions"].push_back(
            {{"partition", r.partition}, {"type", r.type}, {"factorization", r.factorization}});
      return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "partition\ttype\tfactorization\n";
    for (const auto& r : rows) {
      os << r.partition << '\t';
      for (std::size_t i = 0; i < r.type.size(); ++i) os << (i ? "," : "") << r.type[i];
      os << '\t' << r.factorization << '\n';
    }
    return os.str();
  }
  if (o.ell >= 0) throw std::invalid_argument("--ell applies only to --group gl");
  GroupFamily fam = family_of(o.group);
  long long param = resolve_param(fam, o);
  CuspidalReport rep = cuspidal_report(fam, param, o.rank);
  std::vector<std::string> weakly = rep.weakly;
  std::sort(weakly.begin(), weakly.end());
  if (o.format == "json") {
    json doc;
    doc["rank"] = rep.rank;
    doc["weakly"] = weakly;
    if (rep.has_dim) doc["cuspidal_dim"] = rep.cuspidal_dim;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "rank\t" << rep.rank << '\n';
  for (const auto& id : weakly) os << "weakly\t" << id << '\n';
  if (rep.has_dim) os << "cuspidal_dim\t" << rep.cuspidal_dim << '\n';
  return os.str();
}

// ---- hecke ---------------------------------------------------------------

std::string run_hecke(const Options& o) {
  require_format(o, {"json", "tsv"});
  GroupFamily fam = family_of(o.group);
  if (o.t < 0) throw std::invalid_argument("--t is required");
  HeckeInfo h = hecke_parameters(fam, o.t);
  if (o.format == "json") {
    json doc;
    doc["t"] = h.t;
    doc["q1"] = h.q1;
    doc["q2"] = h.q2;
    doc["parameter"] = h.parameter;
    doc["relation"] = h.relation;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "t\t" << h.t << "\nq1\t" << h.q1 << "\nq2\t" << h.q2 << "\nparameter\t" << h.parameter
     << "\nrelation\t" << h.relation << '\n';
  return os.str();
}

// ---- brauer --------------------------------------------------------------

std::string run_brauer(const Options& o) {
  require_format(o, {"json", "tsv"});
  GroupFamily fam = family_of(o.group);
  if (fam == GroupFamily::GU)
    throw unsupported_error("Brauer trees are computed for sp/so-odd blocks only");
  long long param = resolve_param(fam, o);
  if (o.rank < 0) throw std::invalid_argument("--rank is required");
  std::vector<BrauerTree> trees;
  for (const auto& b : bc_blocks(param, o.rank))
    if (b.weight == 1) trees.push_back(brauer_tree(param, b));
  std::sort(trees.begin(), trees.end(), [](const BrauerTree& a, const BrauerTree& b) {
    return symbol_str(a.core) < symbol_str(b.core);
  });
  if (o.format == "json") {
    json doc = json::array();
    for (const auto& t : trees) {
      json row;
      row["core"] = symbol_str(t.core);
      row["left"] = json::array();
      for (const auto& s : t.left) row["left"].push_back(symbol_str(s));
      row["exceptional"] = true;
      row["right"] = json::array();
      for (const auto& s : t.right) row["right"].push_back(symbol_str(s));
      doc.push_back(row);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "core\tside\tindex\tlabel\n";
  for (const auto& t : trees) {
    std::string core = symbol_str(t.core);
    for (std::size_t i = 0; i < t.left.size(); ++i)
      os << core << "\tleft\t" << i << '\t' << symbol_str(t.left[i]) << '\n';
    os << core << "\texceptional\t0\t*\n";
    for (std::size_t i = 0; i < t.right.size(); ++i)
      os << core << "\tright\t" << i << '\t' << symbol_str(t.right[i]) << '\n';
  }
  return os.str();
}

// ---- crystal-node ----------------------------------------------------------

std::string run_crystal_node(const Options& o) {
  require_format(o, {"json", "tsv"});
  GroupFamily fam = family_of(o.group);
  long long param = resolve_param(fam, o);
  if (o.t < 0) throw std::invalid_argument("--t is required");
  MP mu = parse_mp(o.mu);
  FockContext ctx = series_context(fam, param, o.t);
  long long rank = series_rank(fam, o.t, mu[0].size() + mu[1].size());
  Weight w = weight_of(ctx, mu);
  bool hw = is_highest_weight(ctx, mu);
  std::string id = node_id(o.t, mu);
  std::vector<Residue> verts = vertices(ctx.spec);
  if (o.format == "json") {
    json doc;
    doc["id"] = id;
    doc["t"] = o.t;
    doc["mu"] = mp_str(mu);
    doc["rank"] = rank;
    doc["hw"] = hw;
    doc["weight"] = weight_doc(w);
    json eps = json::object(), phi = json::object();
    json down = json::array(), up = json::array();
    for (const Residue& r : verts) {
      std::string rs = residue_str(ctx.spec, r);
      eps[rs] = eps_value(ctx, mu, r);
      phi[rs] = phi_value(ctx, mu, r);
      if (auto b = e_tilde(ctx, mu, r)) down.push_back({{"residue", rs}, {"to", node_id(o.t, *b)}});
      if (auto b = f_tilde(ctx, mu, r)) up.push_back({{"residue", rs}, {"to", node_id(o.t, *b)}});
    }
    doc["eps"] = eps;
    doc["phi"] = phi;
    doc["e"] = down;
    doc["f"] = up;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "id\t" << id << "\nt\t" << o.t << "\nmu\t" << mp_str(mu) << "\nrank\t" << rank << "\nhw\t"
     << (hw ? 1 : 0) << "\nweight\t" << weight_json(w) << '\n';
  for (const Residue& r : verts)
    os << "eps\t" << residue_str(ctx.spec, r) << '\t' << eps_value(ctx, mu, r) << '\n';
  for (const Residue& r : verts)
    os << "phi\t" << residue_str(ctx.spec, r) << '\t' << phi_value(ctx, mu, r) << '\n';
  for (const Residue& r : verts)
    if (auto b = e_tilde(ctx, mu, r))
      os << "e\t" << residue_str(ctx.spec, r) << '\t' << node_id(o.t, *b) << '\n';
  for (const Residue& r : verts)
    if (auto b = f_tilde(ctx, mu, r))
      os << "f\t" << residue_str(ctx.spec, r) << '\t' << node_id(o.t, *b) << '\n';
  return os.str();
}

// ---- char-table -------------------------------------------------------------

std::string run_char_table(const Options& o) {
  require_format(o, {"json", "tsv"});
  if (o.n < 0) throw std::invalid_argument("--n is required");
  const CharTable& tbl = char_table(o.n);
  if (o.format == "json") {
    json doc;
    doc["degree"] = o.n;
    doc["classes"] = json::array();
    for (const auto& c : tbl.parts) doc["classes"].push_back(c.str());
    doc["rows"] = json::array();
    for (std::size_t i = 0; i < tbl.parts.size(); ++i) {
      json vals = json::array();
      for (const auto& v : tbl.chi[i]) vals.push_back(int_str(v));
      doc["rows"].push_back({{"label", tbl.parts[i].str()}, {"values", vals}});
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "label";
  for (const auto& c : tbl.parts) os << '\t' << c.str();
  os << '\n';
  for (std::size_t i = 0; i < tbl.parts.size(); ++i) {
    os << tbl.parts[i].str();
    for (const auto& v : tbl.chi[i]) os << '\t' << v;
    os << '\n';
  }
  return os.str();
}

// ---- selftest -------------------------------------------------------------

void self_check(bool ok, const std::string& name) {
  if (!ok) throw std::logic_error("selftest failed: " + name);
}

std::string run_selftest(const Options&) {
  std::ostringstream os;

  // quotient towers: round trip, charge bookkeeping, staircase split
  for (long long n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (long long l : {2LL, 3LL})
        for (long long d = -2; d <= 2; ++d) {
          ChargedMulti q = beta_quotient(la, d, l);
          long long sum = 0;
          for (long long s : q.charges) sum += s;
          auto back = beta_compose(q);
          self_check(sum == d && back.first == la && back.second == d, "quotient towers");
        }
  for (long long t = 0; t <= 8; ++t) {
    ChargedMulti q = beta_quotient(staircase(t), 0, 2);
    auto sigma = staircase_charges(t);
    self_check(q.mu[0].size() == 0 && q.mu[1].size() == 0 && q.charges[0] == sigma[0] &&
                   q.charges[1] == sigma[1],
               "quotient towers");
  }
  os << "ok quotient towers\n";

  // crystal steps: phi - eps pairs with the coroot, and e undoes f
  for (GroupFamily fam : {GroupFamily::GU, GroupFamily::Sp}) {
    long long param = fam == GroupFamily::GU ? 3 : 4;
    for (long long t = 0; t <= 1; ++t) {
      FockContext ctx = series_context(fam, param, t);
      for (long long m = 0; m <= 3; ++m)
        for (const auto& bp : bipartitions_of(m)) {
          MP mu = {bp[0], bp[1]};
          Weight w = weight_of(ctx, mu);
          for (const Residue& r : vertices(ctx.spec)) {
            long long phi = phi_value(ctx, mu, r), eps = eps_value(ctx, mu, r);
            self_check(phi - eps == alpha_pairing(w, r), "crystal steps");
            if (auto up = f_tilde(ctx, mu, r)) {
              auto back = e_tilde(ctx, *up, r);
              self_check(back && *back == mu, "crystal steps");
            }
          }
        }
    }
  }
  os << "ok crystal steps\n";

  // symbol weights: one cohook off costs a twist and half a delta
  for (long long n = 0; n <= 4; ++n)
    for (const auto& sym : symbols_of_rank(n))
      for (const auto& h : d_cohooks(sym, 2)) {
        Weight expect = sigma_twist(symbol_weight(remove_d_cohook(sym, h, 2), 2));
        expect.delta -= Rat(1, 2);
        self_check(symbol_weight(sym, 2) == expect, "symbol weights");
      }
  os << "ok symbol weights\n";

  // character tables: column orthogonality
  for (long long m = 1; m <= 5; ++m) {
    const CharTable& tbl = char_table(m);
    for (std::size_t a = 0; a < tbl.parts.size(); ++a)
      for (std::size_t b = a; b < tbl.parts.size(); ++b) {
        Rat sum = 0;
        for (std::size_t i = 0; i < tbl.parts.size(); ++i)
          sum += Rat(tbl.chi[i][a]) * Rat(tbl.chi[i][b]);
        self_check(sum == (a == b ? z_value(tbl.parts[a]) : Rat(0)), "character tables");
      }
  }
  os << "ok character tables\n";

  // block partitions match weight fibers on both series
  self_check(gu_block_weight_check(3, 6).ok, "block weight fibers");
  self_check(bc_block_weight_check(4, 4).ok, "block weight fibers");
  os << "ok block weight fibers\n";

  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of charged Fock spaces, crystals, symbols, and blocks"};
  app.require_subcommand(1);
  Options o;
  std::string command;

  auto bind = [&](CLI::App* c, bool arith) {
    c->add_option("--group", o.group, "group family: gu | sp | so-odd");
    if (arith) {
      c->add_option("--e", o.e, "order of -q (gu)");
      c->add_option("--f", o.f, "order of q (sp/so-odd)");
      c->add_option("--d", o.d, "order of q^2; shorthand for --f 2d");
    }
    c->add_option("--format", o.format, "output format: dot | json | tsv");
    c->add_option("-o,--output", o.out, "write to a file instead of stdout");
    c->callback([&command, c] { command = c->get_name(); });
  };

  CLI::App* branch = app.add_subcommand("branch", "branching graph of crystal nodes up to a rank");
  bind(branch, true);
  branch->add_option("--max-rank", o.max_rank, "largest rank level to include");

  CLI::App* blocks = app.add_subcommand("blocks", "block partition of the labels at one rank");
  bind(blocks, true);
  blocks->add_option("--rank", o.rank, "rank of the labels");

  CLI::App* cuspidal = app.add_subcommand("cuspidal", "weakly cuspidal nodes and cuspidal counts");
  bind(cuspidal, true);
  cuspidal->add_option("--rank", o.rank, "rank to report");
  cuspidal->add_option("--ell", o.ell, "prime power base (gl only)");

  CLI::App* hecke = app.add_subcommand("hecke", "Hecke parameters of a series");
  bind(hecke, false);
  hecke->add_option("--t", o.t, "series index");

  CLI::App* brauer = app.add_subcommand("brauer", "Brauer trees of the weight-1 blocks at a rank");
  bind(brauer, true);
  brauer->add_option("--rank", o.rank, "rank of the labels");

  CLI::App* node = app.add_subcommand("crystal-node", "weight and neighbors of one crystal node");
  bind(node, true);
  node->add_option("--t", o.t, "series index");
  node->add_option("--mu", o.mu, "bipartition label, e.g. '2,1/1' ('/' for empty)");

  CLI::App* table = app.add_subcommand("char-table", "symmetric group character table");
  bind(table, false);
  table->add_option("--n", o.n, "degree");

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->callback([&command] { command = "selftest"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string doc;
    if (command == "branch") doc = run_branch(o);
    else if (command == "blocks") doc = run_blocks(o);
    else if (command == "cuspidal") doc = run_cuspidal(o);
    else if (command == "hecke") doc = run_hecke(o);
    else if (command == "brauer") doc = run_brauer(o);
    else if (command == "crystal-node") doc = run_crystal_node(o);
    else if (command == "char-table") doc = run_char_table(o);
    else doc = run_selftest(o);
    emit(o, doc);
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
