#include "fockcrystal/symbol.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fockcrystal/fock.hpp"

namespace fc {

ChargedSymbol make_symbol(long long t, Partition mu1, Partition mu2) {
  if (t < 0) throw std::invalid_argument("canonical symbols need t >= 0");
  return ChargedSymbol{t, std::move(mu1), std::move(mu2)};
}

ChargedRows rows_of(const ChargedSymbol& s) { return {s.t, -1 - s.t, s.mu1, s.mu2}; }

ChargedRows shifted(const ChargedRows& cr, long long m) {
  return {cr.c1 + m, cr.c2 + m, cr.r1, cr.r2};
}

ChargedRows flipped(const ChargedRows& cr) { return {cr.c2, cr.c1, cr.r2, cr.r1}; }

ChargedSymbol canonicalize(const ChargedRows& cr) {
  long long sum = cr.c1 + cr.c2;
  if (imod(sum, 2) != 1)
    throw std::invalid_argument("charged symbol needs an odd charge sum");
  long long m = (-1 - sum) / 2;
  long long c1 = cr.c1 + m;
  if (c1 >= 0) return ChargedSymbol{c1, cr.r1, cr.r2};
  return ChargedSymbol{-1 - c1, cr.r2, cr.r1};
}

long long defect(const ChargedSymbol& s) { return 2 * s.t + 1; }

long long rank(const ChargedSymbol& s) {
  return s.mu1.size() + s.mu2.size() + s.t * (s.t + 1);
}

std::string symbol_str(const ChargedSymbol& s) {
  std::ostringstream os;
  os << s.t << ':' << s.mu1.str() << '/' << s.mu2.str();
  return os.str();
}

ChargedSymbol parse_symbol(const std::string& str) {
  auto colon = str.find(':');
  auto slash = str.find('/', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || slash == std::string::npos)
    throw std::invalid_argument("symbol format is t:mu1/mu2");
  std::size_t pos = 0;
  long long t = std::stoll(str.substr(0, colon), &pos);
  if (pos != colon) throw std::invalid_argument("bad symbol charge: " + str);
  Partition m1 = parse_partition(str.substr(colon + 1, slash - colon - 1));
  Partition m2 = parse_partition(str.substr(slash + 1));
  return make_symbol(t, m1, m2);
}

std::string symbol_pretty(const ChargedSymbol& s, std::size_t window) {
  auto row = [&](const Partition& mu, long long c) {
    std::ostringstream os;
    auto w = beta_window(mu, c, window);
    for (std::size_t u = 0; u < w.size(); ++u) {
      if (u) os << ',';
      os << w[u];
    }
    os << ",...";
    return os.str();
  };
  return "{" + row(s.mu1, s.t) + " / " + row(s.mu2, -1 - s.t) + "}";
}

std::vector<RowHook> d_hooks(const ChargedSymbol& s, long long d) {
  std::vector<RowHook> out;
  for (const Hook& h : e_hooks(s.mu1, s.t, d)) out.push_back({1, h});
  for (const Hook& h : e_hooks(s.mu2, -1 - s.t, d)) out.push_back({2, h});
  std::sort(out.begin(), out.end(), [](const RowHook& a, const RowHook& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.row < b.row;
  });
  return out;
}

ChargedSymbol remove_d_hook(const ChargedSymbol& s, const RowHook& rh, long long d) {
  ChargedSymbol out = s;
  if (rh.row == 1)
    out.mu1 = remove_e_hook(s.mu1, s.t, rh.h, d);
  else
    out.mu2 = remove_e_hook(s.mu2, -1 - s.t, rh.h, d);
  return out;
}

ChargedSymbol d_core(const ChargedSymbol& s, long long d) {
  ChargedSymbol cur = s;
  for (;;) {
    auto hooks = d_hooks(cur, d);
    if (hooks.empty()) return cur;
    // greedy: largest x, row 1 before row 2 on ties
    RowHook best = hooks.front();
    for (const RowHook& rh : hooks)
      if (rh.h.first > best.h.first || (rh.h.first == best.h.first && rh.row < best.row))
        best = rh;
    cur = remove_d_hook(cur, best, d);
  }
}

namespace {
// beads of (mu, c) that are >= lo, descending
std::vector<long long> beads_down_to(const Partition& mu, long long c, long long lo) {
  std::vector<long long> out;
  for (std::size_t u = 1;; ++u) {
    long long b = mu.row(u) + c + 1 - static_cast<long long>(u);
    if (b < lo) break;
    out.push_back(b);
  }
  return out;
}

struct RowData {
  long long charge;
  const Partition* mu;
  long long tail;  // every integer <= tail is a bead
};

RowData row_data(const ChargedSymbol& s, int row) {
  if (row == 1)
    return {s.t, &s.mu1, s.t - static_cast<long long>(s.mu1.length())};
  return {-1 - s.t, &s.mu2, -1 - s.t - static_cast<long long>(s.mu2.length())};
}
}  // namespace

std::vector<Cohook> d_cohooks(const ChargedSymbol& s, long long d) {
  if (d <= 0) throw std::invalid_argument("cohook length must be positive");
  std::vector<Cohook> out;
  for (int from : {1, 2}) {
    RowData a = row_data(s, from);
    RowData b = row_data(s, from == 1 ? 2 : 1);
    // bead x+d in row `from`, x not a bead of the other row (so x > b.tail)
    for (long long bead : beads_down_to(*a.mu, a.charge, b.tail + 1 + d))
      if (!beta_member(*b.mu, b.charge, bead - d)) out.push_back({bead - d, from});
  }
  std::sort(out.begin(), out.end(), [](const Cohook& a, const Cohook& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.from_row < b.from_row;
  });
  return out;
}

namespace {
ChargedSymbol move_bead(const ChargedSymbol& s, int from_row, long long bead_out,
                        long long bead_in) {
  RowData a = row_data(s, from_row);
  RowData b = row_data(s, from_row == 1 ? 2 : 1);
  long long T = std::min({a.tail, b.tail, bead_in, bead_out}) - 2;
  auto wa = beads_down_to(*a.mu, a.charge, T + 1);
  auto wb = beads_down_to(*b.mu, b.charge, T + 1);
  auto it = std::find(wa.begin(), wa.end(), bead_out);
  if (it == wa.end()) throw std::logic_error("bead to remove is missing");
  wa.erase(it);
  wb.push_back(bead_in);
  std::sort(wb.rbegin(), wb.rend());
  auto [ma, ca] = partition_from_window(wa);
  auto [mb, cb] = partition_from_window(wb);
  ChargedRows cr;
  if (from_row == 1) {
    cr = {ca, cb, ma, mb};
  } else {
    cr = {cb, ca, mb, ma};
  }
  return canonicalize(cr);
}
}  // namespace

ChargedSymbol remove_d_cohook(const ChargedSymbol& s, const Cohook& ch, long long d) {
  RowData a = row_data(s, ch.from_row);
  RowData b = row_data(s, ch.from_row == 1 ? 2 : 1);
  if (!beta_member(*a.mu, a.charge, ch.x + d) || beta_member(*b.mu, b.charge, ch.x))
    throw std::invalid_argument("not a removable cohook");
  ChargedSymbol out = move_bead(s, ch.from_row, ch.x + d, ch.x);
  if (rank(out) != rank(s) - d) throw std::logic_error("cohook removal must drop the rank by d");
  return out;
}

std::vector<std::pair<long long, ChargedSymbol>> d_cohook_additions(const ChargedSymbol& s,
                                                                    long long d, int into_row) {
  if (into_row != 1 && into_row != 2) throw std::invalid_argument("row must be 1 or 2");
  RowData a = row_data(s, into_row);              // gains bead x + d
  int other = into_row == 1 ? 2 : 1;
  RowData b = row_data(s, other);                 // loses bead x
  std::vector<std::pair<long long, ChargedSymbol>> out;
  // x in the other row with x + d not a bead of into_row (so x + d > a.tail)
  for (long long x : beads_down_to(*b.mu, b.charge, a.tail + 1 - d))
    if (!beta_member(*a.mu, a.charge, x + d)) {
      ChargedSymbol sym = move_bead(s, other, x, x + d);
      if (rank(sym) != rank(s) + d) throw std::logic_error("cohook addition must raise the rank by d");
      out.push_back({x, sym});
    }
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

std::vector<std::pair<long long, ChargedSymbol>> d_hook_additions(const ChargedSymbol& s,
                                                                  long long d, int into_row) {
  if (into_row != 1 && into_row != 2) throw std::invalid_argument("row must be 1 or 2");
  RowData a = row_data(s, into_row);
  std::vector<std::pair<long long, ChargedSymbol>> out;
  // bead x of the row with x + d not a bead: slide it up by d
  for (long long x : beads_down_to(*a.mu, a.charge, a.tail - d + 1))
    if (!beta_member(*a.mu, a.charge, x + d)) {
      long long T = std::min(a.tail, x) - 2;
      auto w = beads_down_to(*a.mu, a.charge, T + 1);
      auto it = std::find(w.begin(), w.end(), x);
      if (it == w.end()) throw std::logic_error("bead to slide is missing");
      *it = x + d;
      std::sort(w.rbegin(), w.rend());
      Partition moved = partition_from_window(w, a.charge);
      ChargedSymbol sym = s;
      (into_row == 1 ? sym.mu1 : sym.mu2) = moved;
      out.push_back({x, sym});
    }
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

ChargedSymbol d_cocore(const ChargedSymbol& s, long long d) {
  ChargedSymbol cur = s;
  for (;;) {
    auto hooks = d_cohooks(cur, d);
    if (hooks.empty()) return cur;
    Cohook best = hooks.front();
    for (const Cohook& ch : hooks)
      if (ch.x > best.x || (ch.x == best.x && ch.from_row < best.from_row)) best = ch;
    cur = remove_d_cohook(cur, best, d);
  }
}

std::vector<long long> kappa_window(const ChargedSymbol& s, std::size_t n) {
  auto w1 = beta_window(s.mu1, s.t, n);
  auto w2 = beta_window(s.mu2, -1 - s.t, n);
  std::vector<long long> merged;
  merged.reserve(2 * n);
  merged.insert(merged.end(), w1.begin(), w1.end());
  merged.insert(merged.end(), w2.begin(), w2.end());
  std::sort(merged.rbegin(), merged.rend());
  merged.resize(n);
  return merged;
}

namespace {
std::size_t stable_kappa_length(const ChargedSymbol& s) {
  std::size_t len = std::max(s.mu1.length(), s.mu2.length());
  return 2 * (len + static_cast<std::size_t>(s.t) + 3);
}
}  // namespace

long long symbol_a_value(const ChargedSymbol& s) {
  std::size_t n = stable_kappa_length(s);
  auto kappa = kappa_window(s, n);
  long long a = 0;
  for (std::size_t i = 1; i <= n; ++i)
    a += static_cast<long long>(i - 1) *
         (kappa[i - 1] + static_cast<long long>(i / 2));
  for (std::size_t i = n - 1; i <= n; ++i)
    if (kappa[i - 1] + static_cast<long long>(i / 2) != 0)
      throw std::logic_error("kappa tail has not stabilized");
  return a;
}

bool symbol_order_leq(const ChargedSymbol& a, const ChargedSymbol& b) {
  if (a.t != b.t || rank(a) != rank(b))
    throw std::invalid_argument("the symbol order compares equal charge and rank only");
  if (a == b) return true;
  std::size_t n = std::max(stable_kappa_length(a), stable_kappa_length(b));
  auto ka = kappa_window(a, n);
  auto kb = kappa_window(b, n);
  long long sa = 0, sb = 0;
  bool strict = false;
  for (std::size_t i = 0; i < n; ++i) {
    sa += ka[i];
    sb += kb[i];
    if (sb > sa) return false;
    if (sb < sa) strict = true;
  }
  return strict;
}

Weight symbol_weight(const ChargedSymbol& s, long long d) {
  // evaluate on the d-cocore, then transport back along the cohook chain:
  // each addition twists by sigma and costs delta/2; evaluating the formula
  // directly on s is row-order sensitive (a chain crossing the swap at t = 0
  // lands delta/2 away), transport makes the value chain-consistent
  ChargedSymbol core = d_cocore(s, d);
  FockContext ctx{QuiverSpec::bc_mod(2 * d), {core.t, d - 1 - core.t}};
  Weight w = weight_of(ctx, {core.mu1, core.mu2});
  w.delta -= Rat(core.t, 2);
  if (imod(core.t, 2) == 1) w = sigma_twist(w);
  long long steps = (rank(s) - rank(core)) / d;
  if (imod(steps, 2) == 1) w = sigma_twist(w);
  w.delta -= Rat(steps, 2);
  return w;
}

std::vector<ChargedSymbol> symbols_of_rank(long long n) {
  std::vector<ChargedSymbol> out;
  for (long long t = 0; t * (t + 1) <= n; ++t)
    for (const auto& bp : bipartitions_of(n - t * (t + 1)))
      out.push_back(make_symbol(t, bp[0], bp[1]));
  return out;
}

}  // namespace fc
