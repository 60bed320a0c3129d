#include "fockcrystal/fock.hpp"

#include <stdexcept>

namespace fc {

long long box_content(const FockContext& ctx, const Box& b) {
  return ctx.charges.at(b.p) + b.y - b.x;
}

Residue box_residue(const FockContext& ctx, const Box& b) {
  return from_v_exponent(ctx.spec, box_content(ctx, b));
}

std::vector<Box> addable_boxes(const FockContext& ctx, const MP& mp, const Residue& i) {
  if (mp.size() != ctx.level()) throw std::invalid_argument("component count mismatch");
  std::vector<Box> out;
  for (std::size_t p = 0; p < mp.size(); ++p) {
    const Partition& mu = mp[p];
    for (std::size_t x = 1; x <= mu.length() + 1; ++x) {
      if (x > 1 && mu.row(x - 1) <= mu.row(x)) continue;  // would break monotonicity
      Box b{static_cast<long long>(x), mu.row(x) + 1, p};
      if (box_residue(ctx, b) == i) out.push_back(b);
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const FockContext& ctx, const MP& mp, const Residue& i) {
  if (mp.size() != ctx.level()) throw std::invalid_argument("component count mismatch");
  std::vector<Box> out;
  for (std::size_t p = 0; p < mp.size(); ++p) {
    const Partition& mu = mp[p];
    for (std::size_t x = 1; x <= mu.length(); ++x) {
      if (mu.row(x) <= mu.row(x + 1)) continue;
      Box b{static_cast<long long>(x), mu.row(x), p};
      if (box_residue(ctx, b) == i) out.push_back(b);
    }
  }
  return out;
}

namespace {
MP replace_row(const MP& mp, const Box& b, long long newlen) {
  MP out = mp;
  std::vector<long long> parts = out[b.p].parts();
  std::size_t x = static_cast<std::size_t>(b.x);
  if (x > parts.size()) parts.resize(x, 0);
  parts[x - 1] = newlen;
  out[b.p] = Partition(parts);  // validates shape
  return out;
}
}  // namespace

MP add_box(const MP& mp, const Box& b) { return replace_row(mp, b, b.y); }
MP remove_box(const MP& mp, const Box& b) { return replace_row(mp, b, b.y - 1); }

namespace {
template <typename Lister, typename Mover>
FockVec apply_op(const FockContext& ctx, const FockVec& v, const Residue& i, Lister list,
                 Mover move) {
  FockVec out;
  for (const auto& [mp, c] : v) {
    if (c == 0) continue;
    for (const Box& b : list(ctx, mp, i)) {
      MP target = move(mp, b);
      Rat& slot = out[target];
      slot += c;
      if (slot == 0) out.erase(target);
    }
  }
  return out;
}
}  // namespace

FockVec apply_f(const FockContext& ctx, const FockVec& v, const Residue& i) {
  return apply_op(ctx, v, i, addable_boxes, add_box);
}

FockVec apply_e(const FockContext& ctx, const FockVec& v, const Residue& i) {
  return apply_op(ctx, v, i, removable_boxes, remove_box);
}

Weight weight_of(const FockContext& ctx, const MP& mp) {
  if (mp.size() != ctx.level()) throw std::invalid_argument("component count mismatch");
  Weight w(ctx.spec);
  std::map<Residue, long long> counts;
  for (std::size_t p = 0; p < mp.size(); ++p) {
    w.lambda[from_v_exponent(ctx.spec, ctx.charges[p])] += 1;
    const Partition& mu = mp[p];
    for (std::size_t x = 1; x <= mu.length(); ++x)
      for (long long y = 1; y <= mu.row(x); ++y)
        counts[box_residue(ctx, Box{static_cast<long long>(x), y, p})] += 1;
  }
  for (const auto& [r, n] : counts) {
    Weight a = simple_root(ctx.spec, r);
    a *= n;
    w -= a;
  }
  if (ctx.spec.modl) {
    long long N = cycle_size(ctx.spec);
    for (long long s : ctx.charges) w.delta -= delta_shift(s, N);
  }
  w.prune();
  return w;
}

Rat pairing(const FockVec& a, const FockVec& b) {
  Rat out = 0;
  const FockVec& small = a.size() <= b.size() ? a : b;
  const FockVec& big = a.size() <= b.size() ? b : a;
  for (const auto& [mp, c] : small) {
    auto it = big.find(mp);
    if (it != big.end()) out += c * it->second;
  }
  return out;
}

FockVec& axpy(FockVec& a, const Rat& c, const FockVec& b) {
  if (c == 0) return a;
  for (const auto& [mp, v] : b) {
    Rat& slot = a[mp];
    slot += c * v;
    if (slot == 0) a.erase(mp);
  }
  return a;
}

}  // namespace fc
