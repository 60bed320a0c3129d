#include "fockcrystal/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace fc {

Signature signature(const FockContext& ctx, const MP& mp, const Residue& i) {
  Signature sig;
  std::vector<std::pair<Box, bool>> entries;
  for (const Box& b : addable_boxes(ctx, mp, i)) entries.push_back({b, true});
  for (const Box& b : removable_boxes(ctx, mp, i)) entries.push_back({b, false});
  std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    long long ca = box_content(ctx, a.first), cb = box_content(ctx, b.first);
    if (ca != cb) return ca < cb;
    return a.first.p > b.first.p;  // higher component first on equal shifted content
  });
  // at most one addable or removable box per (component, shifted content); no further ties
  for (std::size_t u = 1; u < entries.size(); ++u)
    if (box_content(ctx, entries[u - 1].first) == box_content(ctx, entries[u].first) &&
        entries[u - 1].first.p == entries[u].first.p)
      throw std::logic_error("signature order is not total");
  sig.word = entries;

  // stack cancellation of adjacent "-+": a "+" absorbs the latest surviving "-";
  // the surviving stack is always of the shape +^phi -^eps
  std::vector<std::pair<Box, bool>> stack;
  for (const auto& en : entries) {
    if (en.second && !stack.empty() && !stack.back().second) {
      stack.pop_back();
      continue;
    }
    stack.push_back(en);
  }
  for (std::size_t u = 1; u < stack.size(); ++u)
    if (stack[u].second && !stack[u - 1].second)
      throw std::logic_error("reduced signature is not of the shape +...+-...-");
  for (const auto& en : stack) (en.second ? sig.phi : sig.eps) += 1;
  for (std::size_t u = 0; u < stack.size(); ++u) {
    if (stack[u].second && (u + 1 == stack.size() || !stack[u + 1].second))
      sig.good_add = stack[u].first;  // rightmost "+"
    if (!stack[u].second && (u == 0 || stack[u - 1].second))
      sig.good_remove = stack[u].first;  // leftmost "-"
  }
  return sig;
}

long long eps_value(const FockContext& ctx, const MP& mp, const Residue& i) {
  return signature(ctx, mp, i).eps;
}

long long phi_value(const FockContext& ctx, const MP& mp, const Residue& i) {
  return signature(ctx, mp, i).phi;
}

std::optional<MP> f_tilde(const FockContext& ctx, const MP& mp, const Residue& i) {
  Signature sig = signature(ctx, mp, i);
  if (!sig.good_add) return std::nullopt;
  return add_box(mp, *sig.good_add);
}

std::optional<MP> e_tilde(const FockContext& ctx, const MP& mp, const Residue& i) {
  Signature sig = signature(ctx, mp, i);
  if (!sig.good_remove) return std::nullopt;
  return remove_box(mp, *sig.good_remove);
}

bool is_highest_weight(const FockContext& ctx, const MP& mp) {
  for (const Residue& i : vertices(ctx.spec))
    if (eps_value(ctx, mp, i) != 0) return false;
  return true;
}

}  // namespace fc
