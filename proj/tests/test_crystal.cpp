#include "fockcrystal/crystal.hpp"

#include <doctest.h>

#include <vector>

using namespace fc;

namespace {

Partition P(std::vector<long long> v) { return Partition(std::move(v)); }

std::vector<MP> basis(const FockContext& ctx, long long max_n) {
  std::vector<MP> out;
  for (long long n = 0; n <= max_n; ++n)
    for (auto& mu : bipartitions_of(n))
      out.push_back(ctx.level() == 1 ? MP{mu[0]} : MP{mu[0], mu[1]});
  return out;
}

}  // namespace

TEST_CASE("signature reading") {
  // level 1, charge 0, -q of order 3: the word of (3) at v^2 reads the addable
  // box (2,1) of content -1 then the removable box (1,3) of content 2, "+-",
  // which does not cancel
  FockContext ctx{QuiverSpec::gu_circle(3), {0}};
  Residue v2 = from_v_exponent(ctx.spec, 2);
  CHECK(eps_value(ctx, {P({3})}, v2) == 1);
  CHECK(phi_value(ctx, {P({3})}, v2) == 1);
  CHECK(e_tilde(ctx, {P({3})}, v2) == MP{P({2})});
  CHECK(f_tilde(ctx, {P({3})}, v2) == MP{P({3, 1})});

  // level 2: same content in both components reads the higher component first
  FockContext c2{QuiverSpec::gu_circle(3), {-2, 0}};
  Residue i0 = from_v_exponent(c2.spec, 0);

  MP a{P({2}), Partition()};
  Signature sa = signature(c2, a, i0);
  CHECK(sa.word.size() == 3);  // contents -3, 0, 0: all addable
  CHECK(sa.phi == 3);
  CHECK(sa.eps == 0);
  // the box of component 2 precedes the tied box of component 1
  CHECK(sa.word[1].first.p == 1);
  CHECK(sa.word[2].first.p == 0);
  CHECK(f_tilde(c2, a, i0) == MP{P({3}), Partition()});

  MP b{P({1}), P({1})};
  CHECK(phi_value(c2, b, i0) == 1);
  CHECK(eps_value(c2, b, i0) == 1);  // "+-" in signature order: no cancellation
  CHECK(f_tilde(c2, b, i0) == MP{P({1, 1}), P({1})});
  CHECK(e_tilde(c2, b, i0) == MP{P({1}), Partition()});
}

TEST_CASE("axioms") {
  std::vector<FockContext> ctxs{
      {QuiverSpec::gu_circle(2), {1}},
      {QuiverSpec::gu_mod(3), {-2, 0}},
      {QuiverSpec::bc_mod(4), {0, 1}},
  };
  for (const FockContext& ctx : ctxs) {
    auto vs = vertices(ctx.spec);
    for (auto& mu : basis(ctx, 4)) {
      Weight w = weight_of(ctx, mu);
      for (const Residue& i : vs) {
        long long eps = eps_value(ctx, mu, i);
        long long phi = phi_value(ctx, mu, i);
        Weight root = simple_root(ctx.spec, i);
        CHECK(phi == eps + alpha_pairing(w, i));

        auto up = f_tilde(ctx, mu, i);
        CHECK(up.has_value() == (phi > 0));
        if (up) {
          CHECK(weight_of(ctx, *up) == w - root);
          CHECK(eps_value(ctx, *up, i) == eps + 1);
          CHECK(phi_value(ctx, *up, i) == phi - 1);
          CHECK(e_tilde(ctx, *up, i) == mu);
        }
        auto down = e_tilde(ctx, mu, i);
        CHECK(down.has_value() == (eps > 0));
        if (down) {
          CHECK(weight_of(ctx, *down) == w + root);
          CHECK(eps_value(ctx, *down, i) == eps - 1);
          CHECK(phi_value(ctx, *down, i) == phi + 1);
          CHECK(f_tilde(ctx, *down, i) == mu);
        }
      }
    }
  }
}

TEST_CASE("highest weight nodes") {
  FockContext ctx{QuiverSpec::gu_mod(3), {-2, 0}};
  CHECK(is_highest_weight(ctx, {Partition(), Partition()}));
  CHECK(!is_highest_weight(ctx, {P({1}), Partition()}));

  // a node is highest weight iff no raising operator applies
  for (auto& mu : basis(ctx, 5)) {
    bool killed = true;
    for (const Residue& i : vertices(ctx.spec))
      if (e_tilde(ctx, mu, i)) killed = false;
    CHECK(is_highest_weight(ctx, mu) == killed);
  }
}
