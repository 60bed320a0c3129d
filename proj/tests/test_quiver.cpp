#include "fockcrystal/quiver.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace fc;

namespace {

// multiplicative order of -q read off the quiver arithmetic
long long mq_order(const QuiverSpec& spec) {
  Residue one = normalize(spec, 1, 0);
  for (long long m = 1;; ++m) {
    if (normalize(spec, m % 2 == 0 ? 1 : -1, m) == one) return m;
    REQUIRE(m < 1000);
  }
}

std::vector<QuiverSpec> finite_specs() {
  std::vector<QuiverSpec> specs;
  for (long long e : {3, 4, 5, 6, 7, 8}) specs.push_back(QuiverSpec::gu_mod(e));
  for (long long f : {3, 4, 5, 6, 8}) specs.push_back(QuiverSpec::bc_mod(f));
  for (long long e : {2, 3, 4}) specs.push_back(QuiverSpec::gu_circle(e));
  return specs;
}

}  // namespace

TEST_CASE("derived orders") {
  struct Row {
    long long e, f, d;
  };
  // GU: order of q is 2e, e/2 or e depending on e mod 4; q^2 has order d
  std::map<long long, Row> gu{{3, {3, 6, 3}}, {4, {4, 4, 2}},  {5, {5, 10, 5}},
                              {6, {6, 3, 3}}, {7, {7, 14, 7}}, {8, {8, 8, 4}}};
  for (auto& [e, row] : gu) {
    QuiverSpec s = QuiverSpec::gu_mod(e);
    CHECK(s.e == row.e);
    CHECK(s.f == row.f);
    CHECK(s.d == row.d);
    CHECK(mq_order(s) == e);
  }
  std::map<long long, Row> bc{{3, {6, 3, 3}}, {4, {4, 4, 2}}, {5, {10, 5, 5}},
                              {6, {3, 6, 3}}, {8, {8, 8, 4}}};
  for (auto& [f, row] : bc) {
    QuiverSpec s = QuiverSpec::bc_mod(f);
    CHECK(s.e == row.e);
    CHECK(s.f == row.f);
    CHECK(s.d == row.d);
    CHECK(mq_order(s) == s.e);
  }
  CHECK_THROWS_AS(QuiverSpec::gu_mod(2), unsupported_error);
  CHECK_THROWS_AS(QuiverSpec::bc_mod(2), unsupported_error);
}

TEST_CASE("normalization") {
  QuiverSpec gu0 = QuiverSpec::gu_char0();
  CHECK(normalize(gu0, 1, 2) == Residue{1, 2});
  CHECK(normalize(gu0, -1, 3) == Residue{-1, 3});
  // only the alternating signs appear among powers of -q
  CHECK_THROWS_AS(normalize(gu0, -1, 2), std::invalid_argument);
  CHECK(!is_vertex(gu0, 1, 1));

  QuiverSpec bc0 = QuiverSpec::bc_char0();
  CHECK(is_vertex(bc0, -1, 2));

  // even q-order folds the sign
  QuiverSpec gu4 = QuiverSpec::gu_mod(4);
  CHECK(normalize(gu4, -1, 0) == normalize(gu4, 1, 2));
  CHECK(is_vertex(gu4, 1, 1));  // q = (-q)^3 when -q has order 4
  CHECK(!is_vertex(QuiverSpec::gu_mod(3), 1, 1));  // odd exponents miss the powers of -q
  QuiverSpec bc4 = QuiverSpec::bc_mod(4);
  CHECK(normalize(bc4, -1, 1) == normalize(bc4, 1, 3));
  // odd q-order keeps both signs
  QuiverSpec bc3 = QuiverSpec::bc_mod(3);
  CHECK(normalize(bc3, -1, 4) == Residue{-1, 1});
  CHECK(is_vertex(bc3, -1, 0));
}

TEST_CASE("vertex sets and cycles") {
  for (const QuiverSpec& spec : finite_specs()) {
    auto vs = vertices(spec);
    std::set<Residue> uniq(vs.begin(), vs.end());
    CHECK(uniq.size() == vs.size());
    if (spec.circle || spec.family == Family::GU)
      CHECK(static_cast<long long>(vs.size()) == spec.e);
    else
      CHECK(static_cast<long long>(vs.size()) == (spec.f % 2 == 0 ? spec.f : 2 * spec.f));

    for (const Residue& v : vs) {
      CHECK(arrow_inv(spec, arrow(spec, v)) == v);
      CHECK(arrow(spec, arrow_inv(spec, v)) == v);
    }
    // the Fock step is the arrow
    for (long long n = -3; n <= 3; ++n)
      CHECK(arrow(spec, from_v_exponent(spec, n)) == from_v_exponent(spec, n + 1));

    auto comps = components(spec);
    long long cyc = cycle_size(spec);
    for (auto& comp : comps) CHECK(static_cast<long long>(comp.size()) == cyc);
    CHECK(comps.size() * static_cast<std::size_t>(cyc) == vs.size());

    long long affine = 0;
    for (const Residue& v : vs) affine += is_affine(spec, v) ? 1 : 0;
    if (spec.circle)
      CHECK(affine == 1);
    else if (spec.family == Family::GU)
      CHECK(affine == (spec.e % 2 == 0 ? 2 : 1));
    else
      CHECK(affine == (spec.f % 2 == 0 ? 1 : 2));
    CHECK(is_affine(spec, normalize(spec, 1, 0)));
  }
  CHECK_THROWS_AS(vertices(QuiverSpec::gu_char0()), std::invalid_argument);
  CHECK_THROWS_AS(cycle_size(QuiverSpec::bc_char0()), std::invalid_argument);
  CHECK(!is_affine(QuiverSpec::gu_char0(), Residue{1, 0}));
}

TEST_CASE("reduction from characteristic zero") {
  QuiverSpec gu0 = QuiverSpec::gu_char0();
  for (long long e : {3LL, 4LL, 5LL, 6LL}) {
    QuiverSpec spec = QuiverSpec::gu_mod(e);
    for (long long m = -5; m <= 5; ++m) {
      CHECK(spec_map(gu0, spec, from_mq_exponent(gu0, m)) == from_mq_exponent(spec, m));
      CHECK(from_mq_exponent(spec, m) == from_mq_exponent(spec, m + e));
    }
    // exponents are faithful on one period
    std::set<Residue> seen;
    for (long long m = 0; m < e; ++m) seen.insert(from_mq_exponent(spec, m));
    CHECK(static_cast<long long>(seen.size()) == e);
    for (long long m = 0; m < e; ++m)
      CHECK(mq_exponent(spec, from_mq_exponent(spec, m)) == m);
  }
  CHECK_THROWS_AS(spec_map(QuiverSpec::gu_mod(3), QuiverSpec::gu_mod(3), Residue{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(spec_map(gu0, QuiverSpec::bc_mod(4), Residue{1, 0}), std::invalid_argument);
}

TEST_CASE("printing") {
  QuiverSpec gu0 = QuiverSpec::gu_char0();
  CHECK(residue_str(gu0, from_mq_exponent(gu0, 0)) == "1");
  CHECK(residue_str(gu0, from_mq_exponent(gu0, -1)) == "(-q)^-1");
  CHECK(residue_str(gu0, from_mq_exponent(gu0, 3)) == "(-q)^3");

  QuiverSpec bc0 = QuiverSpec::bc_char0();
  CHECK(residue_str(bc0, normalize(bc0, -1, 0)) == "-1");
  CHECK(residue_str(bc0, normalize(bc0, 1, 2)) == "q^2");
  CHECK(residue_str(bc0, normalize(bc0, -1, 3)) == "-q^3");

  for (const QuiverSpec& spec : finite_specs())
    for (const Residue& v : vertices(spec))
      CHECK(parse_residue(spec, residue_str(spec, v)) == v);
  CHECK_THROWS_AS(parse_residue(bc0, "q^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_residue(bc0, "frog"), std::invalid_argument);
}
