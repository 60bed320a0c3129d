#include "fockcrystal/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace fc;

namespace {

Partition P(std::vector<long long> v) { return Partition(std::move(v)); }

// deterministic sweep over small partitions and charges
std::vector<Partition> sample_partitions(long long max_n) {
  std::vector<Partition> out;
  for (long long n = 0; n <= max_n; ++n)
    for (auto& la : partitions_of(n)) out.push_back(la);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(P({4, 2, 1}).size() == 7);
  CHECK(P({4, 2, 1}).row(1) == 4);
  CHECK(P({4, 2, 1}).row(5) == 0);
  CHECK(P({3, 3, 0, 0}) == P({3, 3}));
  CHECK(Partition().empty());
  CHECK(P({4, 2, 1}).str() == "4,2,1");
  CHECK(Partition().str() == "");
  CHECK(parse_partition("") == Partition());
  CHECK(parse_partition("0") == Partition());
  CHECK(parse_partition("4,2,1") == P({4, 2, 1}));
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
}

TEST_CASE("beta windows") {
  CHECK(beta_window(P({4, 2, 1}), 0, 6) == std::vector<long long>{4, 1, -1, -3, -4, -5});

  // membership agrees with the window, including the consecutive tail
  for (auto& la : sample_partitions(8))
    for (long long d : {-3LL, 0LL, 2LL}) {
      auto w = beta_window(la, d, la.length() + 5);
      std::set<long long> beads(w.begin(), w.end());
      for (long long x = w.back(); x <= w.front() + 2; ++x)
        CHECK(beta_member(la, d, x) == (beads.count(x) > 0 || x < w.back()));
    }

  SUBCASE("round trip") {
    for (auto& la : sample_partitions(8))
      for (long long d : {-2LL, 0LL, 3LL})
        for (std::size_t n : {la.length() + 1, la.length() + 4}) {
          auto w = beta_window(la, d, n);
          auto [back, charge] = partition_from_window(w);
          CHECK(back == la);
          CHECK(charge == d);
          CHECK(partition_from_window(w, d) == la);
        }
  }

  SUBCASE("stated charge must match the window") {
    auto w = beta_window(P({2, 1}), 0, 3);
    CHECK_THROWS_WITH_AS(partition_from_window(w, 1),
                         doctest::Contains("tail not consecutive"), std::invalid_argument);
  }
}

TEST_CASE("hook removal matches diagram ribbons") {
  CHECK(e_hooks(P({4, 2, 1}), 0, 3) == std::vector<Hook>{{-2, 1}});
  CHECK(e_hook_removal_sequence(P({4, 2, 1}), 0, 3) == std::vector<Hook>{{-2, 1}, {1, 4}});

  for (auto& la : sample_partitions(10))
    for (long long e : {2LL, 3LL, 5LL})
      for (long long d : {-1LL, 0LL, 2LL}) {
        auto hooks = e_hooks(la, d, e);
        std::set<Partition> via_beads;
        for (auto& h : hooks) {
          Partition res = remove_e_hook(la, d, h, e);
          CHECK(res.size() == la.size() - e);
          via_beads.insert(res);
        }
        std::set<Partition> via_diagram;
        for (auto& [mu, ht] : oracle::ribbon_removals_diagram(la, e)) via_diagram.insert(mu);
        CHECK(via_beads == via_diagram);
        // hooks are charge equivariant
        CHECK(hooks.size() == e_hooks(la, d + 7, e).size());
      }
}

TEST_CASE("quotient tower") {
  auto q = beta_quotient(P({4, 2, 1}), 0, 3);
  CHECK(q.mu == std::vector<Partition>{P({1, 1}), Partition(), Partition()});
  CHECK(q.charges == std::vector<long long>{1, 0, -1});
  CHECK(beta_quotient(P({2, 1}), 0, 2).charges == std::vector<long long>{-1, 1});
  CHECK(beta_quotient(P({1}), 0, 2).charges == std::vector<long long>{1, -1});

  SUBCASE("compose inverts the quotient") {
    for (auto& la : sample_partitions(9))
      for (long long l : {2LL, 3LL})
        for (long long d : {-3LL, 0LL, 1LL, 3LL}) {
          auto parts = beta_quotient(la, d, l);
          long long total = 0;
          for (long long s : parts.charges) total += s;
          CHECK(total == d);
          auto [back, charge] = beta_compose(parts);
          CHECK(back == la);
          CHECK(charge == d);
        }
  }

  SUBCASE("core and weight") {
    CHECK(e_core_quotient(P({4, 2, 1}), 3).core == P({1}));
    CHECK(e_core_quotient(P({4, 2, 1}), 3).weight == 2);
    for (auto& la : sample_partitions(10))
      for (long long e : {2LL, 3LL, 5LL}) {
        auto cq = e_core_quotient(la, e);
        CHECK(cq.core == oracle::e_core_diagram(la, e));
        CHECK(e_hooks(cq.core, 0, e).empty());
        long long qsize = 0;
        for (auto& m : cq.quotient) qsize += m.size();
        CHECK(la.size() == cq.core.size() + e * qsize);
        CHECK(cq.weight == qsize);
      }
  }
}

TEST_CASE("two-core scaffolding") {
  CHECK(staircase(0) == Partition());
  CHECK(staircase(3) == P({3, 2, 1}));
  CHECK(staircase_charges(0) == std::array<long long, 2>{0, 0});
  CHECK(staircase_charges(1) == std::array<long long, 2>{1, -1});
  CHECK(staircase_charges(2) == std::array<long long, 2>{-1, 1});

  CHECK(from_two_quotient(0, P({1}), Partition()) == P({1, 1}));

  for (long long t = 0; t <= 5; ++t) {
    CHECK(two_core_index(staircase(t)) == t);
    for (long long m = 0; m <= 3; ++m)
      for (auto& mu : bipartitions_of(m)) {
        Partition la = from_two_quotient(t, mu[0], mu[1]);
        CHECK(la.size() == t * (t + 1) / 2 + 2 * m);
        auto cq = e_core_quotient(la, 2);
        CHECK(cq.core == staircase(t));
        // round trip through the generic quotient at the staircase charges
        auto sig = staircase_charges(t);
        auto q = beta_quotient(la, sig[0] + sig[1], 2);
        CHECK(q.charges == std::vector<long long>{sig[0], sig[1]});
        CHECK(q.mu == std::vector<Partition>{mu[0], mu[1]});
      }
  }
  // any partition reaches a staircase 2-core
  CHECK(two_core_index(P({2})) == 0);
  CHECK(two_core_index(P({4, 2, 1})) == 1);
}

TEST_CASE("statistics") {
  CHECK(a_value(Partition()) == 0);
  CHECK(a_value(P({4, 2, 1})) == 4);
  CHECK(a_value(P({1, 1, 1})) == 3);

  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK(dominance_leq(P({3, 1}), P({4})));
  CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
  CHECK(dominance_leq(P({2, 1, 1}), P({2, 1, 1})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({1})), std::invalid_argument);
  // incomparable pair
  CHECK(!dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})));
  CHECK(!dominance_leq(P({2, 2, 2}), P({3, 1, 1, 1})));
}

TEST_CASE("enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(4) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(10).size() == 42);
  CHECK(bipartitions_of(3).size() == 10);
  // bipartition count is the convolution of partition counts
  long long direct = 0;
  for (long long a = 0; a <= 5; ++a)
    direct += static_cast<long long>(partitions_of(a).size() * partitions_of(5 - a).size());
  CHECK(static_cast<long long>(bipartitions_of(5).size()) == direct);
}
