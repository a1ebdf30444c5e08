#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mdst/disjoint_sets.hpp"
#include "mdst/errors.hpp"
#include "mdst/rng.hpp"

using namespace mdst;

namespace {

// Oracle partition: explicit label vector, union relabels one class by full
// scan. Quadratic, obviously correct.
class LabelPartition {
 public:
  explicit LabelPartition(int n) : label_(n) {
    for (int i = 0; i < n; ++i) label_[i] = i;
  }
  bool unite(int a, int b) {
    const int la = label_[a], lb = label_[b];
    if (la == lb) return false;
    for (int& l : label_) {
      if (l == lb) l = la;
    }
    return true;
  }
  bool same_set(int a, int b) const { return label_[a] == label_[b]; }
  int class_count() const {
    int count = 0;
    for (int i = 0; i < static_cast<int>(label_.size()); ++i) count += label_[i] == i;
    return count;
  }

 private:
  std::vector<int> label_;
};

}  // namespace

TEST_CASE("basic union and find behavior") {
  DisjointSets ds(5);
  CHECK(ds.size() == 5);
  CHECK(ds.class_count() == 5);
  CHECK(ds.find(3) == 3);
  CHECK(ds.unite(0, 1));
  CHECK(ds.same_set(0, 1));
  CHECK_FALSE(ds.unite(1, 0));  // already merged
  CHECK(ds.class_count() == 4);
  CHECK(ds.unite(2, 3));
  CHECK(ds.unite(1, 3));
  CHECK(ds.same_set(0, 2));
  CHECK_FALSE(ds.same_set(0, 4));
  CHECK(ds.class_count() == 2);
  // find is idempotent and stable.
  const int r = ds.find(0);
  CHECK(ds.find(0) == r);
  CHECK(ds.find(ds.find(2)) == ds.find(2));
}

TEST_CASE("bounds checking") {
  DisjointSets ds(3);
  CHECK_THROWS_AS(ds.find(3), Error);
  CHECK_THROWS_AS(ds.find(-1), Error);
  CHECK_THROWS_AS(ds.unite(0, 5), Error);
  CHECK_THROWS_AS(DisjointSets(0), Error);
}

TEST_CASE("lookups through a const reference observe the same partition") {
  DisjointSets ds(6);
  ds.unite(0, 1);
  ds.unite(4, 5);
  const DisjointSets& view = ds;
  CHECK(view.same_set(0, 1));
  CHECK(view.same_set(5, 4));
  CHECK_FALSE(view.same_set(1, 4));
  CHECK(view.find(1) == view.find(0));
}

TEST_CASE("random scripts agree with the label-propagation oracle") {
  Rng rng(2024);
  for (int round = 0; round < 20; ++round) {
    const int n = 200;
    DisjointSets fast(n);
    LabelPartition slow(n);
    for (int step = 0; step < 600; ++step) {
      const int a = static_cast<int>(rng.next_below(n));
      const int b = static_cast<int>(rng.next_below(n));
      if (rng.next_below(3) == 0) {
        CHECK(fast.same_set(a, b) == slow.same_set(a, b));
      } else {
        const int before = fast.class_count();
        const bool merged_fast = fast.unite(a, b);
        const bool merged_slow = slow.unite(a, b);
        CHECK(merged_fast == merged_slow);
        // Class count drops by exactly one per effective union.
        CHECK(fast.class_count() == before - (merged_fast ? 1 : 0));
      }
    }
    CHECK(fast.class_count() == slow.class_count());
    // Full pairwise agreement at the end of the script.
    for (int a = 0; a < n; a += 7) {
      for (int b = 0; b < n; b += 11) {
        CHECK(fast.same_set(a, b) == slow.same_set(a, b));
      }
    }
  }
}

TEST_CASE("equal-rank tie breaks toward the first argument's root") {
  DisjointSets ds(4);
  ds.unite(2, 3);  // both rank 0: root of 2 wins
  CHECK(ds.find(3) == 2);
  ds.unite(1, 0);
  CHECK(ds.find(0) == 1);
  ds.unite(0, 3);  // equal rank 1: root of 0's class (1) wins
  CHECK(ds.find(2) == 1);
}
