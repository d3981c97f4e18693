#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "cachelab/arc.hpp"
#include "cachelab/car.hpp"
#include "cachelab/classic.hpp"
#include "cachelab/page.hpp"
#include "cachelab/page_list.hpp"
#include "test_util.hpp"

namespace cachelab {
namespace {

using testing::L;
using testing::P;

TEST(PageIdTest, EqualityAndCanonicalOrder) {
  EXPECT_EQ(P(7), P("7"));
  EXPECT_NE(P("7"), P("07"));
  EXPECT_LT(P(9), P(10));
  EXPECT_LT(P(2), P(10));
  EXPECT_LT(P(999), P("a"));
  EXPECT_LT(P("a"), P("b"));
  EXPECT_LT(P("B"), P("a"));

  std::vector<PageId> v = {P("x"), P(10), P(2), P("10a"), P(1)};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<PageId>{P(1), P(2), P(10), P("10a"), P("x")}));
}

TEST(PageIdTest, MakeTrace) {
  EXPECT_EQ(MakeTrace({1, 2, 1}), (Trace{P(1), P(2), P(1)}));
  EXPECT_TRUE(MakeTrace({}).empty());
}

TEST(CacheConfigTest, RejectsZeroCapacity) {
  EXPECT_THROW(CacheConfig{0}.Validate(), std::invalid_argument);
  EXPECT_NO_THROW(CacheConfig{1}.Validate());
}

TEST(PageListTest, OrderAndPositions) {
  PageList l = L({"a", "b*", "c"});
  EXPECT_EQ(l.Render(true), "[a,b*,c]");
  EXPECT_EQ(l.Render(false), "[a,b,c]");
  EXPECT_EQ(l.PositionOf(P("a")), 1u);
  EXPECT_EQ(l.PositionOf(P("c")), 3u);
  EXPECT_EQ(l.PositionOf(P("z")), 0u);
  EXPECT_TRUE(l.Find(P("b"))->marked);

  l.MoveToFront(P("c"));
  EXPECT_EQ(l.Render(false), "[c,a,b]");
  EXPECT_EQ(l.PopBack().page, P("b"));
  EXPECT_FALSE(l.Contains(P("b")));
  EXPECT_THROW(l.PushFront(P("a")), std::logic_error);
}

TEST(PageListTest, CopyKeepsIndependentIndex) {
  PageList a = L({"1", "2"});
  PageList b = a;
  b.Remove(P(1));
  EXPECT_TRUE(a.Contains(P(1)));
  EXPECT_FALSE(b.Contains(P(1)));
  a.MoveToFront(P(2));
  EXPECT_EQ(a.Render(false), "[2,1]");
  EXPECT_EQ(b.Render(false), "[2]");
}

TEST(StateDigestTest, EmptyArc) {
  ArcState s;
  s.capacity = 2;
  EXPECT_EQ(StateDigest(s), "ARC p=0 T1=[] T2=[] B1=[] B2=[]");
}

TEST(StateDigestTest, ArcDirectRendering) {
  ArcState s;
  s.capacity = 2;
  s.t1 = L({"3"});
  s.t2 = L({"1"});
  s.b1 = L({"2"});
  EXPECT_EQ(StateDigest(s), "ARC p=0 T1=[3] T2=[1] B1=[2] B2=[]");
}

TEST(StateDigestTest, MarkBitChangesDigest) {
  ClockState a;
  a.capacity = 2;
  a.ring = L({"1", "2"});
  ClockState b = a;
  b.ring.SetMark(P(2), true);
  EXPECT_NE(StateDigest(a), StateDigest(b));

  CarState c;
  c.capacity = 2;
  c.t1 = L({"1"});
  CarState d = c;
  d.t1.SetMark(P(1), true);
  EXPECT_NE(StateDigest(c), StateDigest(d));
}

// Replaying the same trace from the initial state reproduces every digest.
TEST(StateDigestTest, ReplayIsDeterministic) {
  const Trace trace = MakeTrace({1, 2, 3, 1, 4, 2, 5, 1, 3, 3, 6, 2, 1, 7, 4});
  auto run = [&](auto policy) {
    std::vector<std::string> digests;
    for (const auto& page : trace) {
      policy.Request(page);
      digests.push_back(policy.Digest());
    }
    return digests;
  };
  EXPECT_EQ(run(ArcPolicy(CacheConfig{3})), run(ArcPolicy(CacheConfig{3})));
  EXPECT_EQ(run(CarPolicy(CacheConfig{3})), run(CarPolicy(CacheConfig{3})));
  EXPECT_EQ(run(ClockPolicy(CacheConfig{3})), run(ClockPolicy(CacheConfig{3})));
  EXPECT_EQ(run(LruPolicy(CacheConfig{3})), run(LruPolicy(CacheConfig{3})));
}

}  // namespace
}  // namespace cachelab
