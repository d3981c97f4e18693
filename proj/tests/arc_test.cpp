#include <stdexcept>

#include <gtest/gtest.h>

#include "cachelab/analysis.hpp"
#include "cachelab/arc.hpp"
#include "cachelab/workloads.hpp"
#include "test_util.hpp"

namespace cachelab {
namespace {

using testing::L;
using testing::P;

ArcState Make(std::size_t n, PageList t1, PageList t2, PageList b1, PageList b2, std::int64_t p,
              ArcAdaptation a = ArcAdaptation::kAnalyzedUnit) {
  ArcState s;
  s.capacity = n;
  s.t1 = std::move(t1);
  s.t2 = std::move(t2);
  s.b1 = std::move(b1);
  s.b2 = std::move(b2);
  s.p = p;
  s.adaptation = a;
  return s;
}

TEST(ArcRequestTest, HandRunFromEmpty) {
  ArcPolicy arc(CacheConfig{2});
  std::vector<bool> hits;
  for (const auto& page : MakeTrace({1, 2, 1, 3})) hits.push_back(arc.Request(page).was_hit);
  EXPECT_EQ(hits, (std::vector<bool>{false, false, true, false}));
  EXPECT_EQ(arc.Digest(), "ARC p=0 T1=[3] T2=[1] B1=[2] B2=[]");
}

TEST(ArcRequestTest, LastMissDemotesLruOfT1) {
  ArcState s = Make(2, L({"2", "1"}), {}, {}, {}, 0);
  ArcRequest(s, P(1));
  const ArcStepDetail d = ArcRequestDetailed(s, P(3));
  EXPECT_EQ(d.branch, ArcBranch::kMissDirectoryFull);
  ASSERT_TRUE(d.replace);
  EXPECT_EQ(d.replace->page, P(2));
  EXPECT_EQ(d.replace->from, ListId::kT1);
  EXPECT_EQ(d.replace->to, ListId::kB1);
  EXPECT_EQ(d.outcome.evicted_cache_page, P(2));
}

TEST(ArcRequestTest, HitOnMruOfT2ChangesNothing) {
  ArcState s = Make(3, L({"4"}), L({"1", "2"}), L({"5"}), {}, 1);
  const std::string before = StateDigest(s);
  EXPECT_TRUE(ArcRequest(s, P(1)).was_hit);
  EXPECT_EQ(StateDigest(s), before);
}

TEST(ArcRequestTest, HitInT1MovesToMruOfT2) {
  ArcState s = Make(2, L({"2", "1"}), {}, {}, {}, 0);
  EXPECT_TRUE(ArcRequest(s, P(1)).was_hit);
  EXPECT_EQ(s.t1.Pages(), (std::vector<PageId>{P(2)}));
  EXPECT_EQ(s.t2.Pages(), (std::vector<PageId>{P(1)}));
}

TEST(ArcRequestTest, B1HitAdaptsReplacesAndPromotes) {
  ArcState s = Make(2, L({"3"}), L({"1"}), L({"2"}), {}, 0);
  const ArcStepDetail d = ArcRequestDetailed(s, P(2));
  EXPECT_EQ(d.branch, ArcBranch::kHistoryB1);
  EXPECT_EQ(d.outcome.adaptation_delta, 1);
  // p=1 and |T1|=1 is not above p, so REPLACE takes LRU(T2).
  EXPECT_EQ(StateDigest(s), "ARC p=1 T1=[3] T2=[2] B1=[] B2=[1]");
}

TEST(ArcRequestTest, B2HitAdaptsDown) {
  ArcState s = Make(2, L({"3"}), L({"2"}), {}, L({"1"}), 1);
  const ArcStepDetail d = ArcRequestDetailed(s, P(1));
  EXPECT_EQ(d.branch, ArcBranch::kHistoryB2);
  EXPECT_EQ(d.outcome.adaptation_delta, -1);
  EXPECT_EQ(StateDigest(s), "ARC p=0 T1=[] T2=[1,2] B1=[3] B2=[]");
}

TEST(ArcRequestTest, DirectoryMissBranches) {
  // |T1| = N: LRU(T1) leaves the directory outright.
  ArcState full_t1 = Make(2, L({"2", "1"}), {}, {}, {}, 0);
  ArcStepDetail d = ArcRequestDetailed(full_t1, P(3));
  EXPECT_EQ(d.branch, ArcBranch::kMissL1FullCache);
  EXPECT_FALSE(d.replace);
  EXPECT_EQ(d.discarded, (std::vector<PageId>{P(1)}));
  EXPECT_EQ(StateDigest(full_t1), "ARC p=0 T1=[3,2] T2=[] B1=[] B2=[]");

  // |T1|+|B1| = N with |T1| < N: drop LRU(B1), then REPLACE.
  ArcState l1_full = Make(2, L({"3"}), L({"1"}), L({"2"}), {}, 0);
  d = ArcRequestDetailed(l1_full, P(4));
  EXPECT_EQ(d.branch, ArcBranch::kMissL1FullHistory);
  EXPECT_EQ(d.outcome.evicted_history_page, P(2));
  EXPECT_EQ(StateDigest(l1_full), "ARC p=0 T1=[4] T2=[1] B1=[3] B2=[]");

  // Directory at 2N: drop LRU(B2), then REPLACE.
  ArcState dir_full = Make(2, {}, L({"1", "2"}), L({"3"}), L({"4"}), 0);
  d = ArcRequestDetailed(dir_full, P(5));
  EXPECT_EQ(d.branch, ArcBranch::kMissDirectoryFull);
  EXPECT_EQ(d.outcome.evicted_history_page, P(4));
  EXPECT_EQ(StateDigest(dir_full), "ARC p=0 T1=[5] T2=[1] B1=[3] B2=[2]");

  ArcState cold = Make(3, L({"1"}), {}, {}, {}, 0);
  d = ArcRequestDetailed(cold, P(2));
  EXPECT_EQ(d.branch, ArcBranch::kMissColdStart);
  EXPECT_FALSE(d.replace);
  EXPECT_FALSE(d.outcome.evicted_cache_page);
}

TEST(ArcReplaceTest, ConditionOnT1AgainstP) {
  ArcState s = Make(2, L({"3"}), L({"1"}), {}, {}, 0);
  const ReplaceMove m = ArcReplace(s, false);
  EXPECT_EQ(m.page, P(3));
  EXPECT_EQ(m.to, ListId::kB1);
  EXPECT_EQ(s.b1.Pages(), (std::vector<PageId>{P(3)}));
}

TEST(ArcReplaceTest, EmptyT1ForcesT2) {
  for (std::int64_t p : {0, 1, 2}) {
    ArcState s = Make(2, {}, L({"a", "b"}), {}, {}, p);
    const ReplaceMove m = ArcReplace(s, false);
    EXPECT_EQ(m.page, P("b"));
    EXPECT_EQ(m.from, ListId::kT2);
    EXPECT_EQ(s.b2.Front().page, P("b"));
  }
}

TEST(ArcReplaceTest, B2RequestWithT1EqualToP) {
  ArcState s = Make(2, L({"x"}), L({"y"}), {}, {}, 1);
  EXPECT_EQ(ArcReplace(s, true).page, P("x"));
  ArcState t = Make(2, L({"x"}), L({"y"}), {}, {}, 1);
  EXPECT_EQ(ArcReplace(t, false).page, P("y"));
}

TEST(ArcReplaceTest, RejectsNonFullCache) {
  ArcState s = Make(3, L({"x"}), {}, {}, {}, 0);
  EXPECT_THROW(ArcReplace(s, false), std::logic_error);
}

TEST(ArcAdaptTest, UnitRuleClamps) {
  ArcState s = Make(4, {}, {}, L({"1"}), L({"2"}), 0);
  EXPECT_EQ(ArcAdapt(s, ListId::kB2), 0);
  s.p = 4;
  EXPECT_EQ(ArcAdapt(s, ListId::kB1), 4);
  s.p = 2;
  EXPECT_EQ(ArcAdapt(s, ListId::kB1), 3);
  EXPECT_EQ(ArcAdapt(s, ListId::kB2), 2);
  EXPECT_THROW(ArcAdapt(s, ListId::kT1), std::invalid_argument);
}

TEST(ArcAdaptTest, RatioRule) {
  ArcState s = Make(4, {}, {}, L({"1"}), L({"2", "3", "4"}), 0, ArcAdaptation::kOriginalRatio);
  EXPECT_EQ(ArcAdapt(s, ListId::kB1), 3);
  // |B1|/|B2| = 0 is clamped to 1.
  EXPECT_EQ(ArcAdapt(s, ListId::kB2), 2);
  s.p = 3;
  EXPECT_EQ(ArcAdapt(s, ListId::kB1), 4);
  ArcState r = Make(3, {}, {}, L({"1", "2", "3"}), L({"4"}), 2, ArcAdaptation::kOriginalRatio);
  EXPECT_EQ(ArcAdapt(r, ListId::kB2), 0);
}

TEST(ArcDigestTest, RatioVariantIsLabelled) {
  ArcPolicy arc(CacheConfig{2}, ArcAdaptation::kOriginalRatio);
  EXPECT_EQ(arc.Digest(), "ARC-RATIO p=0 T1=[] T2=[] B1=[] B2=[]");
  EXPECT_EQ(arc.kind(), PolicyKind::kArcOriginal);
}

class ArcFuzz : public ::testing::TestWithParam<ArcAdaptation> {};

// Structural invariants, fullness, insertion discipline and REPLACE usage
// across ~1.1e5 requests for every N in 1..16.
TEST_P(ArcFuzz, InvariantsAndDiscipline) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    ArcState s;
    s.capacity = n;
    s.adaptation = GetParam();
    const Trace trace = GenFuzz(3 * n, 7000, 100 + n);
    bool was_full = false;
    for (std::size_t j = 0; j < trace.size(); ++j) {
      const PageId& page = trace[j];
      const ArcState prev = s;
      const bool cached = s.InCache(page);
      const bool in_history = s.b1.Contains(page) || s.b2.Contains(page);
      const ArcStepDetail d = ArcRequestDetailed(s, page);
      ++total;
      ASSERT_EQ(d.outcome.was_hit, cached);
      const ViolationReport inv = CheckArcInvariants(s, &prev, j);
      ASSERT_TRUE(inv.empty()) << inv.violations.front().check << " " << inv.violations.front().state_dump;

      if (!cached) {
        if (in_history) {
          ASSERT_EQ(s.t2.Front().page, page);
        } else {
          ASSERT_EQ(s.t1.Front().page, page);
        }
        if (was_full) {
          // One page leaves the cache per miss; REPLACE supplies it unless
          // T1 alone fills the cache.
          ASSERT_TRUE(d.outcome.evicted_cache_page);
          ASSERT_EQ(d.replace.has_value(), d.branch != ArcBranch::kMissL1FullCache);
        }
      }
      if (was_full) {
        ASSERT_EQ(s.cached(), n);
      }
      was_full = was_full || s.cached() == n;
    }
  }
  EXPECT_GE(total, 100000u);
}

INSTANTIATE_TEST_SUITE_P(Variants, ArcFuzz,
                         ::testing::Values(ArcAdaptation::kAnalyzedUnit, ArcAdaptation::kOriginalRatio));

}  // namespace
}  // namespace cachelab
