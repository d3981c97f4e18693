#include "cachelab/page.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

namespace {

bool IsNumeric(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::strong_ordering operator<=>(const PageId& a, const PageId& b) {
  const bool a_num = IsNumeric(a.token_);
  const bool b_num = IsNumeric(b.token_);
  if (a_num != b_num) return a_num ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a_num && a.token_.size() != b.token_.size()) {
    return a.token_.size() <=> b.token_.size();
  }
  const int c = a.token_.compare(b.token_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Trace MakeTrace(std::initializer_list<std::uint64_t> pages) {
  Trace trace;
  trace.reserve(pages.size());
  for (auto p : pages) trace.push_back(PageId::FromNumber(p));
  return trace;
}

void CacheConfig::Validate() const {
  if (capacity < 1) throw std::invalid_argument("cache capacity must be at least 1");
}

std::string_view PolicyKindName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kLru:
      return "LRU";
    case PolicyKind::kClock:
      return "CLOCK";
    case PolicyKind::kArcAnalyzed:
      return "ARC";
    case PolicyKind::kArcOriginal:
      return "ARC-RATIO";
    case PolicyKind::kCar:
      return "CAR";
  }
  return "?";
}

}  // namespace cachelab
