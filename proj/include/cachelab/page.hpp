#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cachelab {

// An opaque request token. Numeric traces are the special case where every
// token is a decimal integer.
class PageId {
 public:
  PageId() = default;
  explicit PageId(std::string token) : token_(std::move(token)) {}
  static PageId FromNumber(std::uint64_t n) { return PageId(std::to_string(n)); }

  const std::string& token() const { return token_; }

  friend bool operator==(const PageId& a, const PageId& b) = default;

  // Canonical order: all-digit tokens first, compared numerically (by length,
  // then lexicographically), followed by every other token in byte order.
  friend std::strong_ordering operator<=>(const PageId& a, const PageId& b);

 private:
  std::string token_;
};

struct PageIdHash {
  std::size_t operator()(const PageId& id) const noexcept {
    return std::hash<std::string>{}(id.token());
  }
};

using Trace = std::vector<PageId>;

// Builds a trace from integer tokens; convenient in tests and generators.
Trace MakeTrace(std::initializer_list<std::uint64_t> pages);

struct CacheConfig {
  std::size_t capacity = 1;

  // Throws std::invalid_argument when capacity < 1.
  void Validate() const;
};

// Cost accounting for a single request: a miss costs 1, a hit 0.
struct AccessOutcome {
  bool was_hit = false;
  std::optional<PageId> evicted_cache_page;
  std::optional<PageId> evicted_history_page;
  std::int64_t adaptation_delta = 0;
};

enum class PolicyKind { kLru, kClock, kArcAnalyzed, kArcOriginal, kCar };

std::string_view PolicyKindName(PolicyKind kind);

// Common contract for every online replacement policy in the lab. Policies
// expose their full state through Digest() so that runs can be compared
// step by step.
class ReplacementPolicy {
 public:
  virtual ~ReplacementPolicy() = default;

  virtual PolicyKind kind() const = 0;
  virtual std::size_t capacity() const = 0;
  virtual AccessOutcome Request(const PageId& page) = 0;
  virtual bool InCache(const PageId& page) const = 0;
  virtual std::size_t CachedCount() const = 0;
  virtual std::string Digest() const = 0;
};

}  // namespace cachelab
