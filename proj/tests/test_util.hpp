#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "cachelab/analysis.hpp"
#include "cachelab/page.hpp"
#include "cachelab/page_list.hpp"

namespace cachelab::testing {

inline PageId P(const std::string& token) { return PageId(token); }
inline PageId P(int n) { return PageId::FromNumber(static_cast<std::uint64_t>(n)); }

// Builds a list from its front (MRU / ring tail) to its back (LRU / head).
// A trailing '*' on a token sets the mark bit.
inline PageList L(std::initializer_list<std::string> front_to_back) {
  PageList list;
  for (auto it = std::rbegin(front_to_back); it != std::rend(front_to_back); ++it) {
    std::string token = *it;
    bool marked = false;
    if (!token.empty() && token.back() == '*') {
      marked = true;
      token.pop_back();
    }
    list.PushFront(PageId(token), marked);
  }
  return list;
}

inline PageSet S(std::initializer_list<std::string> tokens) {
  PageSet set;
  for (const auto& t : tokens) set.insert(PageId(t));
  return set;
}

}  // namespace cachelab::testing
