#pragma once

#include <cstddef>
#include <list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cachelab/page.hpp"

namespace cachelab {

struct PageEntry {
  PageId page;
  bool marked = false;
};

// Ordered page list with O(1) membership. The front is the most recent end
// (MRU for recency lists, tail for clock rings) and the back is the oldest
// end (LRU, or the clock head).
class PageList {
 public:
  using const_iterator = std::list<PageEntry>::const_iterator;

  PageList() = default;
  PageList(const PageList& other);
  PageList& operator=(const PageList& other);
  PageList(PageList&&) noexcept = default;
  PageList& operator=(PageList&&) noexcept = default;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool Contains(const PageId& page) const { return index_.count(page) != 0; }

  // nullptr when absent.
  const PageEntry* Find(const PageId& page) const;

  const PageEntry& Front() const { return entries_.front(); }
  const PageEntry& Back() const { return entries_.back(); }

  void PushFront(const PageId& page, bool marked = false);
  PageEntry PopBack();
  PageEntry Remove(const PageId& page);
  void MoveToFront(const PageId& page);
  void SetMark(const PageId& page, bool marked);

  // 1-based distance from the front; 0 when absent. Linear time.
  std::size_t PositionOf(const PageId& page) const;

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  std::vector<PageId> Pages() const;

  // "[a,b*,c]" front to back; '*' marks set bits when show_marks is true.
  std::string Render(bool show_marks) const;

 private:
  void Reindex();

  std::list<PageEntry> entries_;
  std::unordered_map<PageId, std::list<PageEntry>::iterator, PageIdHash> index_;
};

}  // namespace cachelab
