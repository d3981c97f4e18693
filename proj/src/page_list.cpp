#include "cachelab/page_list.hpp"

#include <stdexcept>

namespace cachelab {

PageList::PageList(const PageList& other) : entries_(other.entries_) { Reindex(); }

PageList& PageList::operator=(const PageList& other) {
  if (this != &other) {
    entries_ = other.entries_;
    Reindex();
  }
  return *this;
}

void PageList::Reindex() {
  index_.clear();
  index_.reserve(entries_.size());
  for (auto it = entries_.begin(); it != entries_.end(); ++it) index_.emplace(it->page, it);
}

const PageEntry* PageList::Find(const PageId& page) const {
  auto it = index_.find(page);
  return it == index_.end() ? nullptr : &*it->second;
}

void PageList::PushFront(const PageId& page, bool marked) {
  if (Contains(page)) throw std::logic_error("page already in list: " + page.token());
  entries_.push_front(PageEntry{page, marked});
  index_.emplace(page, entries_.begin());
}

PageEntry PageList::PopBack() {
  if (entries_.empty()) throw std::logic_error("PopBack on empty list");
  PageEntry entry = std::move(entries_.back());
  index_.erase(entry.page);
  entries_.pop_back();
  return entry;
}

PageEntry PageList::Remove(const PageId& page) {
  auto it = index_.find(page);
  if (it == index_.end()) throw std::logic_error("page not in list: " + page.token());
  PageEntry entry = std::move(*it->second);
  entries_.erase(it->second);
  index_.erase(it);
  return entry;
}

void PageList::MoveToFront(const PageId& page) {
  auto it = index_.find(page);
  if (it == index_.end()) throw std::logic_error("page not in list: " + page.token());
  entries_.splice(entries_.begin(), entries_, it->second);
}

void PageList::SetMark(const PageId& page, bool marked) {
  auto it = index_.find(page);
  if (it == index_.end()) throw std::logic_error("page not in list: " + page.token());
  it->second->marked = marked;
}

std::size_t PageList::PositionOf(const PageId& page) const {
  std::size_t pos = 1;
  for (const auto& e : entries_) {
    if (e.page == page) return pos;
    ++pos;
  }
  return 0;
}

std::vector<PageId> PageList::Pages() const {
  std::vector<PageId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.page);
  return out;
}

std::string PageList::Render(bool show_marks) const {
  std::string out = "[";
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) out += ',';
    first = false;
    out += e.page.token();
    if (show_marks && e.marked) out += '*';
  }
  out += ']';
  return out;
}

}  // namespace cachelab
