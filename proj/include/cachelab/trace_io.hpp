#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cachelab/page.hpp"

namespace cachelab {

class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Whitespace-separated tokens; a line whose first non-blank character is '#'
// is a comment. Throws TraceParseError on invalid UTF-8.
Trace ParseTrace(std::string_view bytes);

// One token per line, preceded by `header` as a '#' comment when non-empty.
std::string FormatTrace(const Trace& trace, std::string_view header = {});

// Reads a trace from `path`, or from stdin when path is "-". Throws
// std::runtime_error when the file cannot be read.
Trace ReadTraceFile(const std::string& path);

}  // namespace cachelab
