#include "cachelab/trace_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace cachelab {

namespace {

// Returns the offset of the first invalid byte, or npos when `bytes` is
// well-formed UTF-8 (no overlongs, surrogates or code points past U+10FFFF).
std::size_t FirstInvalidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    unsigned char lo = 0x80, hi = 0xBF;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      const unsigned char min = k == 1 ? lo : 0x80;
      const unsigned char max = k == 1 ? hi : 0xBF;
      if (cc < min || cc > max) return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

}  // namespace

Trace ParseTrace(std::string_view bytes) {
  if (const auto bad = FirstInvalidUtf8(bytes); bad != std::string_view::npos) {
    throw TraceParseError("invalid UTF-8 at byte offset " + std::to_string(bad), bad);
  }
  Trace trace;
  std::size_t i = 0;
  bool line_start = true;
  while (i < bytes.size()) {
    const char c = bytes[i];
    if (c == '\n') {
      line_start = true;
      ++i;
    } else if (IsSpace(c)) {
      ++i;
    } else if (c == '#' && line_start) {
      while (i < bytes.size() && bytes[i] != '\n') ++i;
    } else {
      const std::size_t begin = i;
      while (i < bytes.size() && !IsSpace(bytes[i])) ++i;
      trace.emplace_back(std::string(bytes.substr(begin, i - begin)));
      line_start = false;
    }
  }
  return trace;
}

std::string FormatTrace(const Trace& trace, std::string_view header) {
  std::string out;
  if (!header.empty()) {
    out += "# ";
    out += header;
    out += '\n';
  }
  for (const auto& page : trace) {
    out += page.token();
    out += '\n';
  }
  return out;
}

Trace ReadTraceFile(const std::string& path) {
  if (path == "-") {
    std::string bytes{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return ParseTrace(bytes);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read trace file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseTrace(buffer.str());
}

}  // namespace cachelab
