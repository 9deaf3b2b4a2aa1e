#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tclique/graph.hpp"

namespace tclique {

// Malformed graph input. what() names the source and the offending line or
// field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& detail);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Canonical JSON: {"n": int, "edges": [[u, v, label], ...]}.
TemporalGraph parse_temporal_json(std::string_view text, const std::string& source = "<input>");

// Whitespace-separated "u v label" lines. Blank lines and lines starting
// with '#' are skipped. An optional "n <count>" line fixes the vertex
// count; otherwise it is one more than the largest id.
TemporalGraph parse_temporal_text(std::string_view text, const std::string& source = "<input>");

// Picks the JSON parser when the first non-blank character is '{'.
TemporalGraph read_temporal_graph(std::istream& in, const std::string& source = "<input>");
TemporalGraph read_temporal_graph(const std::filesystem::path& path);

// Writes canonical JSON, one edge per line, sorted by (u, v). Labels use the
// shortest round-trip decimal form so write -> read -> write is byte-stable.
void write_temporal_json(std::ostream& out, const TemporalGraph& tg);
std::string to_json_string(const TemporalGraph& tg);

// Writes `contents` to a sibling temp file and renames it over `path`, so a
// failed run never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace tclique
