#include "tclique/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace tclique {
namespace {

using nlohmann::json;

std::string format_label(double label) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, label);
  std::string text(buffer, end);
  // Keep labels visibly floating-point so integral values survive as doubles.
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  return text;
}

// Line number (1-based) of a byte offset, for diagnostics.
std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& detail)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + detail), line_(line) {}

TemporalGraph parse_temporal_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, line_of(text, e.byte == 0 ? 0 : e.byte - 1), std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(source, 1, "top-level value must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError(source, 1, "field \"n\" must be a positive integer");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(source, 1, "field \"edges\" must be an array");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<TemporalEdge> edges;
  edges.reserve(doc["edges"].size());
  std::size_t index = 0;
  for (const json& item : doc["edges"]) {
    const std::string field = "edges[" + std::to_string(index++) + "]";
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number()) {
      throw ParseError(source, 1, field + " must be [u, v, label]");
    }
    edges.push_back({item[0].get<Vertex>(), item[1].get<Vertex>(), item[2].get<double>()});
  }
  try {
    return TemporalGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 1, e.what());
  }
}

TemporalGraph parse_temporal_text(std::string_view text, const std::string& source) {
  std::vector<TemporalEdge> edges;
  std::size_t declared_n = 0;
  Vertex max_id = -1;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    if (first == "n") {
      long long count = 0;
      if (!(fields >> count) || count < 1) throw ParseError(source, line_no, "expected \"n <positive count>\"");
      declared_n = static_cast<std::size_t>(count);
      continue;
    }
    TemporalEdge e;
    std::string rest;
    std::istringstream all(line);
    if (!(all >> e.u >> e.v >> e.label)) throw ParseError(source, line_no, "expected \"u v label\"");
    if (all >> rest) throw ParseError(source, line_no, "trailing field \"" + rest + "\"");
    if (e.u < 0 || e.v < 0) throw ParseError(source, line_no, "negative vertex id");
    if (!(e.label >= 0.0 && e.label <= 1.0)) throw ParseError(source, line_no, "label outside [0,1]");
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
  }
  const std::size_t n = declared_n != 0 ? declared_n : static_cast<std::size_t>(max_id + 1);
  if (n == 0) throw ParseError(source, line_no, "no vertices");
  try {
    return TemporalGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line_no, e.what());
  }
}

TemporalGraph read_temporal_graph(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_temporal_json(text, source);
  return parse_temporal_text(text, source);
}

TemporalGraph read_temporal_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return read_temporal_graph(in, path.string());
}

void write_temporal_json(std::ostream& out, const TemporalGraph& tg) {
  out << "{\n  \"n\": " << tg.vertex_count() << ",\n  \"edges\": [";
  const auto edges = tg.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [") << edges[i].u << ", " << edges[i].v << ", "
        << format_label(edges[i].label) << "]";
  }
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

std::string to_json_string(const TemporalGraph& tg) {
  std::ostringstream out;
  write_temporal_json(out, tg);
  return out.str();
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tclique
