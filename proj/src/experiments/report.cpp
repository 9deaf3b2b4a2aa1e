#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "tclique/experiments.hpp"
#include "tclique/io.hpp"

namespace tclique {
namespace {

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

}  // namespace

std::vector<double> ExperimentReport::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column \"" + std::string(name) + "\"");
  const auto idx = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(trials.size());
  for (const TrialRecord& t : trials) out.push_back(t.values.at(idx));
  return out;
}

Summary ExperimentReport::summarize_column(std::string_view name) const { return summarize(column(name)); }

void ExperimentReport::finalize() {
  std::sort(trials.begin(), trials.end(),
            [](const TrialRecord& a, const TrialRecord& b) { return a.index < b.index; });
  aggregate = summarize_column(primary);
}

std::string ExperimentReport::params_hash() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&](std::string_view text) {
    for (const char c : text) {
      hash ^= static_cast<unsigned char>(c);
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& [key, value] : params) {
    feed(key);
    feed("=");
    feed(value);
    feed(";");
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string ExperimentReport::file_stem() const {
  return name + "_" + params_hash() + "_" + std::to_string(master_seed);
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "trial,seed";
  for (const std::string& c : columns) out << ',' << c;
  out << '\n';
  for (const TrialRecord& t : trials) {
    out << t.index << ',' << t.seed;
    for (const double v : t.values) out << ',' << format_number(v);
    out << '\n';
  }
  return out.str();
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json params_json = nlohmann::json::object();
  for (const auto& [key, value] : params) params_json[key] = value;
  return {
      {"experiment", name},
      {"seed", master_seed},
      {"params", params_json},
      {"columns", columns},
      {"primary", primary},
      {"aggregate",
       {{"count", aggregate.count},
        {"mean", aggregate.mean},
        {"variance", aggregate.variance},
        {"std_error", aggregate.std_error}}},
      {"diagnostics", diagnostics},
  };
}

std::pair<std::filesystem::path, std::filesystem::path> ExperimentReport::write_files(
    const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const std::filesystem::path csv = dir / (file_stem() + ".csv");
  const std::filesystem::path json = dir / (file_stem() + ".json");
  write_file_atomically(csv, to_csv());
  write_file_atomically(json, to_json().dump(2) + "\n");
  return {csv, json};
}

}  // namespace tclique
