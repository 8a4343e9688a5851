#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sparsef2::cli {

struct RunConfig {
  std::string command;  // gen-graph | reduce | solve | verify
  std::string op;       // reduction, solver or suite name
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::optional<std::string> kind;
  std::uint64_t seed = 1;
  std::optional<std::string> alg;
  std::optional<std::size_t> k;
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<std::size_t> deg;
  std::optional<std::size_t> walk_len;
  std::optional<std::uint64_t> cap;
  std::map<std::string, std::string> overrides;
  std::string format = "text";  // text | lines

  // Canonical key=value listing of everything that can change the output.
  std::string canonical() const;
};

// Ordered key/value report printed as "key: value" (text) or "key=value" (lines).
class Report {
 public:
  void add(std::string key, std::string value) { items_.emplace_back(std::move(key), std::move(value)); }
  std::string render(const std::string& format) const;

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

// Parses argv; throws InputError on unknown flags or malformed values.
RunConfig parse_command_line(int argc, const char* const* argv);

// Runs one command. Returns the process exit code; instance output goes to
// cfg.out (or `out`), reports go to `out` unless an instance took it.
int run(const RunConfig& cfg, std::ostream& out);

// parse_command_line + run with errors mapped to exit codes and printed to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsef2::cli
