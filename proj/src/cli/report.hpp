#pragma once

#include <optional>
#include <string>
#include <vector>

namespace unimod::cli {

// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  std::string render() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

// What every command prints: a '#'-prefixed header (command echo, catalog,
// assumptions, warnings), the result body, and a wall-time footer that
// --deterministic suppresses. Everything except the footer depends only on
// the inputs.
struct RunReport {
  std::string command;
  std::optional<std::string> catalog;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  std::string body;
  double seconds = 0.0;

  std::string render(bool deterministic) const;
};

// Quotes an argument for the command echo when it contains shell syntax.
std::string shell_quote(const std::string& arg);

}  // namespace unimod::cli
