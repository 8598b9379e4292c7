#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace unimod::cli {

TextTable::TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void TextTable::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

std::string TextTable::render() const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string RunReport::render(bool deterministic) const {
  std::string out = "# " + command + "\n";
  if (catalog) out += "# catalog: " + *catalog + "\n";
  if (assumptions.empty()) out += "# assumptions: none\n";
  for (const auto& a : assumptions) out += "# assumption: " + a + "\n";
  for (const auto& w : warnings) out += "# warning: " + w + "\n";
  out += body;
  if (!body.empty() && body.back() != '\n') out += "\n";
  if (!deterministic) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "# wall time: %.3f s\n", seconds);
    out += buf;
  }
  return out;
}

std::string shell_quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"'[]!$&|;<>()*?#\\") == std::string::npos) return arg;
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

}  // namespace unimod::cli
