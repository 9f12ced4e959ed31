#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tic_test {

// Reads a golden CSV: '#' lines are comments, rows are comma-separated
// integers.
inline std::vector<std::vector<int64_t>> read_golden(const std::string& name) {
  std::string path = std::string(TIC_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing golden file: " + path);
  std::vector<std::vector<int64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<int64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tic_test
