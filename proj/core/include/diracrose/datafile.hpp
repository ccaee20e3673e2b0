#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diracrose {

// ASCII table: "# key = value" header lines, then whitespace-separated rows
// of numbers printed with %.12g.
struct DataFile {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::vector<double>> rows;

  void add(std::string key, std::string value) { header.emplace_back(std::move(key), std::move(value)); }
  const std::string* find(std::string_view key) const;

  std::string format() const;
  static DataFile parse(std::string_view text);

  // Throw IoError naming the path on failure.
  void write(const std::filesystem::path& path) const;
  static DataFile read(const std::filesystem::path& path);
};

std::string format_number(double value);

}  // namespace diracrose
