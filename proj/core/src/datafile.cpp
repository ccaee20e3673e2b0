#include "diracrose/datafile.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "diracrose/errors.hpp"

namespace diracrose {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

const std::string* DataFile::find(std::string_view key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string DataFile::format() const {
  std::string out;
  for (const auto& [key, value] : header) {
    out += "# ";
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ' ';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

DataFile DataFile::parse(std::string_view text) {
  DataFile file;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(line.starts_with("# ") ? 2 : 1);
      const auto eq = line.find(" = ");
      if (eq == std::string_view::npos) {
        file.header.emplace_back(std::string(trim(line)), std::string());
      } else {
        file.header.emplace_back(std::string(trim(line.substr(0, eq))),
                                 std::string(line.substr(eq + 3)));
      }
      continue;
    }
    line = trim(line);
    std::vector<double> row;
    std::string buffer(line);
    const char* p = buffer.c_str();
    for (;;) {
      while (*p == ' ' || *p == '\t') ++p;
      if (*p == '\0') break;
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(p, &end);
      if (end == p) {
        throw InvalidArgument("malformed number on data line " + std::to_string(line_no));
      }
      row.push_back(v);
      p = end;
    }
    file.rows.push_back(std::move(row));
  }
  return file;
}

void DataFile::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const std::string text = format();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

DataFile DataFile::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace diracrose
