#include "qwalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

std::string header_line(const KeyValues& header) {
  std::string line = "#";
  for (const auto& [key, value] : header) {
    line += " " + key + "=" + value;
  }
  line += "\n";
  return line;
}

}  // namespace

TsvWriter::TsvWriter(const std::string& path, const KeyValues& header,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), column_count_(columns.size()) {
  if (!out_) {
    throw ConfigError("cannot open output file: " + path);
  }
  out_ << header_line(header);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << columns[i] << (i + 1 < columns.size() ? '\t' : '\n');
  }
}

void TsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != column_count_) {
    throw std::logic_error("TsvWriter: cell count does not match columns");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out_ << cells[i] << (i + 1 < cells.size() ? '\t' : '\n');
  }
}

void TsvWriter::row(const std::vector<double>& cells) {
  std::vector<std::string> text;
  text.reserve(cells.size());
  for (double v : cells) text.push_back(format_double(v));
  row(text);
}

void write_pgm16(const std::string& path, std::size_t rows, std::size_t cols,
                 const std::vector<double>& data, const KeyValues& header) {
  if (data.size() != rows * cols || rows == 0 || cols == 0) {
    throw std::logic_error("write_pgm16: data size does not match rows x cols");
  }
  double lo = data[0], hi = data[0];
  for (double v : data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open output file: " + path);
  }
  out << "P5\n";
  out << header_line(header);
  out << "# scale_min=" << format_double(lo) << " scale_max=" << format_double(hi)
      << "\n";
  out << cols << " " << rows << "\n65535\n";
  std::string bytes;
  bytes.reserve(2 * data.size());
  for (double v : data) {
    const double scaled = (v - lo) / span * 65535.0;
    const auto q = static_cast<unsigned>(std::lround(std::clamp(scaled, 0.0, 65535.0)));
    bytes.push_back(static_cast<char>((q >> 8) & 0xff));
    bytes.push_back(static_cast<char>(q & 0xff));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) {
    throw ConfigError("cannot create output directory: " + path);
  }
}

}  // namespace qwalk
