// qwalk - deterministic TSV / PGM output
//
// Every file starts with one `# key=value ...` line echoing the resolved
// configuration, then a column-name line, then rows. Floats print with 17
// significant digits so doubles round-trip exactly and reruns are
// byte-identical.
#ifndef QWALK_IO_HPP_
#define QWALK_IO_HPP_

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// %.17g; round-trip exact for double precision.
std::string format_double(double value);

class TsvWriter {
 public:
  // Throws ConfigError when the file cannot be opened.
  TsvWriter(const std::string& path, const KeyValues& header,
            const std::vector<std::string>& columns);

  void row(const std::vector<std::string>& cells);

  // Convenience: formats doubles with format_double.
  void row(const std::vector<double>& cells);

 private:
  std::ofstream out_;
  std::size_t column_count_;
};

// 16-bit binary PGM (P5, maxval 65535, big-endian samples), min-max scaled;
// the scale and axes are recorded in comment lines. data is row-major
// rows x cols.
void write_pgm16(const std::string& path, std::size_t rows, std::size_t cols,
                 const std::vector<double>& data, const KeyValues& header);

void ensure_directory(const std::string& path);

}  // namespace qwalk

#endif  // QWALK_IO_HPP_
