#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace diffamp {

struct TableSchema {
  std::vector<std::string> columns;
};

// CSV with a header row, LF line endings, and 17 significant digits, so
// re-reading a file reproduces every double bit-exactly. Rows must match
// the schema width.
void emit_table(const std::filesystem::path& file, const TableSchema& schema,
                const std::vector<std::vector<double>>& rows);

std::string format_full_precision(double v);

}  // namespace diffamp
