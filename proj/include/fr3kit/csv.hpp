// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace fr3 {

enum class TableFormat { csv, json };

TableFormat table_format_from_string(const std::string& s);

/// Fixed 9-significant-digit rendering shared by every emitted number, so
/// regression outputs stay byte-stable.
std::string format_number(double v);

uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

/// Writes via a temporary file and rename; throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);  // throws IoError

using Cell = std::variant<std::string, double, int64_t>;

/// Column-ordered table rendered as CSV ('.' decimals, '\n' newlines, header
/// row) or as a JSON array of row objects.
class Table {
  public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Cell> cells);
    /// Extra line appended verbatim after the rows (CSV only; ignored for JSON).
    void add_summary_line(const std::string& line);

    std::string render(TableFormat format) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::string> summary_lines_;
};

/// Collects output files under one directory and records them, with content
/// digests, in a manifest.json.
class ArtifactWriter {
  public:
    explicit ArtifactWriter(std::filesystem::path out_dir);

    void write(const std::string& name, const std::string& content);
    void write_table(const std::string& stem, const Table& table, TableFormat format);
    /// Writes manifest.json covering everything written so far.
    void finalize();

    const std::filesystem::path& dir() const { return out_dir_; }

  private:
    std::filesystem::path out_dir_;
    std::vector<std::pair<std::string, std::string>> entries_;  // name -> digest:bytes
};

}  // namespace fr3
