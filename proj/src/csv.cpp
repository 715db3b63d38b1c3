// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fr3kit/errors.hpp"

namespace fr3 {

namespace fs = std::filesystem;

TableFormat table_format_from_string(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    throw ConfigError("unknown output format: " + s);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string());
    }
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string render_cell(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    return std::to_string(std::get<int64_t>(cell));
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string render_cell_json(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return "\"" + json_escape(*s) + "\"";
    return render_cell(cell);
}

}  // namespace

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns_.size())
        throw std::logic_error("table row width does not match the header");
    rows_.push_back(std::move(cells));
}

void Table::add_summary_line(const std::string& line) { summary_lines_.push_back(line); }

std::string Table::render(TableFormat format) const {
    std::string out;
    if (format == TableFormat::csv) {
        for (size_t c = 0; c < columns_.size(); ++c) {
            if (c > 0) out.push_back(',');
            out += columns_[c];
        }
        out.push_back('\n');
        for (const auto& row : rows_) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out.push_back(',');
                out += render_cell(row[c]);
            }
            out.push_back('\n');
        }
        for (const auto& line : summary_lines_) {
            out += line;
            out.push_back('\n');
        }
    } else {
        out.push_back('[');
        for (size_t r = 0; r < rows_.size(); ++r) {
            out += r == 0 ? "\n" : ",\n";
            out += "  {";
            for (size_t c = 0; c < columns_.size(); ++c) {
                if (c > 0) out += ", ";
                out += "\"" + json_escape(columns_[c]) + "\": " + render_cell_json(rows_[r][c]);
            }
            out.push_back('}');
        }
        out += "\n]\n";
    }
    return out;
}

ArtifactWriter::ArtifactWriter(fs::path out_dir) : out_dir_(std::move(out_dir)) {
    std::error_code ec;
    fs::create_directories(out_dir_, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir_.string());
}

void ArtifactWriter::write(const std::string& name, const std::string& content) {
    write_file_atomic(out_dir_ / name, content);
    entries_.emplace_back(name, fnv1a64_hex(content) + ":" + std::to_string(content.size()));
}

void ArtifactWriter::write_table(const std::string& stem, const Table& table, TableFormat format) {
    write(stem + (format == TableFormat::csv ? ".csv" : ".json"), table.render(format));
}

void ArtifactWriter::finalize() {
    std::sort(entries_.begin(), entries_.end());
    std::string manifest = "{\n  \"files\": [";
    for (size_t i = 0; i < entries_.size(); ++i) {
        const auto sep = entries_[i].second.find(':');
        manifest += i == 0 ? "\n" : ",\n";
        manifest += "    {\"name\": \"" + entries_[i].first + "\", \"fnv1a64\": \"" +
                    entries_[i].second.substr(0, sep) + "\", \"bytes\": " +
                    entries_[i].second.substr(sep + 1) + "}";
    }
    manifest += "\n  ]\n}\n";
    write_file_atomic(out_dir_ / "manifest.json", manifest);
}

}  // namespace fr3
