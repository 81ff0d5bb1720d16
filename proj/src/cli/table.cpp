#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "uavwx/cli.hpp"

namespace uavwx::cli {

std::string format_number(double v) {
    if (!std::isfinite(v)) throw std::logic_error("attempt to emit a non-finite number");
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::logic_error("number formatting failed");
    return std::string(buf, ptr);
}

SweepTable::SweepTable(std::vector<std::string> columns, std::vector<std::string> units)
    : columns_(std::move(columns)), units_(std::move(units)) {
    if (columns_.size() != units_.size()) throw std::logic_error("column and unit rows differ in length");
}

void SweepTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::logic_error("row width does not match the header");
    for (const auto& c : row)
        if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d))
            throw std::logic_error("non-finite value in output row");
    rows_.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name) return i;
    throw std::out_of_range("no column named " + name);
}

double SweepTable::number(std::size_t row, const std::string& column) const {
    return std::get<double>(rows_.at(row).at(column_index(column)));
}

namespace {

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return {};
}

}  // namespace

void SweepTable::write_csv(std::ostream& out) const {
    for (auto it = metadata.begin(); it != metadata.end(); ++it)
        out << "# " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    for (const auto& n : notes_) out << "# note: " << n << '\n';
    write_csv_row(out, columns_);
    write_csv_row(out, units_);
    for (const auto& row : rows_) {
        std::vector<std::string> fields;
        fields.reserve(row.size());
        for (const auto& c : row) fields.push_back(cell_text(c));
        write_csv_row(out, fields);
    }
}

void SweepTable::write_json(std::ostream& out) const {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    doc["notes"] = notes_;
    doc["columns"] = columns_;
    doc["units"] = units_;
    auto rows = nlohmann::json::array();
    for (const auto& row : rows_) {
        auto r = nlohmann::json::array();
        for (const auto& c : row) {
            if (const auto* d = std::get_if<double>(&c))
                r.push_back(*d);
            else if (const auto* s = std::get_if<std::string>(&c))
                r.push_back(*s);
            else
                r.push_back(nullptr);
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(1) << '\n';
}

}  // namespace uavwx::cli
