#pragma once

/// @file render.hpp
/// Text, CSV, JSON and LaTeX emitters for triangle tables and verification
/// reports. Output is byte-deterministic for fixed inputs.

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/sequences.hpp"
#include "lucas/verify.hpp"

namespace lucas {

enum class output_format { text, csv, json, latex };

inline std::optional<output_format> format_from_string(std::string_view name) {
    if (name == "text") return output_format::text;
    if (name == "csv") return output_format::csv;
    if (name == "json") return output_format::json;
    if (name == "latex") return output_format::latex;
    return std::nullopt;
}

inline std::string_view to_string(output_format f) {
    switch (f) {
        case output_format::text: return "text";
        case output_format::csv: return "csv";
        case output_format::json: return "json";
        case output_format::latex: return "latex";
    }
    return "?";
}

namespace render_detail {

inline std::string cell_string(const triangle_table& table, int n, int k) {
    auto it = table.cells.find({n, k});
    if (it != table.cells.end()) return it->second.str();
    return "0";  // above the diagonal; matches the printed tables
}

/// Rows of cell strings; triangles are padded to a rectangle with "0".
inline std::vector<std::vector<std::string>> cell_rows(const triangle_table& table) {
    const int cols = is_triangle(table.id) ? table.rows + 1 : 1;
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= table.rows; ++n) {
        std::vector<std::string> row;
        row.reserve(std::size_t(cols));
        for (int k = 0; k < cols; ++k) row.push_back(cell_string(table, n, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

/// Braces multi-digit exponents so canonical strings typeset correctly.
inline std::string latex_math(const std::string& text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '^') {
            out += text[i];
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j - i - 1 > 1)
            out += "^{" + text.substr(i + 1, j - i - 1) + "}";
        else
            out += text.substr(i, j - i);
        i = j - 1;
    }
    return "$" + out + "$";
}

inline std::string stirling2_footnote() {
    return "note: column k=2 (and cell (2,2)) follows the stated recursion, one degree "
           "lower than the printed table; the set-partition counts at (s,t)=(2,-1) side "
           "with these values.";
}

}  // namespace render_detail

inline std::string render_table(const triangle_table& table, output_format format) {
    using namespace render_detail;
    const auto rows = cell_rows(table);
    const bool triangle_layout = is_triangle(table.id);
    const bool footnote =
        table.id == sequence_id::stirling2 && table.rows >= 2;

    switch (format) {
        case output_format::text: {
            std::vector<std::string> header{triangle_layout ? "n\\k" : "n"};
            if (triangle_layout)
                for (int k = 0; k <= table.rows; ++k) header.push_back(std::to_string(k));
            else
                header.push_back(std::string(to_string(table.id)));
            std::vector<std::size_t> width(header.size());
            for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
            for (std::size_t n = 0; n < rows.size(); ++n) {
                width[0] = std::max(width[0], std::to_string(n).size());
                for (std::size_t c = 0; c < rows[n].size(); ++c)
                    width[c + 1] = std::max(width[c + 1], rows[n][c].size());
            }
            auto pad = [](const std::string& s, std::size_t w, bool last) {
                return last ? s : s + std::string(w - s.size(), ' ');
            };
            std::string out;
            for (std::size_t c = 0; c < header.size(); ++c)
                out += (c ? "  " : "") + pad(header[c], width[c], c + 1 == header.size());
            out += '\n';
            for (std::size_t n = 0; n < rows.size(); ++n) {
                out += pad(std::to_string(n), width[0], false);
                for (std::size_t c = 0; c < rows[n].size(); ++c)
                    out += "  " + pad(rows[n][c], width[c + 1], c + 1 == rows[n].size());
                out += '\n';
            }
            if (footnote) out += stirling2_footnote() + '\n';
            return out;
        }
        case output_format::csv: {
            std::string out = triangle_layout ? "n\\k" : "n";
            if (triangle_layout)
                for (int k = 0; k <= table.rows; ++k) out += "," + std::to_string(k);
            else
                out += "," + std::string(to_string(table.id));
            out += '\n';
            for (std::size_t n = 0; n < rows.size(); ++n) {
                out += std::to_string(n);
                for (const auto& cell : rows[n]) out += "," + csv_escape(cell);
                out += '\n';
            }
            return out;
        }
        case output_format::json: {
            nlohmann::ordered_json doc;
            doc["sequence"] = std::string(to_string(table.id));
            doc["rows"] = nlohmann::ordered_json::array();
            for (const auto& row : rows) doc["rows"].push_back(row);
            if (footnote) doc["note"] = stirling2_footnote();
            return doc.dump(2) + "\n";
        }
        case output_format::latex: {
            std::string out = "\\begin{tabular}{c|";
            out += std::string(rows.front().size(), 'c');
            out += "}\n";
            out += triangle_layout ? "$n\\backslash k$" : "$n$";
            if (triangle_layout)
                for (int k = 0; k <= table.rows; ++k) out += " & $" + std::to_string(k) + "$";
            else
                out += " & " + std::string(to_string(table.id));
            out += " \\\\\n\\hline\n";
            for (std::size_t n = 0; n < rows.size(); ++n) {
                out += "$" + std::to_string(n) + "$";
                for (const auto& cell : rows[n]) out += " & " + latex_math(cell);
                out += " \\\\\n";
            }
            out += "\\end{tabular}\n";
            if (footnote) out += "% " + stirling2_footnote() + '\n';
            return out;
        }
    }
    return {};
}

inline std::string render_report(const verify::verification_report& report,
                                 output_format format) {
    using namespace render_detail;
    switch (format) {
        case output_format::text: {
            std::string out;
            for (const auto& check : report.checks) {
                out += "[" + std::string(verify::to_string(check.status)) + "] " + check.id +
                       "  " + check.index_range + "  (" +
                       std::to_string(check.cells_checked) +
                       (check.cells_checked == 1 ? " cell)" : " cells)") + '\n';
                for (const auto& w : check.witnesses) {
                    if (!w.index.empty()) out += "    at " + w.index + '\n';
                    if (!w.lhs.empty()) out += "    generated: " + w.lhs + '\n';
                    if (!w.rhs.empty()) out += "    expected:  " + w.rhs + '\n';
                    if (!w.note.empty()) out += "    note: " + w.note + '\n';
                }
            }
            out += "summary: " + std::to_string(report.checks.size()) + " checks, " +
                   std::to_string(report.passed) + " pass, " + std::to_string(report.failed) +
                   " fail, " + std::to_string(report.errata) + " errata\n";
            return out;
        }
        case output_format::csv: {
            std::string out = "id,index_range,status,cells_checked,lhs,rhs,note\n";
            for (const auto& check : report.checks) {
                std::string lhs, rhs, note;
                if (!check.witnesses.empty()) {
                    lhs = check.witnesses.front().lhs;
                    rhs = check.witnesses.front().rhs;
                    note = check.witnesses.front().note;
                }
                out += csv_escape(check.id) + "," + csv_escape(check.index_range) + "," +
                       std::string(verify::to_string(check.status)) + "," +
                       std::to_string(check.cells_checked) + "," + csv_escape(lhs) + "," +
                       csv_escape(rhs) + "," + csv_escape(note) + '\n';
            }
            return out;
        }
        case output_format::json: {
            nlohmann::ordered_json doc;
            doc["checks"] = nlohmann::ordered_json::array();
            for (const auto& check : report.checks) {
                nlohmann::ordered_json jc;
                jc["id"] = check.id;
                jc["index_range"] = check.index_range;
                jc["status"] = std::string(verify::to_string(check.status));
                jc["cells_checked"] = check.cells_checked;
                if (!check.witnesses.empty()) {
                    jc["witnesses"] = nlohmann::ordered_json::array();
                    for (const auto& w : check.witnesses)
                        jc["witnesses"].push_back({{"index", w.index},
                                                   {"generated", w.lhs},
                                                   {"expected", w.rhs},
                                                   {"note", w.note}});
                }
                doc["checks"].push_back(std::move(jc));
            }
            doc["summary"] = {{"pass", report.passed},
                              {"fail", report.failed},
                              {"errata", report.errata}};
            return doc.dump(2) + "\n";
        }
        case output_format::latex: {
            std::string out = "\\begin{tabular}{llrr}\nid & status & range & cells \\\\\n\\hline\n";
            for (const auto& check : report.checks)
                out += check.id + " & " + std::string(verify::to_string(check.status)) +
                       " & " + check.index_range + " & " +
                       std::to_string(check.cells_checked) + " \\\\\n";
            out += "\\end{tabular}\n";
            return out;
        }
    }
    return {};
}

}  // namespace lucas
