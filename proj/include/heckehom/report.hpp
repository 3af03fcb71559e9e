#pragma once

#include "heckehom/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace heckehom {

/// Deterministic tabular command output, rendered as JSON or TSV.
/// Identical scenario + flags + version give byte-identical output.
struct Report {
    std::string command;
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> warnings;

    void add_meta(const std::string& key, const std::string& value) {
        meta.emplace_back(key, value);
    }
    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string to_json() const;
    std::string to_tsv() const;
    std::string render(const std::string& format) const; // "json" | "tsv"
};

} // namespace heckehom
