#include "heckehom/report.hpp"

#include <json.hpp>

#include <sstream>

namespace heckehom {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["scenario"] = scenario;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = m;
    nlohmann::ordered_json rws = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < headers.size() && i < row.size(); ++i) r[headers[i]] = row[i];
        rws.push_back(r);
    }
    j["rows"] = rws;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

std::string Report::to_tsv() const {
    std::ostringstream os;
    os << "# command\t" << command << "\n";
    os << "# scenario\t" << scenario << "\n";
    for (const auto& [k, v] : meta) os << "# " << k << "\t" << v << "\n";
    for (const auto& w : warnings) os << "# warning\t" << w << "\n";
    if (!headers.empty()) {
        for (std::size_t i = 0; i < headers.size(); ++i) {
            if (i) os << "\t";
            os << headers[i];
        }
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << "\t";
                os << row[i];
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "tsv") return to_tsv();
    throw DomainError("unknown output format: " + format);
}

} // namespace heckehom
