#include "charcond/report.hpp"

#include "charcond/expr.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace charcond::report {

namespace {

using nlohmann::ordered_json;

const char* const kCsvHeader =
    "group,q,family,params,degree_formula,conductor,witness_label,witness_value,"
    "case_label,field_generated,subset_size,pass";

std::string join_params(const std::vector<long long>& params) {
    std::string out;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(params[i]);
    }
    return out;
}

std::vector<long long> split_params(const std::string& text) {
    std::vector<long long> out;
    std::istringstream in(text);
    long long v;
    while (in >> v) out.push_back(v);
    return out;
}

std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

ordered_json json_opt(const std::optional<std::string>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<std::string> opt_from_json(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::string>();
}

}  // namespace

ReportRow to_row(const verify::VerificationReport& r) {
    ReportRow row;
    row.group = chartab::group_name(r.character.group);
    row.q = r.character.q;
    row.family = chartab::family_name(r.character.family);
    row.params = r.character.params;
    row.degree_formula = chartab::degree_formula(r.character);
    row.conductor = r.conductor;
    if (r.witness) row.witness_label = r.witness->label;
    if (r.witness_value) row.witness_value = expr::to_expression(*r.witness_value);
    row.case_label = r.case_label;
    row.field_generated = r.field_generated_by_witness;
    row.subset_size = r.generating_subset_size;
    row.pass = r.pass;
    return row;
}

long long ReportDocument::passed() const {
    return std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

long long ReportDocument::failed() const {
    return static_cast<long long>(rows.size()) - passed();
}

long long ReportDocument::max_conductor() const {
    long long best = 0;
    for (const ReportRow& r : rows) best = std::max(best, r.conductor);
    return best;
}

ordered_json to_json(const ReportRow& row) {
    ordered_json j;
    j["group"] = row.group;
    j["q"] = row.q;
    j["family"] = row.family;
    j["params"] = row.params;
    j["degree_formula"] = row.degree_formula;
    j["conductor"] = row.conductor;
    j["witness_label"] = json_opt(row.witness_label);
    j["witness_value"] = json_opt(row.witness_value);
    j["case_label"] = json_opt(row.case_label);
    j["field_generated"] = row.field_generated;
    j["subset_size"] = row.subset_size;
    j["pass"] = row.pass;
    return j;
}

ReportRow row_from_json(const ordered_json& j) {
    ReportRow row;
    row.group = j.at("group").get<std::string>();
    row.q = j.at("q").get<long long>();
    row.family = j.at("family").get<std::string>();
    row.params = j.at("params").get<std::vector<long long>>();
    row.degree_formula = j.at("degree_formula").get<std::string>();
    row.conductor = j.at("conductor").get<long long>();
    row.witness_label = opt_from_json(j.at("witness_label"));
    row.witness_value = opt_from_json(j.at("witness_value"));
    row.case_label = opt_from_json(j.at("case_label"));
    row.field_generated = j.at("field_generated").get<bool>();
    row.subset_size = j.at("subset_size").get<long long>();
    row.pass = j.at("pass").get<bool>();
    return row;
}

ordered_json to_json(const ReportDocument& doc) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = doc.command;
    j["q_min"] = doc.q_min;
    j["q_max"] = doc.q_max;
    j["seed"] = doc.seed;
    j["reports"] = ordered_json::array();
    for (const ReportRow& row : doc.rows) j["reports"].push_back(to_json(row));
    j["summary"] = {{"total", doc.rows.size()},
                    {"passed", doc.passed()},
                    {"failed", doc.failed()},
                    {"max_conductor", doc.max_conductor()}};
    return j;
}

ReportDocument document_from_json(const ordered_json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.q_min = j.at("q_min").get<long long>();
    doc.q_max = j.at("q_max").get<long long>();
    doc.seed = j.at("seed").get<long long>();
    for (const auto& row : j.at("reports")) doc.rows.push_back(row_from_json(row));
    const auto& summary = j.at("summary");
    if (summary.at("total").get<size_t>() != doc.rows.size() ||
        summary.at("passed").get<long long>() != doc.passed() ||
        summary.at("failed").get<long long>() != doc.failed() ||
        summary.at("max_conductor").get<long long>() != doc.max_conductor())
        throw std::invalid_argument("report summary disagrees with row tallies");
    return doc;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const ReportRow& row : rows) {
        out += csv_cell(row.group);
        out += ',' + std::to_string(row.q);
        out += ',' + csv_cell(row.family);
        out += ',' + csv_cell(join_params(row.params));
        out += ',' + csv_cell(row.degree_formula);
        out += ',' + std::to_string(row.conductor);
        out += ',' + csv_cell(row.witness_label.value_or(""));
        out += ',' + csv_cell(row.witness_value.value_or(""));
        out += ',' + csv_cell(row.case_label.value_or(""));
        out += std::string(",") + (row.field_generated ? "true" : "false");
        out += ',' + std::to_string(row.subset_size);
        out += std::string(",") + (row.pass ? "true" : "false");
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false, any = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"' && cell.empty()) {
            quoted = true;
            any = true;
        } else if (c == ',') {
            record.push_back(std::move(cell));
            cell.clear();
            any = true;
        } else if (c == '\n') {
            if (any || !cell.empty()) {
                record.push_back(std::move(cell));
                records.push_back(std::move(record));
            }
            cell.clear();
            record.clear();
            any = false;
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (any || !cell.empty()) {
        record.push_back(std::move(cell));
        records.push_back(std::move(record));
    }
    return records;
}

std::optional<std::string> opt_from_cell(std::string cell) {
    if (cell.empty()) return std::nullopt;
    return cell;
}

}  // namespace

std::vector<ReportRow> rows_from_csv(const std::string& text) {
    auto records = parse_csv(text);
    if (records.empty() || records.front() != parse_csv(kCsvHeader).front())
        throw std::invalid_argument("missing or malformed csv header");
    std::vector<ReportRow> rows;
    for (size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.size() != 12)
            throw std::invalid_argument("csv record " + std::to_string(i) + " has " +
                                        std::to_string(r.size()) + " fields, expected 12");
        ReportRow row;
        row.group = r[0];
        row.q = std::stoll(r[1]);
        row.family = r[2];
        row.params = split_params(r[3]);
        row.degree_formula = r[4];
        row.conductor = std::stoll(r[5]);
        row.witness_label = opt_from_cell(r[6]);
        row.witness_value = opt_from_cell(r[7]);
        row.case_label = opt_from_cell(r[8]);
        row.field_generated = r[9] == "true";
        row.subset_size = std::stoll(r[10]);
        row.pass = r[11] == "true";
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text(std::ostream& os, const ReportDocument& doc, bool color) {
    os << doc.command << "  q=" << doc.q_min;
    if (doc.q_max != doc.q_min) os << ".." << doc.q_max;
    os << "  seed=" << doc.seed << "\n";

    std::vector<std::string> names;
    size_t name_width = 0;
    for (const ReportRow& row : doc.rows) {
        names.push_back(row.group + "(" + std::to_string(row.q) + ") " + row.family + "(" +
                        join_params(row.params) + ")");
        name_width = std::max(name_width, names.back().size());
    }
    for (size_t i = 0; i < doc.rows.size(); ++i) {
        const ReportRow& row = doc.rows[i];
        os << "  " << std::left << std::setw(static_cast<int>(name_width)) << names[i]
           << " conductor " << std::right << std::setw(6) << row.conductor;
        os << "  subset " << (row.subset_size < 0 ? std::string(">cap")
                                                  : std::to_string(row.subset_size));
        if (row.case_label) os << "  [" << *row.case_label << "]";
        const char* verdict = row.pass ? "PASS" : "FAIL";
        if (color)
            os << "  " << (row.pass ? "\x1b[32m" : "\x1b[31m") << verdict << "\x1b[0m";
        else
            os << "  " << verdict;
        os << "\n";
    }
    os << doc.rows.size() << " reports, " << doc.passed() << " passed, " << doc.failed()
       << " failed, max conductor " << doc.max_conductor() << "\n";
}

}  // namespace charcond::report
