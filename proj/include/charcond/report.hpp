#pragma once

#include "charcond/verify.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace charcond::report {

inline constexpr const char* kToolName = "charcond";
inline constexpr const char* kToolVersion = "1.0.0";

/**
 * ReportRow: one verification report flattened to the serialization schema.
 * Every field is a plain scalar, so a row survives a round trip through JSON
 * or CSV unchanged; witness values are rendered in the calculator's
 * expression grammar and can be re-parsed.
 */
struct ReportRow {
    std::string group;
    long long q = 0;
    std::string family;
    std::vector<long long> params;
    std::string degree_formula;
    long long conductor = 1;
    std::optional<std::string> witness_label;
    std::optional<std::string> witness_value;
    std::optional<std::string> case_label;
    bool field_generated = true;
    long long subset_size = 0;
    bool pass = false;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

ReportRow to_row(const verify::VerificationReport& r);

/**
 * ReportDocument: the rows of one sweep plus identifying metadata.  The
 * summary (counts, max conductor) is derived from the rows at serialization
 * time, and nothing in the document depends on wall time, so runs with equal
 * arguments serialize to equal bytes.
 */
struct ReportDocument {
    std::string command;
    long long q_min = 0;
    long long q_max = 0;
    long long seed = 0;
    std::vector<ReportRow> rows;

    long long passed() const;
    long long failed() const;
    long long max_conductor() const;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::ordered_json to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const ReportDocument& doc);

/// Inverse of to_json; throws std::invalid_argument when the embedded summary
/// disagrees with the row tallies.
ReportDocument document_from_json(const nlohmann::ordered_json& j);

/// Header plus one line per row, quoted per RFC 4180.  Carries exactly the
/// row content of the JSON form; document metadata stays with JSON.
std::string to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_csv(const std::string& text);

/// Human-readable listing; `color` wraps the pass column in ANSI green/red.
void write_text(std::ostream& os, const ReportDocument& doc, bool color);

}  // namespace charcond::report
