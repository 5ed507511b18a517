#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charform {

/// One verified identity instance. Scalar fields are pre-rendered text
/// ("p/q" exact, "re" / "re:im" approximate) so records from both
/// arithmetic modes fit one report.
struct CheckRecord {
    std::string check;   // stable wire id, e.g. "eq2"
    unsigned degree = 0;
    std::string digest;  // FNV-1a of the canonical input encoding
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string delta;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

/// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

enum class ReportFormat { json, csv, pretty };

/// Accepts "json", "csv", "pretty"; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& name);

/// Renders records plus a summary. The JSON form is canonical: fixed key
/// order, no environment-dependent content, trailing newline.
std::string render_report(const VerificationReport& report, ReportFormat format);

}  // namespace charform
