#include "charform/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace charform {

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

std::size_t VerificationReport::failed() const { return records.size() - passed(); }

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "pretty") return ReportFormat::pretty;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or pretty)");
}

namespace {

nlohmann::ordered_json record_json(const CheckRecord& r) {
    return {{"check", r.check}, {"degree", r.degree}, {"digest", r.digest},
            {"pass", r.pass},   {"lhs", r.lhs},       {"rhs", r.rhs},
            {"delta", r.delta}};
}

std::string render_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const CheckRecord& r : report.records) j["records"].push_back(record_json(r));
    j["summary"] = {{"total", report.records.size()},
                    {"passed", report.passed()},
                    {"failed", report.failed()}};
    return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "check,degree,digest,pass,lhs,rhs,delta\n";
    for (const CheckRecord& r : report.records) {
        out << r.check << ',' << r.degree << ',' << r.digest << ',' << (r.pass ? "true" : "false")
            << ',' << r.lhs << ',' << r.rhs << ',' << r.delta << '\n';
    }
    return out.str();
}

std::string render_pretty(const VerificationReport& report) {
    std::ostringstream out;
    for (const CheckRecord& r : report.records) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  n=" << r.degree
            << "  lhs=" << r.lhs << "  rhs=" << r.rhs << "  delta=" << r.delta << "  ["
            << r.digest << "]\n";
    }
    out << report.passed() << '/' << report.records.size() << " checks passed\n";
    return out.str();
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return render_json(report);
        case ReportFormat::csv: return render_csv(report);
        case ReportFormat::pretty: return render_pretty(report);
    }
    throw std::logic_error("render_report: unreachable");
}

}  // namespace charform
