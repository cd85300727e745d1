#ifndef BRAIDCRYST_REPORT_HPP
#define BRAIDCRYST_REPORT_HPP

#include <string>

#include <json.hpp>

#include "braidcryst/analysis.hpp"
#include "braidcryst/gamma_builder.hpp"

namespace braidcryst {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char *kToolVersion = "1.0.0";

struct ReportOptions {
    long max_order = 64;
    bool full = false;      // include large matrices in text output
    bool verify = true;     // run certificates
    bool timings = false;   // include wall-clock timings (breaks byte determinism)
};

struct Report {
    nlohmann::json json;
    bool certificates_ok = true;
};

// Full pipeline for `analyze`; `verify` keeps only the certificate sections.
Report build_report(const std::string &spec_text, const ReportOptions &opts);
Report build_verify_report(const std::string &spec_text, const ReportOptions &opts);

// Focused dumps.
nlohmann::json element_report(int n, const std::string &word_text);
nlohmann::json matrix_report(const std::string &spec_text, const ReportOptions &opts);
nlohmann::json presentation_report(long q);

std::string render_report_text(const Report &report, const ReportOptions &opts);
std::string render_element_text(const nlohmann::json &j);
std::string render_matrix_text(const nlohmann::json &j, const ReportOptions &opts);

// Helpers shared with tests.
nlohmann::json json_int(const Int &v);
nlohmann::json json_vector(const PureVector &v);

}  // namespace braidcryst

#endif
