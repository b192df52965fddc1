#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "coauthnet/corpus.hpp"
#include "coauthnet/export.hpp"
#include "coauthnet/layout.hpp"
#include "coauthnet/report.hpp"

namespace coauthnet {

struct AnalyzeConfig {
    std::filesystem::path members;
    std::filesystem::path papers;
    std::filesystem::path out_dir;
    std::optional<int> from; // defaults to the corpus' first year
    std::optional<int> to;   // defaults to the corpus' last year
    LayoutParams layout;
};

struct AnalyzeResult {
    Report report;
    Manifest manifest;
};

/// Full pipeline over every cumulative range. Writes the datasets, the
/// manifest, report.txt and report.json into `out_dir`.
AnalyzeResult analyze(const AnalyzeConfig& config);
AnalyzeResult analyze(const Corpus& corpus, const AnalyzeConfig& config);

inline constexpr const char* kReportTextFile = "report.txt";
inline constexpr const char* kReportJsonFile = "report.json";
inline constexpr const char* kManifestFile = "manifest.json";

} // namespace coauthnet
