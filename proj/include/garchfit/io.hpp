#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "garchfit/dataset.hpp"
#include "garchfit/types.hpp"

namespace garchfit {

/// Shortest exact decimal rendering used in all text formats: 17 significant
/// digits round-trip any double bit-exactly through strtod.
[[nodiscard]] std::string format_g17(double value);

/// Dataset CSV: one optional leading '# ...' provenance comment, then the
/// header alpha0,alpha1,beta1,f1,f2,f3,kind and one row per FeatureVector.
void write_dataset_csv(const std::filesystem::path& path, const std::vector<FeatureVector>& rows,
                       const FeatureSetKind& kind, const std::string& provenance);

struct Dataset {
    std::vector<FeatureVector> rows;
    FeatureSetKind kind;
};

[[nodiscard]] Dataset read_dataset_csv(const std::filesystem::path& path);

/// Single-column series CSV with header x.
void write_series_csv(const std::filesystem::path& path, std::span<const double> series,
                      const std::string& provenance);

[[nodiscard]] std::vector<double> read_series_csv(const std::filesystem::path& path);

/// Flat stats JSON (autocovariances as "autocov_<lag>" keys) with an
/// embedded "run_config" object.
void write_stats_json(const std::filesystem::path& path, const EmpiricalStats& stats,
                      const std::string& run_config_json);

[[nodiscard]] EmpiricalStats read_stats_json(const std::filesystem::path& path);

}  // namespace garchfit
