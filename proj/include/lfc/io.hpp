#pragma once

// Files: training sets (CSV + JSON sidecar), observed data, density curves
// and report documents.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfc/density.hpp"
#include "lfc/diagnostics.hpp"
#include "lfc/forest.hpp"
#include "lfc/model.hpp"

namespace lfc {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// Sidecar path for a training CSV: same stem, ".json" extension.
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Writes the CSV (parameter columns then summary columns) and the sidecar.
/// `extra` is stored under "extra" in the sidecar.
void write_training_set(const TrainingSet& ts, const std::filesystem::path& csv, const Json& extra = Json::object());
TrainingSet read_training_set(const std::filesystem::path& csv, Json* extra = nullptr);

/// Numeric cells of a CSV in reading order; a leading non-numeric row is
/// taken as a header. Works for one row of data values or one column of
/// series values.
std::vector<double> read_observed_csv(const std::filesystem::path& path);
void write_series_csv(const std::filesystem::path& path, std::span<const double> values, const std::string& header);

void write_density_csv(const std::filesystem::path& path, const DensityEstimate& d);
/// Reads a (grid, value) CSV and checks the trapezoid integral is 1 +- 1e-6.
DensityEstimate read_density_csv(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const Json& doc);
Json read_json(const std::filesystem::path& path);
void ensure_directory(const std::filesystem::path& dir);

Json to_json(const PriorSpec& prior);
PriorSpec prior_from_json(const Json& j);
Json to_json(const ForestHyper& h);
ForestHyper hyper_from_json(const Json& j, const ForestHyper& defaults = {});
Json to_json(const GridSpec& g);
GridSpec grid_from_json(const Json& j, const GridSpec& defaults = {});
Json to_json(const ConflictReport& r, const std::vector<std::string>& summary_names);
Json to_json(const WindowScanReport& r);

}  // namespace lfc
