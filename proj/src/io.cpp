#include "garchfit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "garchfit/errors.hpp"

namespace garchfit {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& text, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw FormatError(where + ": not a number: '" + text + "'");
    }
}

}  // namespace

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_dataset_csv(const std::filesystem::path& path, const std::vector<FeatureVector>& rows,
                       const FeatureSetKind& kind, const std::string& provenance) {
    auto out = open_out(path);
    if (!provenance.empty()) out << "# " << provenance << "\n";
    out << "alpha0,alpha1,beta1,f1,f2,f3,kind\n";
    const std::string kind_text = to_string(kind);
    for (const FeatureVector& row : rows) {
        out << format_g17(row.source.alpha0) << ',' << format_g17(row.source.alpha1) << ','
            << format_g17(row.source.beta1) << ',' << format_g17(row.features[0]) << ','
            << format_g17(row.features[1]) << ',' << format_g17(row.features[2]) << ','
            << kind_text << "\n";
    }
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    std::size_t line_no = 0;
    // Skip provenance comments; the first real line must be the header.
    do {
        if (!std::getline(in, line)) throw FormatError(path.string() + ": empty dataset file");
        ++line_no;
    } while (!line.empty() && line[0] == '#');
    if (line != "alpha0,alpha1,beta1,f1,f2,f3,kind") {
        throw FormatError(path.string() + ": bad header '" + line + "'");
    }

    Dataset ds;
    bool kind_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_fields(line);
        if (fields.size() != 7) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected 7 fields, got " +
                              std::to_string(fields.size()));
        }
        const std::string where = path.string() + ":" + std::to_string(line_no);
        FeatureVector row;
        row.source.alpha0 = parse_double(fields[0], where + " alpha0");
        row.source.alpha1 = parse_double(fields[1], where + " alpha1");
        row.source.beta1 = parse_double(fields[2], where + " beta1");
        row.features[0] = parse_double(fields[3], where + " f1");
        row.features[1] = parse_double(fields[4], where + " f2");
        row.features[2] = parse_double(fields[5], where + " f3");
        row.target_alpha1 = row.source.alpha1;
        const FeatureSetKind kind = parse_kind(fields[6]);
        if (!kind_seen) {
            ds.kind = kind;
            kind_seen = true;
        } else if (kind != ds.kind) {
            throw FormatError(where + ": mixed kinds in one dataset (" + to_string(ds.kind) +
                              " vs " + fields[6] + ")");
        }
        ds.rows.push_back(row);
    }
    if (!kind_seen) throw FormatError(path.string() + ": dataset has no rows");
    return ds;
}

void write_series_csv(const std::filesystem::path& path, std::span<const double> series,
                      const std::string& provenance) {
    auto out = open_out(path);
    if (!provenance.empty()) out << "# " << provenance << "\n";
    out << "x\n";
    for (double v : series) out << format_g17(v) << "\n";
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

std::vector<double> read_series_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::vector<double> series;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen && line == "x") {
            header_seen = true;
            continue;
        }
        series.push_back(parse_double(line, path.string() + ":" + std::to_string(line_no)));
    }
    if (series.empty()) throw FormatError(path.string() + ": series file has no samples");
    return series;
}

void write_stats_json(const std::filesystem::path& path, const EmpiricalStats& stats,
                      const std::string& run_config_json) {
    nlohmann::ordered_json j;
    j["n_obs"] = stats.n_obs;
    j["second_moment"] = stats.second_moment;
    j["gamma4"] = stats.gamma4;
    j["gamma6"] = stats.gamma6;
    j["gamma8"] = stats.gamma8;
    j["gamma10"] = stats.gamma10;
    for (const auto& [lag, value] : stats.autocov_hat) {
        j["autocov_" + std::to_string(lag)] = value;
    }
    if (!run_config_json.empty()) j["run_config"] = nlohmann::json::parse(run_config_json);
    auto out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

EmpiricalStats read_stats_json(const std::filesystem::path& path) {
    auto in = open_in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw FormatError(path.string() + ": stats JSON must be an object");

    EmpiricalStats stats;
    const auto take = [&](const char* key, double& dst) {
        if (j.contains(key)) {
            if (!j[key].is_number()) throw FormatError(path.string() + ": field '" + key + "' is not a number");
            dst = j[key].get<double>();
        }
    };
    take("second_moment", stats.second_moment);
    take("gamma4", stats.gamma4);
    take("gamma6", stats.gamma6);
    take("gamma8", stats.gamma8);
    take("gamma10", stats.gamma10);
    if (j.contains("n_obs")) stats.n_obs = j["n_obs"].get<long long>();
    for (const auto& [key, value] : j.items()) {
        constexpr const char* prefix = "autocov_";
        if (key.rfind(prefix, 0) == 0) {
            if (!value.is_number()) throw FormatError(path.string() + ": field '" + key + "' is not a number");
            try {
                stats.autocov_hat[std::stoi(key.substr(8))] = value.get<double>();
            } catch (const std::exception&) {
                throw FormatError(path.string() + ": bad autocovariance key '" + key + "'");
            }
        }
    }
    return stats;
}

}  // namespace garchfit
