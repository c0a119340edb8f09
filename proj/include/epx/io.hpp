#pragma once

// File formats: spaces in, reports and summaries out.

#include <string>
#include <string_view>

#include <json.hpp>

#include "epx/ep_metric.hpp"
#include "epx/homology.hpp"
#include "epx/report.hpp"
#include "epx/systems.hpp"

namespace epx {

/// format is one of json-matrix, json-points, csv. Throws ParseError (with line
/// and column where known), AxiomViolation or IoError.
EpMetricSpace load_space(const std::string& path, const std::string& format);
EpMetricSpace parse_space(std::string_view text, const std::string& format);

/// A finite distance rounded to 12 significant digits, or the string "inf".
nlohmann::json dist_json(ExtDist d);

/// {"labels": [...], "matrix": [[...]]}
nlohmann::json space_json(const EpMetricSpace& x);

/// [{"birth": t, "death": t|"inf", "representative": label}]
nlohmann::json barcode_json(const Barcode& b);

/// [{"degree": k, "betti": b, "torsion": [...]}]
nlohmann::json homology_json(const HomologyResult& h);

/// Simplices by dimension with their names and face tables.
nlohmann::json sset_json(const TruncatedSSet& z);

/// One row per critical value: t, then simplex counts per dimension.
std::string filtration_tsv(const FilteredSSet& f);

nlohmann::json report_json(const SuiteReport& r);
/// Compare rows when present, otherwise one line per check.
std::string report_tsv(const SuiteReport& r);

/// format is json or tsv. The duration is not written, so reruns are
/// byte-identical. Throws IoError.
void emit_report(const SuiteReport& r, const std::string& path, const std::string& format);

/// Writes to a file, or to stdout for "-". Throws IoError.
void write_text(const std::string& path, const std::string& text);

}  // namespace epx
