#include "epx/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "epx/errors.hpp"

namespace epx {

using nlohmann::json;

void SuiteReport::add(std::string id, std::string property, bool passed, std::string witness) {
  for (const auto& c : checks) {
    if (c.id == id) throw std::logic_error("duplicate check id " + id);
  }
  checks.push_back({std::move(id), std::move(property), passed, std::move(witness)});
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool is_inf_literal(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "inf" || lower == "infinity";
}

ExtDist json_dist(const json& v, const std::string& where) {
  if (v.is_string() && is_inf_literal(v.get<std::string>())) return ExtDist::inf();
  if (!v.is_number()) throw ParseError(where + ": expected a number or \"inf\"");
  const double x = v.get<double>();
  if (!(x >= 0.0)) throw ParseError(where + ": distances must be non-negative");
  return ExtDist(x);
}

std::vector<std::string> json_labels(const json& doc, std::size_t n) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) return labels;
  const json& l = doc.at("labels");
  if (!l.is_array() || l.size() != n) throw ParseError("\"labels\" must list one label per point");
  for (const auto& v : l) {
    if (v.is_string()) {
      labels.push_back(v.get<std::string>());
    } else if (v.is_number()) {
      labels.push_back(v.dump());
    } else {
      throw ParseError("labels must be strings or numbers");
    }
  }
  return labels;
}

EpMetricSpace parse_json_matrix(const json& doc) {
  if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("expected an object with \"matrix\"");
  const json& m = doc.at("matrix");
  if (!m.is_array()) throw ParseError("\"matrix\" must be an array of rows");
  const std::size_t n = m.size();
  std::vector<std::vector<ExtDist>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) {
      throw ParseError(fmt::format("matrix row {} must have {} entries", i, n));
    }
    std::vector<ExtDist> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(json_dist(m[i][j], fmt::format("matrix[{}][{}]", i, j)));
    rows.push_back(std::move(row));
  }
  return validate_ep_metric(json_labels(doc, n), rows);
}

EpMetricSpace parse_json_points(const json& doc) {
  if (!doc.is_object() || !doc.contains("points")) throw ParseError("expected an object with \"points\"");
  if (doc.contains("metric") && doc.at("metric") != "euclidean") {
    throw ParseError("only the euclidean metric is supported");
  }
  const json& p = doc.at("points");
  if (!p.is_array()) throw ParseError("\"points\" must be an array");
  std::vector<std::vector<double>> points;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_array()) throw ParseError(fmt::format("point {} must be a coordinate array", i));
    std::vector<double> c;
    for (const auto& v : p[i]) {
      if (!v.is_number()) throw ParseError(fmt::format("point {} has a non-numeric coordinate", i));
      c.push_back(v.get<double>());
    }
    if (!points.empty() && c.size() != points.front().size()) {
      throw ParseError(fmt::format("point {} has the wrong dimension", i));
    }
    points.push_back(std::move(c));
  }
  return euclidean_space(points, json_labels(doc, points.size()));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::pair<std::string, std::size_t>> split_csv(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string::npos ? line.size() : comma;
    cells.emplace_back(trim(std::string_view(line).substr(start, end - start)), start + 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

EpMetricSpace parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  bool corner = false;
  std::vector<std::vector<ExtDist>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (labels.empty() && rows.empty()) {
      corner = cells.front().first.empty();
      for (std::size_t c = corner ? 1 : 0; c < cells.size(); ++c) labels.push_back(cells[c].first);
      if (labels.empty()) throw ParseError(fmt::format("line {}, column 1: empty header", line_no));
      continue;
    }
    const std::size_t n = labels.size();
    std::size_t first = 0;
    if (cells.size() == n + 1) {
      first = 1;
      if (cells[0].first != labels[rows.size() < n ? rows.size() : 0]) {
        throw ParseError(fmt::format("line {}, column 1: row label {} does not match the header",
                                     line_no, cells[0].first));
      }
    } else if (cells.size() != n || corner) {
      throw ParseError(fmt::format("line {}, column 1: expected {} entries", line_no, n));
    }
    std::vector<ExtDist> row;
    for (std::size_t c = first; c < cells.size(); ++c) {
      const auto& [cell, column] = cells[c];
      if (is_inf_literal(cell)) {
        row.push_back(ExtDist::inf());
        continue;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || !(v >= 0.0)) {
        throw ParseError(fmt::format("line {}, column {}: bad distance '{}'", line_no, column, cell));
      }
      row.push_back(ExtDist(v));
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != labels.size()) {
    throw ParseError(fmt::format("expected {} matrix rows, found {}", labels.size(), rows.size()));
  }
  return validate_ep_metric(labels, rows);
}

}  // namespace

EpMetricSpace parse_space(std::string_view text, const std::string& format) {
  if (format == "csv") return parse_csv(text);
  if (format != "json-matrix" && format != "json-points") {
    throw ParseError("unknown input format " + format);
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError(fmt::format("line {}, column {}: malformed JSON", line, col));
  }
  try {
    return format == "json-matrix" ? parse_json_matrix(doc) : parse_json_points(doc);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

EpMetricSpace load_space(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str(), format);
}

json dist_json(ExtDist d) {
  if (d.is_inf()) return "inf";
  return std::stod(fmt::format("{:.12g}", d.value()));
}

json space_json(const EpMetricSpace& x) {
  json m = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.size(); ++j) row.push_back(dist_json(x.d(i, j)));
    m.push_back(std::move(row));
  }
  return {{"labels", x.labels()}, {"matrix", std::move(m)}};
}

json barcode_json(const Barcode& b) {
  json out = json::array();
  for (const auto& bar : b) {
    out.push_back({{"birth", dist_json(bar.birth)},
                   {"death", dist_json(bar.death)},
                   {"essential", bar.essential},
                   {"representative", bar.representative}});
  }
  return out;
}

json homology_json(const HomologyResult& h) {
  json out = json::array();
  for (const auto& g : h.groups) {
    out.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", g.torsion}});
  }
  return out;
}

json sset_json(const TruncatedSSet& z) {
  json levels = json::array();
  for (int n = 0; n <= z.cap(); ++n) {
    json lvl = json::array();
    for (const auto& s : z.level(n)) {
      json faces = json::array();
      for (const auto& f : s.faces) {
        faces.push_back({{"base", f.base.index}, {"degeneracy", f.degeneracy.values()}});
      }
      lvl.push_back({{"name", s.name}, {"faces", std::move(faces)}});
    }
    levels.push_back(std::move(lvl));
  }
  return {{"cap", z.cap()}, {"simplices", std::move(levels)}};
}

std::string filtration_tsv(const FilteredSSet& f) {
  std::string out = "t";
  for (int n = 0; n <= f.cap(); ++n) out += fmt::format("\tdim{}", n);
  out += '\n';
  for (std::size_t i = 0; i < f.stage_count(); ++i) {
    out += f.critical_values()[i].to_string();
    for (int n = 0; n <= f.cap(); ++n) out += fmt::format("\t{}", f.stage(i).count(n));
    out += '\n';
  }
  return out;
}

json report_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"id", c.id}, {"property", c.property}, {"passed", c.passed}, {"witness", c.witness}});
  }
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"t", dist_json(row.t)},
                    {"degree", row.degree},
                    {"vr_betti", row.vr_betti},
                    {"singular_betti", row.singular_betti},
                    {"vr_torsion", row.vr_torsion},
                    {"singular_torsion", row.singular_torsion},
                    {"match", row.match}});
  }
  return {{"suite", r.name}, {"passed", r.passed()}, {"checks", std::move(checks)}, {"rows", std::move(rows)}};
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  return v.empty() ? "-" : fmt::format("{}", fmt::join(v, ","));
}

}  // namespace

std::string report_tsv(const SuiteReport& r) {
  std::string out;
  if (!r.rows.empty()) {
    out = "t\tdegree\tvr_betti\tsingular_betti\tvr_torsion\tsingular_torsion\tmatch\n";
    for (const auto& row : r.rows) {
      out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", row.t.to_string(), row.degree, row.vr_betti,
                         row.singular_betti, join(row.vr_torsion), join(row.singular_torsion),
                         row.match ? "true" : "false");
    }
    return out;
  }
  out = "id\tproperty\tstatus\twitness\n";
  for (const auto& c : r.checks) {
    out += fmt::format("{}\t{}\t{}\t{}\n", c.id, c.property, c.passed ? "PASS" : "FAIL", c.witness);
  }
  return out;
}

void emit_report(const SuiteReport& r, const std::string& path, const std::string& format) {
  if (format == "json") {
    write_text(path, report_json(r).dump(2) + "\n");
  } else if (format == "tsv") {
    write_text(path, report_tsv(r));
  } else {
    throw IoError("unknown report format " + format);
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace epx
