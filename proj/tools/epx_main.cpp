// Command-line driver. Exit codes: 0 success, 1 a check failed, 2 bad input or usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "epx/adjunction.hpp"
#include "epx/errors.hpp"
#include "epx/homology.hpp"
#include "epx/io.hpp"
#include "epx/systems.hpp"
#include "epx/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string format = "auto";
  int dim = 3;
  int kmax = 2;
  std::vector<std::string> t;
  std::uint64_t seed = 1;
  std::string suite;
  std::string out = "-";
  std::string out_format = "json";
  std::string system = "vr";
  std::size_t k = 1;
  std::size_t count = 0;
};

epx::ExtDist parse_dist(const std::string& s) {
  if (s == "inf" || s == "INF" || s == "infinity") return epx::ExtDist::inf();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw epx::ParseError("bad parameter value '" + s + "'");
  }
  if (used != s.size() || !(v >= 0)) throw epx::ParseError("bad parameter value '" + s + "'");
  return epx::ExtDist(v);
}

epx::EpMetricSpace load(const Options& o) {
  std::string format = o.format;
  if (format == "auto") {
    if (o.input.size() >= 4 && o.input.substr(o.input.size() - 4) == ".csv") {
      format = "csv";
    } else {
      std::ifstream in(o.input);
      if (!in) throw epx::IoError("cannot read " + o.input);
      std::stringstream buf;
      buf << in.rdbuf();
      format = buf.str().find("\"points\"") != std::string::npos ? "json-points" : "json-matrix";
    }
  }
  return epx::load_space(o.input, format);
}

epx::FilteredSSet build_system(const Options& o, const epx::EpMetricSpace& x) {
  if (o.system == "vr") return epx::vr_system(x, o.dim);
  if (o.system == "degree-rips") return epx::degree_rips_system(x, o.k, o.dim);
  if (o.system == "singular") return epx::singular_system(x, o.dim);
  throw epx::ParseError("unknown system " + o.system + " (vr, degree-rips, singular)");
}

std::vector<epx::ExtDist> parameters(const Options& o, const epx::FilteredSSet& f) {
  if (o.t.empty()) return f.critical_values();
  std::vector<epx::ExtDist> out;
  for (const auto& s : o.t) out.push_back(parse_dist(s));
  return out;
}

void write_json(const Options& o, const json& doc) { epx::write_text(o.out, doc.dump(2) + "\n"); }

void check_out_format(const Options& o) {
  if (o.out_format != "json" && o.out_format != "tsv") {
    throw epx::ParseError("--out-format must be json or tsv");
  }
}

int cmd_filtration(const Options& o, bool singular) {
  check_out_format(o);
  const epx::EpMetricSpace x = load(o);
  const epx::FilteredSSet f = singular ? epx::singular_system(x, o.dim) : build_system(o, x);
  if (o.out_format == "tsv" && o.t.empty()) {
    epx::write_text(o.out, epx::filtration_tsv(f));
    return 0;
  }
  json doc = json::array();
  std::string tsv = "t";
  for (int n = 0; n <= o.dim; ++n) tsv += fmt::format("\tdim{}", n);
  tsv += '\n';
  for (epx::ExtDist t : parameters(o, f)) {
    const epx::TruncatedSSet z = epx::evaluate_at(f, t);
    json simplices = json::array();
    tsv += t.to_string();
    for (int n = 0; n <= z.cap(); ++n) {
      json names = json::array();
      for (const auto& s : z.level(n)) names.push_back(s.name);
      simplices.push_back(std::move(names));
      tsv += fmt::format("\t{}", z.count(n));
    }
    tsv += '\n';
    doc.push_back({{"t", epx::dist_json(t)}, {"counts", z.counts()}, {"simplices", std::move(simplices)}});
  }
  if (o.out_format == "tsv") {
    epx::write_text(o.out, tsv);
  } else {
    write_json(o, doc);
  }
  return 0;
}

int cmd_realize(const Options& o) {
  const epx::EpMetricSpace x = load(o);
  write_json(o, epx::space_json(epx::realize(build_system(o, x))));
  return 0;
}

int cmd_partial(const Options& o) {
  const epx::EpMetricSpace x = load(o);
  const epx::FilteredSSet f = build_system(o, x);
  json doc = json::array();
  for (epx::ExtDist t : parameters(o, f)) {
    doc.push_back({{"t", epx::dist_json(t)}, {"space", epx::space_json(epx::partial_realize(f, t))}});
  }
  write_json(o, doc);
  return 0;
}

int cmd_betti(const Options& o) {
  check_out_format(o);
  const epx::EpMetricSpace x = load(o);
  if (o.kmax > o.dim - 1) {
    throw epx::CapTooLow(fmt::format("--kmax {} needs --dim of at least {}", o.kmax, o.kmax + 1));
  }
  const epx::FilteredSSet f = build_system(o, x);
  json doc = json::array();
  std::string tsv = "t\tdegree\tbetti\ttorsion\n";
  for (epx::ExtDist t : parameters(o, f)) {
    const epx::HomologyResult h = epx::homology(epx::evaluate_at(f, t), o.kmax);
    doc.push_back({{"t", epx::dist_json(t)}, {"homology", epx::homology_json(h)}});
    for (const auto& g : h.groups) {
      std::string tor = "-";
      if (!g.torsion.empty()) tor = fmt::format("{}", fmt::join(g.torsion, ","));
      tsv += fmt::format("{}\t{}\t{}\t{}\n", t.to_string(), g.degree, g.betti, tor);
    }
  }
  if (o.out_format == "tsv") {
    epx::write_text(o.out, tsv);
  } else {
    write_json(o, doc);
  }
  return 0;
}

int cmd_barcode(const Options& o) {
  check_out_format(o);
  const epx::EpMetricSpace x = load(o);
  const epx::Barcode b = epx::pi0_barcode(build_system(o, x));
  if (o.out_format == "tsv") {
    std::string tsv = "birth\tdeath\trepresentative\n";
    for (const auto& bar : b) {
      tsv += fmt::format("{}\t{}\t{}\n", bar.birth.to_string(), bar.death.to_string(), bar.representative);
    }
    epx::write_text(o.out, tsv);
  } else {
    write_json(o, epx::barcode_json(b));
  }
  return 0;
}

int cmd_compare(const Options& o) {
  check_out_format(o);
  const epx::EpMetricSpace x = load(o);
  std::vector<epx::ExtDist> ts;
  for (const auto& s : o.t) ts.push_back(parse_dist(s));
  const epx::SuiteReport r = epx::run_compare(x, o.dim, o.kmax, ts);
  epx::emit_report(r, o.out, o.out_format);
  return r.passed() ? 0 : 1;
}

int cmd_suite(const Options& o) {
  check_out_format(o);
  epx::SuiteOptions so;
  so.seed = o.seed;
  so.cap = o.dim;
  so.kmax = o.kmax;
  so.count = o.count;
  const epx::SuiteReport r = epx::run_suite(o.suite, so);
  epx::emit_report(r, o.out, o.out_format);
  std::cerr << fmt::format("{}: {} checks, {} failed, {:.2f}s\n", r.name, r.checks.size(), r.failures(),
                           r.duration_seconds);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ep-metric spaces, Vietoris-Rips systems, realization and singular functors"};
  app.require_subcommand(1);
  Options o;

  auto input_opts = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Space file")->required();
    sub->add_option("--format", o.format, "auto, json-matrix, json-points or csv");
    sub->add_option("--out", o.out, "Output path, - for stdout");
  };
  auto system_opts = [&](CLI::App* sub) {
    sub->add_option("--system", o.system, "vr, degree-rips or singular");
    sub->add_option("--k", o.k, "Degree for degree-rips");
  };
  auto dim_opt = [&](CLI::App* sub) { sub->add_option("--dim", o.dim, "Dimension cap")->check(CLI::NonNegativeNumber); };
  auto t_opt = [&](CLI::App* sub) {
    sub->add_option("--t", o.t, "Parameters (comma separated, inf allowed); default: critical values")
        ->delimiter(',');
  };
  auto out_format = [&](CLI::App* sub) { sub->add_option("--out-format", o.out_format, "json or tsv"); };

  auto* vr = app.add_subcommand("vr", "Vietoris-Rips (or other) system of a space");
  input_opts(vr);
  system_opts(vr);
  dim_opt(vr);
  t_opt(vr);
  out_format(vr);
  auto* singular = app.add_subcommand("singular", "Singular system S(Y)");
  input_opts(singular);
  dim_opt(singular);
  t_opt(singular);
  out_format(singular);
  auto* realize = app.add_subcommand("realize", "Realization of a system built from a space");
  input_opts(realize);
  system_opts(realize);
  dim_opt(realize);
  auto* partial = app.add_subcommand("partial-realize", "Partial realizations at each parameter");
  input_opts(partial);
  system_opts(partial);
  dim_opt(partial);
  t_opt(partial);
  auto* betti = app.add_subcommand("betti", "Integral homology at each parameter");
  input_opts(betti);
  system_opts(betti);
  dim_opt(betti);
  t_opt(betti);
  out_format(betti);
  betti->add_option("--kmax", o.kmax, "Top homology degree");
  auto* barcode = app.add_subcommand("barcode", "Path-component barcode");
  input_opts(barcode);
  system_opts(barcode);
  dim_opt(barcode);
  out_format(barcode);
  auto* compare = app.add_subcommand("compare", "Compare V_t and S_t at each parameter");
  input_opts(compare);
  dim_opt(compare);
  t_opt(compare);
  out_format(compare);
  compare->add_option("--kmax", o.kmax, "Top homology degree");
  auto* suite = app.add_subcommand("suite", "Run a named verification suite");
  suite->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(epx::suite_names()));
  suite->add_option("--seed", o.seed, "Corpus seed");
  suite->add_option("--count", o.count, "Corpus size (0: suite default)");
  suite->add_option("--out", o.out, "Output path, - for stdout");
  dim_opt(suite);
  suite->add_option("--kmax", o.kmax, "Top homology degree");
  out_format(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*vr) return cmd_filtration(o, false);
    if (*singular) return cmd_filtration(o, true);
    if (*realize) return cmd_realize(o);
    if (*partial) return cmd_partial(o);
    if (*betti) return cmd_betti(o);
    if (*barcode) return cmd_barcode(o);
    if (*compare) return cmd_compare(o);
    if (*suite) return cmd_suite(o);
  } catch (const epx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
