#include "graphcode/cli.hpp"

#include "graphcode/analysis.hpp"
#include "graphcode/bounds.hpp"
#include "graphcode/codec.hpp"
#include "graphcode/constructions.hpp"
#include "graphcode/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace graphcode {

namespace {

using nlohmann::json;

enum class Format { table, csv, json };

struct Common {
  std::string format = "table";
  int precision = 6;
  int threads = 0;
  int max_edges = 26;

  [[nodiscard]] Format fmt() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::table;
  }
  [[nodiscard]] EnumerationOptions enumeration() const { return {max_edges, threads}; }
};

std::string prob(double v, const Common& c) { return format_probability(v, c.precision); }

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

/// Fixed-width columns, first column left-aligned.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      if (i == 0) {
        out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      } else {
        out << std::right << std::setw(static_cast<int>(width[i])) << row[i];
      }
    }
    out << std::left << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void print_rows(std::ostream& out, Format f, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::csv) {
    print_csv(out, header, rows);
  } else if (f == Format::json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << '\n';
  } else {
    print_table(out, header, rows);
  }
}

/// Accepts a file path, or one of the built-in comparison labels (G_3, G3,
/// G', Gprime, G) when no such file exists.
LabeledGraph load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) return {source, read_graph_file(source)};
  std::string label = source;
  if (label == "Gprime") label = "G'";
  if (label.size() == 2 && label[0] == 'G' && std::isdigit(static_cast<unsigned char>(label[1]))) {
    label = std::string("G_") + label[1];
  }
  for (auto& lg : comparison_graphs()) {
    if (lg.label == label) return lg;
  }
  throw InputError("cannot open graph file '" + source + "'");
}

std::vector<ParityClass> parities(const std::string& which) {
  if (which == "both") return {ParityClass::even, ParityClass::odd};
  return {parse_parity(which)};
}

std::string witness_text(const EdgeIdSet& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : " ") + std::to_string(id.value);
  return s;
}

// ---- construct ----

struct ConstructArgs {
  std::string algorithm;
  int n = 9;
  int r = 2;
  int k = 0;
  int loops = 0;
  std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  CodingScheme c;
  std::vector<std::string> warnings;
  if (a.algorithm == "alg1") {
    if (a.k < 1) throw InputError("alg1 requires --k");
    c = algorithm1(a.n, a.r, a.k, a.loops);
    warnings = algorithm1_warnings(a.n, a.r, a.k, a.loops);
  } else if (a.algorithm == "alg2") {
    c = algorithm2(a.n, a.r);
    warnings = algorithm2_warnings(a.n, a.r);
  } else {
    c = uncoded(a.n, a.r);
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  if (a.output.empty()) {
    write_scheme(out, c);
  } else {
    std::ofstream file(a.output);
    if (!file) throw InputError("cannot write '" + a.output + "'");
    write_scheme(file, c);
  }
  return exit_ok;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string graph;
  std::string parity = "both";
  std::vector<double> p;
};

int cmd_analyze(const AnalyzeArgs& a, const Common& common, std::ostream& out) {
  for (double p : a.p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("--p values must lie in [0, 1]");
  }
  const auto lg = load_graph(a.graph);
  const auto& g = lg.graph;
  json doc{{"graph", lg.label}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"results", json::array()}};
  std::vector<std::vector<std::string>> rows;

  for (ParityClass parity : parities(a.parity)) {
    const auto s = deletion_spectrum(g, parity, common.enumeration());
    const auto cut = min_dcut(g, parity);
    if (cut.size != min_cut_size(s)) throw InternalError("min_dcut disagrees with the spectrum");
    const std::string ptext(to_string(parity));

    json entry{{"parity", ptext},
               {"b", cut.size},
               {"witness", json::array()},
               {"u_b", big_to_json(s.undecodable(cut.size))},
               {"c", json::array()},
               {"u", json::array()},
               {"probabilities", json::array()}};
    for (const auto& id : cut.witness) entry["witness"].push_back(id.value);
    for (int x = 0; x <= s.m; ++x) {
      entry["c"].push_back(big_to_json(s.decodable(x)));
      entry["u"].push_back(big_to_json(s.undecodable(x)));
    }
    for (double p : a.p) {
      entry["probabilities"].push_back({{"p", p}, {"value", decoding_probability(s, p)}});
    }
    doc["results"].push_back(entry);

    if (common.fmt() == Format::table) {
      out << lg.label << " (n=" << g.vertex_count() << ", m=" << g.edge_count() << "), " << ptext
          << " characteristic\n";
      out << "  b = " << cut.size << ", witness {" << witness_text(cut.witness) << "}, u_b = "
          << s.undecodable(cut.size) << '\n';
      std::vector<std::vector<std::string>> spectrum_rows;
      for (int x = 0; x <= s.m; ++x) {
        spectrum_rows.push_back({std::to_string(x), s.decodable(x).str(), s.undecodable(x).str()});
      }
      std::ostringstream block;
      print_table(block, {"x", "c_x", "u_x"}, spectrum_rows);
      std::istringstream lines(block.str());
      for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
      for (double p : a.p) {
        out << "  P(" << p << ") = " << prob(decoding_probability(s, p), common) << '\n';
      }
      continue;
    }
    rows.push_back({ptext, "b", "", std::to_string(cut.size)});
    rows.push_back({ptext, "witness", "", witness_text(cut.witness)});
    for (int x = 0; x <= s.m; ++x) rows.push_back({ptext, "c", std::to_string(x), s.decodable(x).str()});
    for (int x = 0; x <= s.m; ++x) rows.push_back({ptext, "u", std::to_string(x), s.undecodable(x).str()});
    for (double p : a.p) {
      std::ostringstream key;
      key << p;
      rows.push_back({ptext, "P", key.str(), prob(decoding_probability(s, p), common)});
    }
  }
  if (common.fmt() == Format::json) {
    out << doc.dump(2) << '\n';
  } else if (common.fmt() == Format::csv) {
    print_csv(out, {"parity", "quantity", "x", "value"}, rows);
  }
  return exit_ok;
}

// ---- bounds ----

struct BoundsArgs {
  std::string graph;
  std::string parity = "both";
};

int cmd_bounds(const BoundsArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const auto lg = load_graph(a.graph);
  std::vector<BoundCheck> checks;
  std::vector<std::string> failures;
  if (a.parity == "both") {
    auto report = verify_all(lg.graph, common.enumeration());
    checks = std::move(report.checks);
    failures = std::move(report.failures);
  } else {
    const ParityClass parity = parse_parity(a.parity);
    const auto s = deletion_spectrum(lg.graph, parity, common.enumeration());
    auto report = b_upper_bounds(lg.graph, parity, min_cut_size(s));
    checks = std::move(report.checks);
    auto lower = u_lower_bounds(lg.graph, parity, s);
    checks.insert(checks.end(), lower.begin(), lower.end());
    for (const auto& c : checks) {
      if (!c.satisfied) failures.push_back(c.lemma_id + " violated");
    }
  }
  if (common.fmt() == Format::json) {
    json arr = json::array();
    for (const auto& c : checks) {
      json row{{"lemma_id", c.lemma_id}, {"hypothesis_ok", c.hypothesis_ok}, {"satisfied", c.satisfied}};
      if (c.hypothesis_ok) {
        row["bound_value"] = format_rational(c.value);
        row["exact_value"] = c.exact.str();
      } else {
        row["note"] = c.note;
      }
      arr.push_back(row);
    }
    out << arr.dump(2) << '\n';
  } else {
    write_bounds_csv(out, checks);
  }
  for (const auto& f : failures) err << "violation: " << f << '\n';
  return failures.empty() ? exit_ok : exit_internal;
}

// ---- reproduce ----

struct ReproduceArgs {
  std::string table;
  std::string figure;
};

int cmd_reproduce(const ReproduceArgs& a, const Common& common, std::ostream& out) {
  const auto graphs = comparison_graphs();
  std::vector<std::vector<std::string>> rows;
  if (!a.table.empty()) {
    if (a.table == "b") {
      for (const auto& lg : graphs) {
        rows.push_back({lg.label, std::to_string(min_dcut(lg.graph, ParityClass::even).size),
                        std::to_string(min_dcut(lg.graph, ParityClass::odd).size)});
      }
      print_rows(out, common.fmt(), {"graph", "b_even", "b_odd"}, rows);
      return exit_ok;
    }
    const double p = a.table == "p06" ? 0.6 : a.table == "p07" ? 0.7 : 0.8;
    for (const auto& lg : graphs) {
      const auto even = deletion_spectrum(lg.graph, ParityClass::even, common.enumeration());
      const auto odd = deletion_spectrum(lg.graph, ParityClass::odd, common.enumeration());
      rows.push_back({lg.label, prob(decoding_probability(even, p), common),
                      prob(decoding_probability(odd, p), common)});
    }
    print_rows(out, common.fmt(), {"graph", "even", "odd"}, rows);
    return exit_ok;
  }

  const ParityClass parity = a.figure == "even-curves" ? ParityClass::even : ParityClass::odd;
  std::vector<std::string> header{"p"};
  std::vector<DeletionSpectrum> spectra;
  for (const auto& lg : graphs) {
    if (lg.label == "G_3" || lg.label == "G'" || lg.label == "G") {
      header.push_back(lg.label);
      spectra.push_back(deletion_spectrum(lg.graph, parity, common.enumeration()));
    }
  }
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    std::ostringstream key;
    key << std::fixed << std::setprecision(2) << p;
    std::vector<std::string> row{key.str()};
    for (const auto& s : spectra) row.push_back(prob(decoding_probability(s, p), common));
    rows.push_back(std::move(row));
  }
  print_rows(out, common.fmt(), header, rows);
  return exit_ok;
}

// ---- simulate ----

struct SimulateArgs {
  std::string scheme;
  std::uint32_t field = 2;
  double p = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int symbols = 16;
};

int cmd_simulate(const SimulateArgs& a, const Common& common, std::ostream& out) {
  const FieldSpec f(a.field);
  CodingScheme c;
  if (std::filesystem::exists(a.scheme)) {
    c = read_scheme_file(a.scheme);
  } else {
    c = graph_to_scheme(load_graph(a.scheme).graph);
  }
  const auto summary = simulate_codec(c, f, a.symbols, a.p, a.trials, a.seed, common.threads);
  if (summary.exact_recoveries != summary.successes) {
    throw InternalError("a decode reported success but recovered the wrong packets");
  }
  json doc{{"field", a.field},
           {"parity", std::string(to_string(parity_of(f)))},
           {"p", a.p},
           {"trials", summary.trials},
           {"seed", a.seed},
           {"symbols", a.symbols},
           {"successes", summary.successes},
           {"exact_recoveries", summary.exact_recoveries},
           {"estimate", summary.estimate},
           {"std_error", summary.std_error}};
  const auto g = scheme_to_graph(c);
  if (g.edge_count() <= common.max_edges) {
    const double exact = decoding_probability(deletion_spectrum(g, parity_of(f), common.enumeration()), a.p);
    // Standard error under the exact value, so a degenerate estimate of 0 or 1
    // does not trivially agree.
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(summary.trials));
    doc["exact"] = exact;
    doc["agreement"] = std::abs(summary.estimate - exact) <= 4.0 * sigma + 1e-15;
  } else {
    doc["exact"] = nullptr;
    doc["agreement"] = nullptr;
  }
  out << doc.dump(2) << '\n';
  return exit_ok;
}

}  // namespace

std::string format_probability(double value, int precision) {
  if (value == 0.0) return "0";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << value;
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-represented pairwise erasure codes: construction, exact analysis, bounds and simulation",
               "graphcode"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", common.precision, "Decimals for probabilities")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads (0: machine parallelism)")
      ->envname("GRAPHCODE_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-edges", common.max_edges, "Size cap for exhaustive enumeration")
      ->check(CLI::Range(0, 62))
      ->capture_default_str();

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Write a coding scheme");
  construct_cmd->add_option("algorithm", construct.algorithm, "alg1, alg2 or uncoded")
      ->required()
      ->check(CLI::IsMember({"alg1", "alg2", "uncoded"}));
  construct_cmd->add_option("--n", construct.n, "Source packets")->capture_default_str();
  construct_cmd->add_option("--r", construct.r, "Redundancy")->capture_default_str();
  construct_cmd->add_option("--k", construct.k, "Rows of the alg1 table (divides n)");
  construct_cmd->add_option("--loops", construct.loops, "Uncoded cells for alg1")->capture_default_str();
  construct_cmd->add_option("-o,--output", construct.output, "Output file (default stdout)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, b_G and decoding probabilities");
  analyze_cmd->add_option("graph", analyze.graph, "Graph file or built-in label")->required();
  analyze_cmd->add_option("--parity", analyze.parity, "Field characteristic class")
      ->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();
  analyze_cmd->add_option("--p", analyze.p, "Packet survival probabilities")->delimiter(',');

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Check every bound against exact values");
  bounds_cmd->add_option("graph", bounds.graph, "Graph file or built-in label")->required();
  bounds_cmd->add_option("--parity", bounds.parity, "Field characteristic class")
      ->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();

  ReproduceArgs reproduce;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate the comparison tables or curves");
  auto* table_opt = reproduce_cmd->add_option("--table", reproduce.table, "b, p06, p07 or p08")
                        ->check(CLI::IsMember({"b", "p06", "p07", "p08"}));
  auto* figure_opt = reproduce_cmd->add_option("--figure", reproduce.figure, "even-curves or odd-curves")
                         ->check(CLI::IsMember({"even-curves", "odd-curves"}));
  table_opt->excludes(figure_opt);
  reproduce_cmd->require_option(1);

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo codec run over GF(p)");
  simulate_cmd->add_option("scheme", simulate.scheme, "Scheme file or built-in label")->required();
  simulate_cmd->add_option("--field", simulate.field, "Prime field size")->required();
  simulate_cmd->add_option("--p", simulate.p, "Packet survival probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--trials", simulate.trials, "Trials")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed")->capture_default_str();
  simulate_cmd->add_option("--symbols", simulate.symbols, "Symbols per packet")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*construct_cmd) return cmd_construct(construct, out, err);
    if (*analyze_cmd) return cmd_analyze(analyze, common, out);
    if (*bounds_cmd) return cmd_bounds(bounds, common, out, err);
    if (*reproduce_cmd) return cmd_reproduce(reproduce, common, out);
    if (*simulate_cmd) return cmd_simulate(simulate, common, out);
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return exit_size_cap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace graphcode
