#include "tinbl/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tinbl/algebra.hpp"
#include "tinbl/gates.hpp"
#include "tinbl/measure.hpp"
#include "tinbl/rns.hpp"
#include "tinbl/serialize.hpp"
#include "tinbl/signals.hpp"
#include "tinbl/universes.hpp"

namespace tinbl::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::size_t m = 3;
  bool m_given = false;
  std::uint64_t seed = 42;
  std::uint64_t ticks = 10'000;
  double threshold = kDefaultThreshold;
  Format format = Format::Text;
  std::string out_path;
  unsigned threads = 0;
};

struct Outcome {
  int status = kPass;
  std::string body;
};

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "?";
}

Json config_json(const RunConfig& cfg) {
  return Json{{"command", cfg.command}, {"m", cfg.m},         {"seed", cfg.seed},
              {"ticks", cfg.ticks},     {"threshold", cfg.threshold}, {"format", format_name(cfg.format)}};
}

std::string config_comment(const RunConfig& cfg) {
  std::ostringstream s;
  s << "# " << cfg.command << " m=" << cfg.m << " seed=" << cfg.seed << " ticks=" << cfg.ticks
    << " threshold=" << cfg.threshold << '\n';
  return s.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Superposition load_state(const std::string& path) {
  try {
    return parse_superposition(read_file(path));
  } catch (const FormatError& e) {
    throw UsageError("malformed state in '" + path + "': " + e.what());
  }
}

ProductString parse_product_string(const std::string& text) {
  try {
    return ProductString::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed product string: ") + e.what());
  }
}

BitValue parse_bit_value(const std::string& text) {
  if (text.size() != 1) throw UsageError("expected a single bit value (L, H, X or V), got '" + text + "'");
  try {
    return bit_value_from_char(text[0]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

UniverseKind parse_kind(const std::string& text) {
  try {
    return universe_kind_from_name(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Resolves the bit count of a loaded state against --m.
std::size_t state_bits(RunConfig& cfg, const Superposition& y) {
  if (cfg.m_given && cfg.m != y.bits())
    throw UsageError("state has " + std::to_string(y.bits()) + " bits but --m is " + std::to_string(cfg.m));
  cfg.m = y.bits();
  return cfg.m;
}

std::string render_state(const Superposition& y, Format f) {
  if (f == Format::Csv) {
    std::ostringstream s;
    write_superposition_csv(s, y);
    return s.str();
  }
  if (f == Format::Json) return dump(to_json(y));
  if (y.empty()) return "0\n";
  std::string out;
  for (const auto& [w, c] : y) out += w.to_string() + " " + c.str() + "\n";
  return out;
}

// rns dump

Outcome cmd_rns_dump(const RunConfig& cfg, const std::vector<std::string>& rail_filter, std::uint64_t t0) {
  const Rns rns(cfg.m, cfg.seed);
  std::vector<RtwId> rails;
  if (rail_filter.empty()) {
    for (std::size_t i = 1; i <= cfg.m; ++i)
      for (unsigned j = 0; j < 2; ++j) rails.push_back({i, j});
  } else {
    for (const auto& r : rail_filter) {
      const auto sep = r.find('_');
      RtwId id;
      try {
        if (sep == std::string::npos) throw std::invalid_argument("missing '_'");
        id.bit = std::stoul(r.substr(0, sep));
        id.rail = static_cast<unsigned>(std::stoul(r.substr(sep + 1)));
      } catch (const std::exception&) {
        throw UsageError("rail must look like <bit>_<rail>, got '" + r + "'");
      }
      if (id.bit < 1 || id.bit > cfg.m || id.rail > 1) throw UsageError("rail '" + r + "' outside the noise system");
      rails.push_back(id);
    }
  }
  auto column = [](RtwId id) { return "rail_" + std::to_string(id.bit) + "_" + std::to_string(id.rail); };

  if (cfg.format == Format::Json) {
    Json names = Json::array();
    for (auto id : rails) names.push_back(column(id));
    Json rows = Json::array();
    for (std::uint64_t t = t0; t < t0 + cfg.ticks; ++t) {
      Json row = Json::array({t});
      for (auto id : rails) row.push_back(rns.sign(id, t));
      rows.push_back(std::move(row));
    }
    return {kPass, dump(Json{{"config", config_json(cfg)}, {"columns", names}, {"rows", rows}})};
  }
  std::ostringstream s;
  s << 't';
  for (auto id : rails) s << ',' << column(id);
  s << '\n';
  for (std::uint64_t t = t0; t < t0 + cfg.ticks; ++t) {
    s << t;
    for (auto id : rails) s << ',' << rns.sign(id, t);
    s << '\n';
  }
  return {kPass, s.str()};
}

// universe / expand

Outcome render_expansion(const RunConfig& cfg, UniverseKind kind, bool verify) {
  Superposition y(cfg.m);
  try {
    y = expand_universe(kind, cfg.m);
  } catch (const ExpansionLimitError& e) {
    throw UsageError(e.what());
  }
  if (!verify) return {kPass, render_state(y, cfg.format)};

  bool unit_coefficients = true;
  for (const auto& [w, c] : y) unit_coefficients = unit_coefficients && c == 1;
  const bool count_ok = y.size() == expanded_term_count(kind, cfg.m);
  // The expanded sum must track the factored product tick by tick.
  const Rns rns(cfg.m, cfg.seed);
  const SignalExpr factored = build_universe(kind, cfg.m);
  const SignalExpr expanded = compile_superposition(y);
  const std::uint64_t window = std::min<std::uint64_t>(cfg.ticks, 1000);
  bool equal = true;
  for (std::uint64_t t = 0; t < window && equal; ++t) equal = eval(factored, t, rns) == eval(expanded, t, rns);
  const bool pass = unit_coefficients && count_ok && equal;

  if (cfg.format == Format::Json) {
    return {pass ? kPass : kCheckFailure,
            dump(Json{{"config", config_json(cfg)},
                      {"kind", universe_name(kind)},
                      {"terms", y.size()},
                      {"expected_terms", expanded_term_count(kind, cfg.m)},
                      {"unit_coefficients", unit_coefficients},
                      {"factored_equal_ticks", window},
                      {"factored_equal", equal},
                      {"pass", pass},
                      {"state", to_json(y)}})};
  }
  if (cfg.format == Format::Csv) return {pass ? kPass : kCheckFailure, render_state(y, cfg.format)};
  std::string body = config_comment(cfg);
  body += "# " + std::to_string(y.size()) + " terms, factored form equal over " + std::to_string(window) +
          " ticks: " + (equal ? "yes" : "no") + "\n";
  body += render_state(y, cfg.format);
  return {pass ? kPass : kCheckFailure, body};
}

Outcome cmd_universe(const RunConfig& cfg, UniverseKind kind) {
  const Rns rns(cfg.m, cfg.seed);
  const AmplitudeStats stats = universe_stats(kind, cfg.m, cfg.ticks, rns, 0, cfg.threads);
  const std::vector<LawCheck> checks = check_universe_laws(stats, cfg.threshold);
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  const int status = pass ? kPass : kCheckFailure;

  if (cfg.format == Format::Csv) {
    std::ostringstream s;
    write_stats_csv(s, stats);
    return {status, s.str()};
  }
  if (cfg.format == Format::Json) {
    Json j = to_json(stats);
    Json cj = Json::array();
    for (const auto& c : checks) cj.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json report{{"config", config_json(cfg)}};
    for (auto it = j.begin(); it != j.end(); ++it) report[it.key()] = it.value();
    report["checks"] = std::move(cj);
    report["pass"] = pass;
    return {status, dump(report)};
  }
  std::ostringstream s;
  s << config_comment(cfg);
  s << "kind: " << universe_name(kind) << "\nticks: " << stats.ticks << "\nzero_count: " << stats.zero_count << '\n';
  s << "histogram:\n";
  for (const auto& [a, c] : stats.histogram) s << "  " << a.str() << ": " << c << '\n';
  for (const auto& c : checks) s << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
  return {status, s.str()};
}

// gate

Outcome render_gate(const RunConfig& cfg, const GateReport& report, const Superposition& input) {
  const int status = report.consistent ? kPass : kCheckFailure;
  if (cfg.format == Format::Json) {
    return {status, dump(Json{{"config", config_json(cfg)},
                              {"gate", report.gate},
                              {"input", to_json(input)},
                              {"output", to_json(report.output)},
                              {"ticks", report.ticks},
                              {"consistent", report.consistent}})};
  }
  if (cfg.format == Format::Csv) return {status, render_state(report.output, cfg.format)};
  std::string body = config_comment(cfg);
  body += "# instantaneous form " + std::string(report.consistent ? "agrees" : "DISAGREES") + " over " +
          std::to_string(report.ticks) + " ticks\n";
  body += render_state(report.output, cfg.format);
  return {status, body};
}

Outcome cmd_gate(RunConfig& cfg, const std::vector<std::string>& args, const std::string& state_path,
                 const std::string& string_state) {
  if (args.empty()) throw UsageError("gate needs a name: not, xor or xnor");
  const std::string& name = args[0];
  if (name == "not") {
    if (args.size() != 2) throw UsageError("usage: gate not <bit> (--state FILE | --string S)");
    if (state_path.empty() == string_state.empty()) throw UsageError("gate not needs exactly one of --state or --string");
    const Superposition y =
        state_path.empty() ? Superposition::single(parse_product_string(string_state)) : load_state(state_path);
    state_bits(cfg, y);
    std::size_t bit = 0;
    try {
      bit = std::stoul(args[1]);
    } catch (const std::exception&) {
      throw UsageError("bit index must be a positive integer, got '" + args[1] + "'");
    }
    if (bit < 1 || bit > y.bits()) throw UsageError("bit index outside [1, " + std::to_string(y.bits()) + "]");
    const Rns rns(y.bits(), cfg.seed);
    return render_gate(cfg, run_not_gate(bit, y, cfg.ticks, rns), y);
  }
  BinaryGate gate;
  try {
    gate = binary_gate_from_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.size() != 3) throw UsageError("usage: gate " + name + " <A> <B>");
  if (cfg.m_given && cfg.m != 1) throw UsageError(name + " is only defined for a one-bit system");
  cfg.m = 1;
  const BitValue a = parse_bit_value(args[1]);
  const BitValue b = parse_bit_value(args[2]);
  const Rns rns(1, cfg.seed);
  Superposition input(1);
  input.accumulate(ProductString({a}), 1);
  input.accumulate(ProductString({b}), 1);
  return render_gate(cfg, run_binary_gate(gate, a, b, cfg.ticks, rns), input);
}

// truth-table

Outcome cmd_truth_table(const RunConfig& cfg, const std::string& name, bool check, std::ostream& err) {
  BinaryGate gate;
  try {
    gate = binary_gate_from_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const TruthTable table = truth_table(gate);
  int status = kPass;
  if (check) {
    const TruthTable reference = reference_truth_table(gate);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (table[r][c] == reference[r][c]) continue;
        status = kCheckFailure;
        err << name << '(' << to_char(kTableOrder[r]) << ',' << to_char(kTableOrder[c]) << ") = " << to_char(table[r][c])
            << ", expected " << to_char(reference[r][c]) << '\n';
      }
    }
  }
  if (cfg.format == Format::Json) {
    Json j{{"config", config_json(cfg)}, {"gate", name}};
    const Json t = to_json(table);
    j["labels"] = t["labels"];
    j["entries"] = t["entries"];
    if (check) j["check"] = status == kPass;
    return {status, dump(j)};
  }
  if (cfg.format == Format::Csv) {
    std::string body = "row,col,out\n";
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        body += std::string{to_char(kTableOrder[r]), ',', to_char(kTableOrder[c]), ',', to_char(table[r][c]), '\n'};
    return {status, body};
  }
  std::string body = render_truth_table(table);
  if (check) body += status == kPass ? "check: pass\n" : "check: FAIL\n";
  return {status, body};
}

// measure

Outcome cmd_measure_ortho(const RunConfig& cfg) {
  const Rns rns(cfg.m, cfg.seed);
  const OrthogonalityMatrix matrix = orthogonality_matrix(rns, cfg.ticks, cfg.threshold, cfg.threads);
  const bool pass = matrix.all_pass();
  auto rail_name = [](std::size_t pos) { return std::to_string(pos / 2 + 1) + "_" + std::to_string(pos % 2); };

  if (cfg.format == Format::Json) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < matrix.rails; ++r)
      for (std::size_t c = r; c < matrix.rails; ++c) {
        Json e = to_json(matrix.at(r, c));
        e["row"] = rail_name(r);
        e["col"] = rail_name(c);
        entries.push_back(std::move(e));
      }
    return {pass ? kPass : kCheckFailure,
            dump(Json{{"config", config_json(cfg)}, {"pass", pass}, {"entries", std::move(entries)}})};
  }
  std::ostringstream s;
  if (cfg.format == Format::Csv) {
    s << "row,col,n,mean,pass\n";
    for (std::size_t r = 0; r < matrix.rails; ++r)
      for (std::size_t c = r; c < matrix.rails; ++c) {
        const auto& e = matrix.at(r, c);
        s << rail_name(r) << ',' << rail_name(c) << ',' << e.n << ',' << e.mean_decimal() << ','
          << (e.pass() ? "true" : "false") << '\n';
      }
    return {pass ? kPass : kCheckFailure, s.str()};
  }
  s << config_comment(cfg);
  long double worst = 0;
  for (std::size_t r = 0; r < matrix.rails; ++r)
    for (std::size_t c = r + 1; c < matrix.rails; ++c) worst = std::max(worst, std::fabs(matrix.at(r, c).mean()));
  const std::size_t pairs = matrix.rails * (matrix.rails - 1) / 2;
  s << "rail pairs: " << pairs << "\nfailures: " << matrix.failures().size() << "\nmax |mean|: " << static_cast<double>(worst)
    << "\ntolerance: " << static_cast<double>(cfg.threshold / std::sqrt(static_cast<long double>(cfg.ticks))) << '\n';
  for (auto [r, c] : matrix.failures())
    s << "FAIL " << rail_name(r) << " x " << rail_name(c) << ": " << matrix.at(r, c).mean_decimal() << '\n';
  s << (pass ? "pass\n" : "FAIL\n");
  return {pass ? kPass : kCheckFailure, s.str()};
}

Outcome cmd_measure_coeff(RunConfig& cfg, const std::string& state_path, const std::string& string_text) {
  if (state_path.empty()) throw UsageError("measure coeff needs --state");
  if (string_text.empty()) throw UsageError("measure coeff needs --string");
  const Superposition y = load_state(state_path);
  state_bits(cfg, y);
  const ProductString w = parse_product_string(string_text);
  if (w.size() != y.bits())
    throw UsageError("product string has " + std::to_string(w.size()) + " bits, state has " + std::to_string(y.bits()));
  const Rns rns(y.bits(), cfg.seed);
  const CorrelationEstimate e = measure_coefficient(y, w, cfg.ticks, rns, cfg.threshold, cfg.threads);
  const int status = e.pass() ? kPass : kCheckFailure;
  if (cfg.format == Format::Json) {
    Json j{{"config", config_json(cfg)}, {"string", w.to_string()}};
    const Json ej = to_json(e);
    for (auto it = ej.begin(); it != ej.end(); ++it) j[it.key()] = it.value();
    return {status, dump(j)};
  }
  if (cfg.format == Format::Csv) {
    return {status, "string,n,mean,expected,pass\n" + w.to_string() + "," + std::to_string(e.n) + "," + e.mean_decimal() +
                        "," + e.expected.str() + "," + (e.pass() ? "true" : "false") + "\n"};
  }
  std::ostringstream s;
  s << config_comment(cfg) << "string: " << w.to_string() << "\nmean: " << e.mean_decimal()
    << "\nexact coefficient: " << e.expected.str() << "\ntolerance: " << static_cast<double>(e.tolerance())
    << '\n' << (e.pass() ? "pass\n" : "FAIL\n");
  return {status, s.str()};
}

// eval

Outcome cmd_eval(RunConfig& cfg, const std::string& state_path, const std::string& expr_path,
                 const std::string& universe, const std::string& string_text, std::uint64_t t0) {
  const int sources = !state_path.empty() + !expr_path.empty() + !universe.empty() + !string_text.empty();
  if (sources != 1) throw UsageError("eval needs exactly one of --state, --expr, --universe or --string");
  SignalExpr expr;
  if (!state_path.empty()) {
    const Superposition y = load_state(state_path);
    state_bits(cfg, y);
    expr = compile_superposition(y);
  } else if (!string_text.empty()) {
    const ProductString w = parse_product_string(string_text);
    if (cfg.m_given && cfg.m != w.size()) throw UsageError("product string length differs from --m");
    cfg.m = w.size();
    expr = compile_string(w);
  } else if (!universe.empty()) {
    expr = build_universe(parse_kind(universe), cfg.m);
  } else {
    try {
      expr = signal_from_json(Json::parse(read_file(expr_path)));
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("invalid expression JSON: ") + e.what());
    } catch (const FormatError& e) {
      throw UsageError(std::string("malformed expression: ") + e.what());
    }
    if (max_bit(expr) > cfg.m) throw UsageError("expression references bits beyond --m");
  }
  const Rns rns(cfg.m, cfg.seed);
  const std::vector<Amplitude> amplitudes = eval_window(expr, t0, cfg.ticks, rns, cfg.threads);
  if (cfg.format == Format::Json) {
    Json values = Json::array();
    for (const auto& a : amplitudes) values.push_back(a.str());
    return {kPass, dump(Json{{"config", config_json(cfg)}, {"t0", t0}, {"amplitudes", std::move(values)}})};
  }
  std::ostringstream s;
  write_waveform_csv(s, t0, amplitudes);
  return {kPass, s.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ternary instantaneous noise-based logic simulator", args.empty() ? "tinbl" : args[0]};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  auto* m_opt = app.add_option("-m,--m", cfg.m, "Number of noise-bits")->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  app.add_option("--seed", cfg.seed, "Seed of the reference noise system");
  app.add_option("-n,--ticks", cfg.ticks, "Number of clock ticks")->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--threshold", cfg.threshold, "Tolerance in standard errors")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out_path, "Write the report to this file instead of standard output");
  app.add_option("--threads", cfg.threads, "Worker threads, 0 for the hardware concurrency");

  std::vector<std::string> rails;
  std::uint64_t t0 = 0;
  auto* rns_cmd = app.add_subcommand("rns", "Reference noise system");
  auto* dump_cmd = rns_cmd->add_subcommand("dump", "Write rail sign waveforms as CSV");
  rns_cmd->require_subcommand(1);
  dump_cmd->add_option("--rail", rails, "Restrict to rails given as <bit>_<rail>");
  dump_cmd->add_option("--t0", t0, "First tick");

  std::string kind;
  bool expand = false;
  auto* universe_cmd = app.add_subcommand("universe", "Amplitude statistics of a universe");
  universe_cmd->add_option("kind", kind, "binary, ternary-nv or total")->required();
  universe_cmd->add_flag("--expand", expand, "Expand symbolically instead of sampling");

  auto* expand_cmd = app.add_subcommand("expand", "Symbolic expansion of a universe");
  expand_cmd->add_option("kind", kind, "binary, ternary-nv or total")->required();

  std::vector<std::string> gate_args;
  std::string state_path, string_text;
  auto* gate_cmd = app.add_subcommand("gate", "Apply a gate: not <bit>, xor <A> <B>, xnor <A> <B>");
  gate_cmd->add_option("args", gate_args, "Gate name and operands")->required();
  gate_cmd->add_option("--state", state_path, "Serialized input state (JSON or CSV)");
  gate_cmd->add_option("--string", string_text, "Single product string input, e.g. LHH");

  std::string table_gate;
  bool check = false;
  auto* table_cmd = app.add_subcommand("truth-table", "Render a single-bit gate truth table");
  table_cmd->add_option("gate", table_gate, "xor or xnor")->required();
  table_cmd->add_flag("--check", check, "Compare against the published table");

  auto* measure_cmd = app.add_subcommand("measure", "Time-average correlation measurements");
  measure_cmd->require_subcommand(1);
  auto* ortho_cmd = measure_cmd->add_subcommand("ortho", "Orthogonality of all rail pairs");
  auto* coeff_cmd = measure_cmd->add_subcommand("coeff", "Measure one coefficient of a state");
  coeff_cmd->add_option("--state", state_path, "Serialized state (JSON or CSV)");
  coeff_cmd->add_option("--string", string_text, "Product string to measure, e.g. LHH");

  std::string expr_path, eval_universe;
  auto* eval_cmd = app.add_subcommand("eval", "Instantaneous waveform of a signal");
  eval_cmd->add_option("--state", state_path, "Serialized state (JSON or CSV)");
  eval_cmd->add_option("--expr", expr_path, "Expression tree JSON");
  eval_cmd->add_option("--universe", eval_universe, "Universe kind");
  eval_cmd->add_option("--string", string_text, "Single product string");
  eval_cmd->add_option("--t0", t0, "First tick");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  cfg.m_given = m_opt->count() > 0;
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  Outcome outcome;
  try {
    if (dump_cmd->parsed()) {
      cfg.command = "rns dump";
      outcome = cmd_rns_dump(cfg, rails, t0);
    } else if (universe_cmd->parsed()) {
      cfg.command = "universe";
      outcome = expand ? render_expansion(cfg, parse_kind(kind), true) : cmd_universe(cfg, parse_kind(kind));
    } else if (expand_cmd->parsed()) {
      cfg.command = "expand";
      outcome = render_expansion(cfg, parse_kind(kind), false);
    } else if (gate_cmd->parsed()) {
      cfg.command = "gate";
      outcome = cmd_gate(cfg, gate_args, state_path, string_text);
    } else if (table_cmd->parsed()) {
      cfg.command = "truth-table";
      outcome = cmd_truth_table(cfg, table_gate, check, err);
    } else if (ortho_cmd->parsed()) {
      cfg.command = "measure ortho";
      outcome = cmd_measure_ortho(cfg);
    } else if (coeff_cmd->parsed()) {
      cfg.command = "measure coeff";
      outcome = cmd_measure_coeff(cfg, state_path, string_text);
    } else if (eval_cmd->parsed()) {
      cfg.command = "eval";
      outcome = cmd_eval(cfg, state_path, expr_path, eval_universe, string_text, t0);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.out_path.empty()) {
    out << outcome.body;
    return outcome.status;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  file << outcome.body;
  file.close();
  if (!file) {
    err << "error: cannot write '" << cfg.out_path << "'\n";
    return kUsageError;
  }
  return outcome.status;
}

}  // namespace tinbl::cli
