#include "tinbl/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tinbl {
namespace {

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError("coefficient must be an integer or a decimal string");
  const auto s = j.get<std::string>();
  const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw FormatError("not a decimal integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

ProductString parse_string(const std::string& s) {
  try {
    return ProductString::parse(s);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Json to_json(const Superposition& y) {
  Json terms = Json::array();
  for (const auto& [w, c] : y) terms.push_back(Json::array({w.to_string(), c.str()}));
  return Json{{"m", y.bits()}, {"terms", std::move(terms)}};
}

Superposition superposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw FormatError("superposition JSON needs a \"terms\" array");
  const Json& terms = j["terms"];
  std::size_t m = 0;
  if (j.contains("m")) {
    if (!j["m"].is_number_unsigned()) throw FormatError("\"m\" must be a positive integer");
    m = j["m"].get<std::size_t>();
  } else if (!terms.empty() && terms[0].is_array() && !terms[0].empty() && terms[0][0].is_string()) {
    m = terms[0][0].get<std::string>().size();
  }
  if (m == 0) throw FormatError("superposition needs a positive bit count");
  Superposition y(m);
  for (const Json& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string())
      throw FormatError("each term must be a [string, coefficient] pair");
    const ProductString w = parse_string(t[0].get<std::string>());
    if (w.size() != m) throw FormatError("term '" + w.to_string() + "' does not have " + std::to_string(m) + " bits");
    y.accumulate(w, parse_integer(t[1]));
  }
  return y;
}

void write_superposition_csv(std::ostream& out, const Superposition& y) {
  out << "string,coefficient\n";
  for (const auto& [w, c] : y) out << w.to_string() << ',' << c.str() << '\n';
}

Superposition read_superposition_csv(std::istream& in) {
  std::string line;
  std::vector<std::pair<ProductString, Integer>> terms;
  bool header = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line == "string,coefficient") continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("CSV row without a comma: '" + line + "'");
    terms.emplace_back(parse_string(trim(line.substr(0, comma))), parse_integer(Json(trim(line.substr(comma + 1)))));
  }
  if (terms.empty()) throw FormatError("CSV superposition has no terms; use JSON to write the zero state");
  const std::size_t m = terms.front().first.size();
  for (const auto& [w, c] : terms)
    if (w.size() != m) throw FormatError("CSV terms differ in length");
  return Superposition::from_terms(m, terms);
}

Superposition parse_superposition(const std::string& text) {
  const std::string body = trim(text);
  if (!body.empty() && body[0] == '{') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return superposition_from_json(j);
  }
  std::istringstream in(body);
  return read_superposition_csv(in);
}

Json to_json(const SignalExpr& expr) {
  switch (expr.kind()) {
    case NodeKind::Unit: return Json{{"tag", "unit"}};
    case NodeKind::Rail: return Json{{"tag", "rail"}, {"bit", expr.rail_id().bit}, {"rail", expr.rail_id().rail}};
    case NodeKind::Product: {
      Json factors = Json::array();
      for (const auto& c : expr.children()) factors.push_back(to_json(c));
      return Json{{"tag", "prod"}, {"factors", std::move(factors)}};
    }
    case NodeKind::Sum: {
      Json terms = Json::array();
      for (std::size_t k = 0; k < expr.children().size(); ++k)
        terms.push_back(Json{{"weight", expr.weights()[k].str()}, {"expr", to_json(expr.children()[k])}});
      return Json{{"tag", "sum"}, {"terms", std::move(terms)}};
    }
  }
  return {};
}

SignalExpr signal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) throw FormatError("expression node needs a \"tag\"");
  const auto tag = j["tag"].get<std::string>();
  if (tag == "unit") return SignalExpr::unit();
  if (tag == "rail") {
    if (!j.contains("bit") || !j["bit"].is_number_unsigned() || !j.contains("rail") || !j["rail"].is_number_unsigned())
      throw FormatError("rail node needs unsigned \"bit\" and \"rail\"");
    const auto bit = j["bit"].get<std::size_t>();
    const auto rail = j["rail"].get<unsigned>();
    if (bit < 1 || rail > 1) throw FormatError("rail node out of range");
    return SignalExpr::rail(bit, rail);
  }
  if (tag == "prod") {
    if (!j.contains("factors") || !j["factors"].is_array()) throw FormatError("prod node needs \"factors\"");
    std::vector<SignalExpr> factors;
    for (const Json& f : j["factors"]) factors.push_back(signal_from_json(f));
    return SignalExpr::product(std::move(factors));
  }
  if (tag == "sum") {
    if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("sum node needs \"terms\"");
    std::vector<std::pair<Integer, SignalExpr>> terms;
    for (const Json& t : j["terms"]) {
      if (!t.is_object() || !t.contains("weight") || !t.contains("expr"))
        throw FormatError("sum term needs \"weight\" and \"expr\"");
      terms.emplace_back(parse_integer(t["weight"]), signal_from_json(t["expr"]));
    }
    return SignalExpr::sum(std::move(terms));
  }
  throw FormatError("unknown expression tag '" + tag + "'");
}

void write_waveform_csv(std::ostream& out, ClockIndex t0, const std::vector<Amplitude>& amplitudes) {
  out << "t,amplitude\n";
  for (std::size_t k = 0; k < amplitudes.size(); ++k) out << t0 + k << ',' << amplitudes[k].str() << '\n';
}

Json to_json(const AmplitudeStats& stats) {
  Json histogram = Json::array();
  for (const auto& [a, c] : stats.histogram) histogram.push_back(Json::array({a.str(), c}));
  Json pairs = Json::array();
  for (const auto& p : stats.sign_pairs) pairs.push_back(Json::array({p[0], p[1], p[2], p[3]}));
  return Json{{"kind", universe_name(stats.kind)},
              {"m", stats.m},
              {"ticks", stats.ticks},
              {"zero_count", stats.zero_count},
              {"histogram", std::move(histogram)},
              {"both_plus", stats.both_plus},
              {"sign_pairs", std::move(pairs)}};
}

void write_stats_csv(std::ostream& out, const AmplitudeStats& stats) {
  out << "abs_amplitude,count\n";
  out << "0," << stats.zero_count << '\n';
  for (const auto& [a, c] : stats.histogram) out << a.str() << ',' << c << '\n';
}

Json to_json(const CorrelationEstimate& e) {
  return Json{{"n", e.n},
              {"mean", e.mean_decimal()},
              {"threshold", e.threshold},
              {"pass", e.pass()},
              {"expected", e.expected.str()},
              {"spread", e.spread.str()}};
}

Json to_json(const TruthTable& table) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      entries.push_back(Json{{"row", std::string(1, to_char(kTableOrder[r]))},
                             {"col", std::string(1, to_char(kTableOrder[c]))},
                             {"out", std::string(1, to_char(table[r][c]))}});
  return Json{{"labels", Json::array({"L", "H", "X", "V"})}, {"entries", std::move(entries)}};
}

std::string render_truth_table(const TruthTable& table) {
  std::string out = "   ";
  for (BitValue c : kTableOrder) out += std::string(" ") + to_char(c);
  out += '\n';
  for (std::size_t r = 0; r < 4; ++r) {
    out += std::string(1, to_char(kTableOrder[r])) + "  ";
    for (std::size_t c = 0; c < 4; ++c) out += std::string(" ") + to_char(table[r][c]);
    out += '\n';
  }
  return out;
}

}  // namespace tinbl
