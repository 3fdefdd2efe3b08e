#include "liecheck/report.hpp"

#include "liecheck/errors.hpp"

#include <json.hpp>

#include <cctype>

namespace liecheck {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
    case Verdict::DivergentOracle: return "DIVERGENT-ORACLE";
  }
  return "FAIL";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  if (s == "SKIP") return Verdict::Skip;
  if (s == "DIVERGENT-ORACLE") return Verdict::DivergentOracle;
  throw ParseError("unknown verdict \"" + s + "\"");
}

const FactValue* CheckReport::find_fact(const std::string& key) const {
  for (const auto& [k, v] : facts)
    if (k == key) return &v;
  return nullptr;
}

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer in report");
    return x;
  }
  throw ParseError("expected an integer in report");
}

json series_to_json(const GradedSeries& s) {
  json out = json::array();
  for (const auto& [d, c] : s.terms()) out.push_back(json::array({d, int_to_json(c)}));
  return out;
}

GradedSeries series_from_json(const json& j, std::optional<std::size_t> order) {
  if (!j.is_array()) throw ParseError("series must be an array of [degree, coefficient] pairs");
  std::vector<Int> c;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      throw ParseError("series must be an array of [degree, coefficient] pairs");
    const auto d = pair[0].get<std::size_t>();
    if (c.size() <= d) c.resize(d + 1);
    c[d] = int_from_json(pair[1]);
  }
  return GradedSeries(std::move(c), order);
}

json weight_to_json(const Weight& w) { return json(format_weight(w)); }

Weight weight_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("weight must be a string");
  const auto s = j.get<std::string>();
  const std::size_t rank = static_cast<std::size_t>(std::count(s.begin(), s.end(), ',')) + 1;
  return parse_weight(s, rank);
}

json fact_to_json(const FactValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GradedSeries>)
          return series_to_json(x);
        else
          return json(x);
      },
      v);
}

FactValue fact_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    if (!j.empty() && j.front().is_array()) return series_from_json(j, std::nullopt);
    std::vector<long> v;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError("unsupported fact array");
      v.push_back(x.get<long>());
    }
    return v;
  }
  throw ParseError("unsupported fact value");
}

// Puts arrays of plain numbers on one line.
std::string compact_number_arrays(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) out += text[++i];
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    if (c != '[') {
      out += c;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != ']' && text[j] != '[' && text[j] != '{' && text[j] != '"') ++j;
    if (j >= text.size() || text[j] != ']') {
      out += c;
      continue;
    }
    out += '[';
    bool first = true;
    std::string token;
    for (std::size_t k = i + 1; k <= j; ++k) {
      const char t = text[k];
      if (t == ',' || t == ']') {
        if (!token.empty()) {
          if (!first) out += ", ";
          out += token;
          first = false;
        }
        token.clear();
      } else if (!std::isspace(static_cast<unsigned char>(t))) {
        token += t;
      }
    }
    out += ']';
    i = j;
  }
  return out;
}

}  // namespace

std::string series_pairs(const GradedSeries& s) { return series_to_json(s).dump(); }

std::string series_coefficients(const GradedSeries& s) {
  std::string out;
  const auto& c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i].get_str();
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const CheckReport& r, bool include_millis) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["check"] = r.check;
  j["type"] = r.type;
  j["lambda"] = weight_to_json(r.lambda);
  j["lowest_weight"] = weight_to_json(r.lowest_weight);
  j["convention"] = "antidominant-lowest";
  auto put_series = [&j](const char* key, const char* order_key, const std::optional<GradedSeries>& s) {
    if (!s) {
      j[key] = nullptr;
      return;
    }
    j[key] = series_to_json(*s);
    if (s->order()) j[order_key] = *s->order();
  };
  put_series("series_lhs", "series_lhs_order", r.series_lhs);
  put_series("series_rhs", "series_rhs_order", r.series_rhs);
  j["lhs"] = r.lhs_label;
  j["rhs"] = r.rhs_label;
  j["verdict"] = to_string(r.verdict);
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = fact_to_json(v);
  j["facts"] = std::move(facts);
  j["notes"] = r.notes;
  if (include_millis) j["millis"] = r.millis;
  return compact_number_arrays(j.dump(2)) + "\n";
}

CheckReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("schema_version")) throw ParseError("not a check report");
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw ParseError("unsupported schema_version " + j.at("schema_version").dump());
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.type = j.at("type").get<std::string>();
    r.lambda = weight_from_json(j.at("lambda"));
    r.lowest_weight = weight_from_json(j.at("lowest_weight"));
    auto get_series = [&j](const char* key, const char* order_key) -> std::optional<GradedSeries> {
      if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
      std::optional<std::size_t> order;
      if (j.contains(order_key)) order = j.at(order_key).get<std::size_t>();
      return series_from_json(j.at(key), order);
    };
    r.series_lhs = get_series("series_lhs", "series_lhs_order");
    r.series_rhs = get_series("series_rhs", "series_rhs_order");
    r.lhs_label = j.value("lhs", "");
    r.rhs_label = j.value("rhs", "");
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.millis = j.value("millis", 0LL);
    if (j.contains("facts"))
      for (const auto& [k, v] : j.at("facts").items()) r.facts.emplace_back(k, fact_from_json(v));
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace liecheck
