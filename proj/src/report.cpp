#include "ramlab/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ramlab {
namespace {

using nlohmann::json;

json exact_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return static_cast<i64>(q.get_num().get_si());
  return to_string(q);
}

Rational exact_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<i64>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an exact number, got " + j.dump());
}

json parse_object(std::string_view line) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid report JSON: ") + e.what());
  }
}

}  // namespace

PartialSumReport PartialSumReport::make(i64 x, Rational exact_sum, Rational main_term, Rational bound) {
  PartialSumReport r;
  r.x = x;
  r.residual = exact_sum - main_term;
  r.exact_sum = std::move(exact_sum);
  r.main_term = std::move(main_term);
  r.certified_bound = std::move(bound);
  r.pass = rational_abs(r.residual) <= r.certified_bound;
  return r;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Orthogonal:
      return "orthogonal";
    case Verdict::Diagonal:
      return "diagonal";
    case Verdict::Violating:
      return "violating";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "orthogonal") return Verdict::Orthogonal;
  if (text == "diagonal") return Verdict::Diagonal;
  if (text == "violating") return Verdict::Violating;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

std::string to_json(const PartialSumReport& report) {
  json j;
  j["x"] = report.x;
  j["exact_sum"] = exact_to_json(report.exact_sum);
  j["main_term"] = exact_to_json(report.main_term);
  j["residual"] = exact_to_json(report.residual);
  j["certified_bound"] = exact_to_json(report.certified_bound);
  j["pass"] = report.pass;
  return j.dump();
}

std::string to_json(const OrthogonalityReport& report) {
  json j;
  j["system"] = report.system;
  j["r"] = report.r;
  j["s"] = report.s;
  j["exact_mean"] = report.exact_mean;
  j["empirical_mean"] = exact_to_json(report.empirical_mean);
  j["verdict"] = std::string(to_string(report.verdict));
  return j.dump();
}

PartialSumReport partial_sum_report_from_json(std::string_view line) {
  const json j = parse_object(line);
  try {
    PartialSumReport r;
    r.x = j.at("x").get<i64>();
    r.exact_sum = exact_from_json(j.at("exact_sum"));
    r.main_term = exact_from_json(j.at("main_term"));
    r.residual = exact_from_json(j.at("residual"));
    r.certified_bound = exact_from_json(j.at("certified_bound"));
    r.pass = j.at("pass").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed partial-sum report: ") + e.what());
  }
}

OrthogonalityReport orthogonality_report_from_json(std::string_view line) {
  const json j = parse_object(line);
  try {
    OrthogonalityReport r;
    r.system = j.at("system").get<std::string>();
    r.r = j.at("r").get<i64>();
    r.s = j.at("s").get<i64>();
    r.exact_mean = j.at("exact_mean").get<i64>();
    r.empirical_mean = exact_from_json(j.at("empirical_mean"));
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed orthogonality report: ") + e.what());
  }
}

std::string to_csv_row(const PartialSumReport& report) {
  return std::to_string(report.x) + "," + to_string(report.exact_sum) + "," + to_string(report.main_term) + "," +
         to_string(report.residual) + "," + to_string(report.certified_bound) + "," + (report.pass ? "true" : "false");
}

std::string to_csv_row(const OrthogonalityReport& report) {
  return report.system + "," + std::to_string(report.r) + "," + std::to_string(report.s) + "," +
         std::to_string(report.exact_mean) + "," + to_string(report.empirical_mean) + "," +
         std::string(to_string(report.verdict));
}

}  // namespace ramlab
