#pragma once

#include <string>
#include <vector>

#include "asx/algebra/errors.hpp"
#include "asx/algebra/linalg.hpp"
#include "asx/scheme/feasibility.hpp"
#include "json.hpp"

namespace asx::cli {

using Json = nlohmann::ordered_json;

enum class Verdict { Ok, Feasible, Verified, Infeasible, InputError, VerificationFailed };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// 0 ok/feasible/verified, 1 infeasible, 2 input error, 3 verification failure.
int exit_code(Verdict v);

/// {command, verdict, checks:[{name,pass,witness}], data}. Every number in
/// it is an exact string.
struct Report {
  std::string command;
  Verdict verdict = Verdict::Ok;
  Json checks = Json::array();
  Json data = Json::object();

  Json to_json() const;
  int exit_code() const { return cli::exit_code(verdict); }
};

/// Exit code read back from a rendered JSON report.
int exit_code_of(const Json& report);

Json checks_json(const FeasibilityReport& r);

template <class T>
Json matrix_json(const Matrix<T>& m) {
  return Json(to_strings(m));
}

template <class T>
Json vector_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ErrorKind error_kind_of(const std::string& name);
/// Library errors split into input errors (2) and verification failures (3).
Verdict verdict_for_error(ErrorKind kind);
Report error_report(const std::string& command, ErrorKind kind, const std::string& message);

/// Indented text rendering of the same model. With approx, every string that
/// parses as an irrational or non-integer number gets a "~x.xxxxx" hint.
std::string render_text(const Json& report, bool approx = false);
std::string render_json(const Json& report);

}  // namespace asx::cli
