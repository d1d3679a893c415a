#include "asx/cli/report.hpp"

#include <gmp.h>

#include <sstream>

#include "asx/algebra/quadratic.hpp"

namespace asx::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Feasible: return "feasible";
    case Verdict::Verified: return "verified";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::InputError: return "input error";
    case Verdict::VerificationFailed: return "verification failed";
  }
  return "verification failed";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::Ok, Verdict::Feasible, Verdict::Verified, Verdict::Infeasible, Verdict::InputError,
                    Verdict::VerificationFailed}) {
    if (to_string(v) == s) return v;
  }
  return Verdict::VerificationFailed;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Ok:
    case Verdict::Feasible:
    case Verdict::Verified: return 0;
    case Verdict::Infeasible: return 1;
    case Verdict::InputError: return 2;
    case Verdict::VerificationFailed: return 3;
  }
  return 3;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["verdict"] = to_string(verdict);
  j["checks"] = checks;
  j["data"] = data;
  return j;
}

int exit_code_of(const Json& report) { return exit_code(verdict_from_string(report.at("verdict").get<std::string>())); }

Json checks_json(const FeasibilityReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back({{"where", x.where}, {"value", x.value}});
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", w}});
  }
  return out;
}

ErrorKind error_kind_of(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::InvalidArgument); ++k) {
    if (asx::to_string(static_cast<ErrorKind>(k)) == name) return static_cast<ErrorKind>(k);
  }
  return ErrorKind::VerificationFailure;
}

Verdict verdict_for_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentEigenmatrices:
    case ErrorKind::ConsistencyFailure:
    case ErrorKind::StepFailure:
    case ErrorKind::VerificationFailure: return Verdict::VerificationFailed;
    default: return Verdict::InputError;
  }
}

Report error_report(const std::string& command, ErrorKind kind, const std::string& message) {
  Report r;
  r.command = command;
  r.verdict = verdict_for_error(kind);
  r.data["error"] = std::string(asx::to_string(kind));
  const std::string prefix = std::string(asx::to_string(kind)) + ": ";
  r.data["message"] = message.rfind(prefix, 0) == 0 ? message.substr(prefix.size()) : message;
  return r;
}

namespace {

std::string hint(const std::string& s) {
  if (s.empty() || s.size() > 400 || s.find_first_of(" m") != std::string::npos) return {};
  try {
    const auto x = QuadraticNumber::parse(s);
    if (x.is_rational() && x.as_rational().is_integer()) return {};
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.6Fg", x.approximate(128).get_mpf_t());
    return std::string(" ~") + buf;
  } catch (const Error&) {
    return {};
  }
}

std::string scalar(const Json& v, bool approx) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    return approx ? s + hint(s) : s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

bool has_spaces(const Json& a) {
  for (const auto& x : a)
    if (x.is_string() && x.get_ref<const std::string&>().find(' ') != std::string::npos) return true;
  return false;
}

void render(std::ostringstream& os, const Json& v, int indent, bool approx);

void render_member(std::ostringstream& os, const std::string& key, const Json& v, int indent, bool approx) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << key << ": " << scalar(v, approx) << "\n";
  } else if (v.is_array() && all_scalars(v) && !has_spaces(v) && !approx) {
    os << pad << key << ":";
    for (const auto& x : v) os << " " << scalar(x, approx);
    os << "\n";
  } else if (v.empty()) {
    os << pad << key << ": " << (v.is_array() ? "none" : "-") << "\n";
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 2, approx);
  }
}

void render(std::ostringstream& os, const Json& v, int indent, bool approx) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_member(os, key, value, indent, approx);
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_structured()) {
        os << pad << "- " << scalar(x, approx) << "\n";
      } else if (x.is_array() && all_scalars(x)) {
        os << pad;
        bool first = true;
        for (const auto& y : x) {
          os << (first ? "" : "  ") << scalar(y, approx);
          first = false;
        }
        os << "\n";
      } else {
        os << pad << "-\n";
        render(os, x, indent + 2, approx);
      }
    }
  } else {
    os << pad << scalar(v, approx) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report, bool approx) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << "\n";
  os << "verdict: " << report.value("verdict", "") << "\n";
  const Json& checks = report.at("checks");
  if (!checks.empty()) {
    os << "checks:\n";
    for (const auto& c : checks) {
      os << "  [" << (c.at("pass").get<bool>() ? "pass" : "FAIL") << "] " << c.at("name").get<std::string>() << "\n";
      for (const auto& w : c.at("witness")) {
        os << "         " << w.at("where").get<std::string>() << " = " << scalar(w.at("value"), approx) << "\n";
      }
    }
  }
  const Json& data = report.at("data");
  if (!data.empty()) {
    os << "data:\n";
    render(os, data, 2, approx);
  }
  return os.str();
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace asx::cli
