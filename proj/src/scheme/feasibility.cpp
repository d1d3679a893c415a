#include "asx/scheme/feasibility.hpp"

namespace asx {

namespace {

bool positive_integer(const QuadraticNumber& x) {
  return x.is_rational() && x.as_rational().is_integer() && x.sign() > 0;
}

bool nonnegative_integer(const QuadraticNumber& x) {
  return x.is_rational() && x.as_rational().is_integer() && x.sign() >= 0;
}

FeasibilityCheck column_sums(const std::string& name, char symbol, const StructureTensor<QuadraticNumber>& t,
                             const std::vector<QuadraticNumber>& expected) {
  FeasibilityCheck check{name, true, {}};
  const int d = t.d();
  for (int i = 0; i <= d; ++i) {
    for (int k = 0; k <= d; ++k) {
      const auto s = t.column_sum(i, k);
      if (s != expected[i]) {
        check.pass = false;
        check.witnesses.push_back({"sum_j " + index_label(symbol, i, -1, k), s.to_string()});
      }
    }
  }
  return check;
}

}  // namespace

std::string index_label(char symbol, int i, int j, int k) {
  std::string out(1, symbol);
  out += "^" + std::to_string(k) + "_" + std::to_string(i) + (j < 0 ? std::string("j") : std::to_string(j));
  return out;
}

bool FeasibilityReport::passed() const { return first_failure() == nullptr; }

const FeasibilityCheck* FeasibilityReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

const FeasibilityCheck* FeasibilityReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

FeasibilityReport feasibility_report(SchemeParams& params) {
  FeasibilityReport report;
  const int d = params.d;

  FeasibilityCheck krein{"krein nonnegativity", true, {}};
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        const auto& q = params.kreins(i, j, k);
        if (q.sign() < 0) {
          krein.pass = false;
          krein.witnesses.push_back({index_label('q', i, j, k), q.to_string()});
        }
      }
  report.checks.push_back(std::move(krein));

  FeasibilityCheck mult{"multiplicity integrality", true, {}};
  for (int i = 0; i <= d; ++i) {
    if (!positive_integer(params.multiplicities[i])) {
      mult.pass = false;
      mult.witnesses.push_back({"m_" + std::to_string(i), params.multiplicities[i].to_string()});
    }
  }
  report.checks.push_back(std::move(mult));

  FeasibilityCheck val{"valency integrality", true, {}};
  for (int i = 0; i <= d; ++i) {
    if (!positive_integer(params.valencies[i])) {
      val.pass = false;
      val.witnesses.push_back({"k_" + std::to_string(i), params.valencies[i].to_string()});
    }
  }
  report.checks.push_back(std::move(val));

  const auto& p = ensure_intersections(params);
  FeasibilityCheck inter{"intersection integrality", true, {}};
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        if (!nonnegative_integer(p(i, j, k))) {
          inter.pass = false;
          inter.witnesses.push_back({index_label('p', i, j, k), p(i, j, k).to_string()});
        }
      }
  report.checks.push_back(std::move(inter));

  report.checks.push_back(column_sums("krein column sums", 'q', params.kreins, params.multiplicities));
  report.checks.push_back(column_sums("intersection column sums", 'p', p, params.valencies));
  return report;
}

}  // namespace asx
