#include "asx/scheme/ordering.hpp"

namespace asx {

std::string to_string(StructureType t) {
  switch (t) {
    case StructureType::I: return "I";
    case StructureType::II: return "II";
    case StructureType::III: return "III";
    case StructureType::IV: return "IV";
    case StructureType::V: return "V";
    case StructureType::None: return "none";
  }
  return "none";
}

void validate_ordering(const Ordering& sigma) {
  if (sigma.empty() || sigma[0] != 0) throw Error(ErrorKind::InvalidArgument, "ordering must fix 0");
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "not a permutation: " + to_string(sigma));
    }
    seen[v] = true;
  }
}

Ordering inverse_ordering(const Ordering& sigma) {
  Ordering inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
  return inv;
}

std::string to_string(const Ordering& sigma) {
  std::string out = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sigma[i]);
  }
  return out + ")";
}

std::string cycle_string(const Ordering& sigma) {
  std::string out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s] || sigma[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = sigma[x];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

namespace {

bool is_permutation_of_range(const Ordering& seq, int d) {
  if (static_cast<int>(seq.size()) != d + 1) return false;
  std::vector<bool> seen(d + 1, false);
  for (int v : seq) {
    if (v < 0 || v > d || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::vector<std::pair<StructureType, Ordering>> structure_patterns(int d) {
  std::vector<std::pair<StructureType, Ordering>> raw;

  Ordering one;
  for (int i = 0; i <= d; i += 2) one.push_back(i);
  for (int i = (d % 2 == 1 ? d : d - 1); i >= 1; i -= 2) one.push_back(i);
  raw.emplace_back(StructureType::I, one);

  Ordering two;
  for (int lo = 0, hi = d; lo <= hi; ++lo, --hi) {
    two.push_back(lo);
    if (hi != lo) two.push_back(hi);
  }
  raw.emplace_back(StructureType::II, two);

  Ordering three(d + 1);
  for (int t = 0; t <= d; ++t) three[t] = (t % 2 == 0) ? t : d - (t - 1);
  raw.emplace_back(StructureType::III, three);

  Ordering four(d + 1);
  for (int t = 0; t <= d; ++t) four[t] = (t % 2 == 0) ? t : d - t;
  raw.emplace_back(StructureType::IV, four);

  if (d == 5) raw.emplace_back(StructureType::V, Ordering{0, 5, 3, 2, 4, 1});

  std::vector<std::pair<StructureType, Ordering>> out;
  for (auto& p : raw) {
    if (is_permutation_of_range(p.second, d)) out.push_back(std::move(p));
  }
  return out;
}

StructureType classify_structure_pair(const Ordering& sigma, int d) {
  validate_ordering(sigma);
  Ordering identity(d + 1);
  std::iota(identity.begin(), identity.end(), 0);
  if (sigma == identity) return StructureType::None;
  for (const auto& [type, seq] : structure_patterns(d)) {
    if (seq == sigma) return type;
  }
  return StructureType::None;
}

bool satisfies_q_conditions(const std::vector<std::vector<std::vector<bool>>>& zero, const Ordering& sigma) {
  const int d = static_cast<int>(sigma.size()) - 1;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k <= d; ++k) {
        const bool z = zero[sigma[i]][sigma[j]][sigma[k]];
        const int mx = std::max({i, j, k});
        const int rest = i + j + k - mx;
        if (mx > rest && !z) return false;   // (Q1)
        if (mx == rest && z) return false;   // (Q2)
      }
    }
  }
  return true;
}

}  // namespace asx
