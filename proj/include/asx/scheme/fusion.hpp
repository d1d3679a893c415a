#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asx/algebra/errors.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx {

struct FusionPartition {
  std::vector<std::vector<int>> blocks;

  /// "0|1,5|2,3|4"
  static FusionPartition parse(std::string_view text);
  static FusionPartition singletons(int d);
  /// Throws InvalidPartition unless the blocks partition 0..d with {0} first.
  void validate(int d) const;
  std::string to_string() const;
};

template <class T>
struct FusedTensor {
  StructureTensor<T> tensor;
  std::vector<T> multiplicities;
};

/// s^k_ij = sum over alpha in T_i, beta in T_j of x^gamma_{alpha beta}, for
/// every gamma in T_k; all choices of gamma must agree.
template <class T>
FusedTensor<T> fuse(const StructureTensor<T>& t, const std::vector<T>& multiplicities, const FusionPartition& part) {
  const int d = t.d();
  part.validate(d);
  const int e = static_cast<int>(part.blocks.size()) - 1;
  FusedTensor<T> out;
  out.tensor.B.assign(e + 1, Matrix<T>(e + 1, e + 1));
  for (int i = 0; i <= e; ++i) {
    for (int j = 0; j <= e; ++j) {
      for (int k = 0; k <= e; ++k) {
        bool first = true;
        T value(0);
        int first_gamma = 0;
        for (int gamma : part.blocks[k]) {
          T s(0);
          for (int alpha : part.blocks[i])
            for (int beta : part.blocks[j]) s += t(alpha, beta, gamma);
          if (first) {
            value = s;
            first_gamma = gamma;
            first = false;
          } else if (!(s == value)) {
            throw Error(ErrorKind::WellDefinednessViolation,
                        "s^" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j) + " differs for gamma=" +
                            std::to_string(first_gamma) + " and gamma'=" + std::to_string(gamma));
          }
        }
        out.tensor(i, j, k) = value;
      }
    }
  }
  for (const auto& block : part.blocks) {
    T s(0);
    for (int alpha : block) s += multiplicities.at(alpha);
    out.multiplicities.push_back(s);
  }
  return out;
}

}  // namespace asx
