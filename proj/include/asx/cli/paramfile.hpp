#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "asx/algebra/quadratic.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx::cli {

/// Parsed `asx-params v1` file. radicand is 0 for `field: Q`.
struct ParamFile {
  mpz_class radicand;
  KreinTridiagonal<QuadraticNumber> spec;

  /// The spec over Q, or nothing when some value is irrational.
  std::optional<KreinTridiagonal<Rational>> rational_spec() const;
};

/// Errors carry "line L, column C: ..." in their message.
/// ParseError, ZeroDenominator, InvariantViolation.
ParamFile parse_param_file(std::string_view text);

KreinTridiagonal<QuadraticNumber> parse_params_file(std::string_view text);

/// Canonical text; parse(write(x)) == x.
std::string write_param_file(const ParamFile& file);
std::string write_param_file(const KreinTridiagonal<Rational>& spec);

/// Reads a file from disk and parses it; an unreadable file is a ParseError.
ParamFile load_param_file(const std::string& path);

}  // namespace asx::cli
