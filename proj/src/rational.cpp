// Copyright 2026 The hypersync Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypersync/rational.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "hypersync/error.hpp"

namespace hypersync {

namespace {

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw Error(ErrorCode::kSemanticError,
              "invalid rational '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyTail: return "EmptyTail";
    case ErrorCode::kEmptyHead: return "EmptyHead";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kDuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::kNonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kTailMismatch: return "TailMismatch";
    case ErrorCode::kHeadOverlap: return "HeadOverlap";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotBalanced: return "NotBalanced";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingCoupling: return "MissingCoupling";
    case ErrorCode::kAsymmetricCoupling: return "AsymmetricCoupling";
    case ErrorCode::kNonFiniteState: return "NonFiniteState";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotEquilibrium: return "NotEquilibrium";
    case ErrorCode::kZeroComponent: return "ZeroComponent";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSemanticError: return "SemanticError";
    case ErrorCode::kUsageError: return "UsageError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) bad_literal(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text, "expected p/q");
    mpz_class q{std::string(den)};
    if (q == 0) bad_literal(text, "zero denominator");
    value = Rational(mpz_class(std::string(num)), q);
    value.canonicalize();
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(),
                                       exp_text.data() + exp_text.size(),
                                       exponent);
      if (exp_text.empty() || ec != std::errc() ||
          ptr != exp_text.data() + exp_text.size()) {
        bad_literal(text, "bad exponent");
      }
      if (exponent > 4096 || exponent < -4096) {
        bad_literal(text, "exponent out of range");
      }
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_literal(text, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      bad_literal(text, "unexpected character");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) digits = "0";
    exponent -= static_cast<long>(frac_part.size());
    mpz_class num{digits};
    if (exponent >= 0) {
      value = Rational(num * pow10(exponent));
    } else {
      value = Rational(num, pow10(-exponent));
      value.canonicalize();
    }
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace hypersync
