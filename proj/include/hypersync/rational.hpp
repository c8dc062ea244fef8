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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypersync {

// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;

// Parses "p/q", an integer, or a finite decimal ("-1.25", "3e-2").
// Throws Error(kSemanticError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" with q > 1, or a bare integer.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace hypersync
