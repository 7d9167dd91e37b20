/*
   Copyright 2026 The expm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXPM_CLI_HPP
#define EXPM_CLI_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expm/engine.hpp"

namespace expm::cli {

enum class MatrixFormat { json, csv };

struct MatrixDocument {
    RealMatrix matrix;
    std::optional<std::string> label;
};

/// .csv selects CSV; anything else is read as JSON.
MatrixFormat format_for_path(const std::filesystem::path& path);

/**
 * JSON: {"n": <int>, "entries": [[...], ...], "label": <optional string>}.
 * CSV: n lines of n comma-separated numbers, n inferred.
 * Parsing is locale independent. Errors are InputError and carry a line and
 * column where one exists.
 */
MatrixDocument parse_matrix_text(std::string_view text, MatrixFormat format);
MatrixDocument parse_matrix_document(const std::filesystem::path& path, MatrixFormat format);

/// JSON array of numbers, or CSV with one number per field.
std::vector<double> parse_vector_text(std::string_view text, MatrixFormat format);

struct ClosedFormTerm {
    std::size_t power;
    ComplexMatrix matrix;
};

/// e^{lambda t} sum_i t^i M_i for one eigenvalue.
struct ClosedFormGroup {
    Complex lambda;
    std::size_t multiplicity;
    std::vector<ClosedFormTerm> terms;
};

/// e^{a t} sum_i t^i (cos(b t) P_i + sin(b t) Q_i); b > 0 stands for the
/// pair a +- ib, b == 0 for a real eigenvalue (Q_i zero).
struct RealClosedFormTerm {
    std::size_t power;
    RealMatrix cos_part;
    RealMatrix sin_part;
};

struct RealClosedFormGroup {
    double a;
    double b;
    std::size_t multiplicity;
    std::vector<RealClosedFormTerm> terms;
};

/// Groups sorted by (Re lambda, Im lambda) descending; all-zero terms dropped.
std::vector<ClosedFormGroup> closed_form_groups(const SymbolicExponential& s);

/// Conjugate pairs folded into real cos/sin combinations.
std::vector<RealClosedFormGroup> real_closed_form_groups(const SymbolicExponential& s);

struct ClosedFormRendering {
    std::string plain_text;
    std::string latex;
};

ClosedFormRendering render_closed_form(const SymbolicExponential& s, bool realform);

std::string json_number(double x);
std::string matrix_json(const RealMatrix& m);
std::string polynomial_json(const Polynomial& p);
std::string spectrum_json(const Spectrum& s);
std::string stability_json(const StabilityReport& r);

/**
 * Dispatches `args` (without the program name). Returns 0 on success,
 * 1 on input or usage errors, 2 on numerical failures.
 */
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace expm::cli

#endif
