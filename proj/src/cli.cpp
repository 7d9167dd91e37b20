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

#include "expm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "expm/charpoly.hpp"

namespace expm::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line, std::size_t column) {
    const auto text = trim(field);
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": invalid number '" + std::string(text) + "'");
    if (!std::isfinite(value))
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": non-finite entry");
    return value;
}

// Rows of comma-separated numbers; blank lines are skipped.
std::vector<std::vector<double>> parse_csv_rows(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const auto field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
            row.push_back(parse_number(field, line_no, start + 1));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

double json_entry(const json& v, std::size_t row, std::size_t col) {
    if (!v.is_number())
        throw InputError("entries[" + std::to_string(row) + "][" + std::to_string(col) + "] is not a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw InputError("entries[" + std::to_string(row) + "][" + std::to_string(col) + "] is not finite");
    return x;
}

std::string shortest(double x) {
    if (x == 0.0) return "0";
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    return std::string(buf.data(), ptr);
}

struct Fraction {
    long long num;
    long long den;
};

// Numerators over the smallest denominator q <= 720 that reproduces every value
// to 1e-11 of the largest magnitude.
std::optional<std::vector<long long>> common_denominator(std::span<const double> values, long long& den_out) {
    double scale = 1.0;
    for (double x : values) scale = std::max(scale, std::abs(x));
    for (long long q = 1; q <= 720; ++q) {
        std::vector<long long> nums;
        nums.reserve(values.size());
        bool ok = true;
        for (double x : values) {
            const double scaled = x * static_cast<double>(q);
            const double r = std::round(scaled);
            if (std::abs(r) > 1e7 || std::abs(scaled - r) > 1e-11 * scale * static_cast<double>(q)) {
                ok = false;
                break;
            }
            nums.push_back(static_cast<long long>(r));
        }
        if (ok) {
            den_out = q;
            return nums;
        }
    }
    return std::nullopt;
}

std::optional<Fraction> as_fraction(double x) {
    long long den = 1;
    const std::array<double, 1> v{x};
    const auto nums = common_denominator(v, den);
    if (!nums) return std::nullopt;
    const long long g = std::gcd((*nums)[0], den);
    return Fraction{(*nums)[0] / g, den / g};
}

std::string scalar_text(double x) {
    if (const auto f = as_fraction(x)) {
        if (f->den == 1) return std::to_string(f->num);
        return std::to_string(f->num) + "/" + std::to_string(f->den);
    }
    return shortest(x);
}

std::string complex_text(Complex z) {
    const std::string re = scalar_text(z.real());
    const std::string im = scalar_text(std::abs(z.imag()));
    if (im == "0") return re;
    const std::string sign = z.imag() < 0 ? "-" : "+";
    if (re == "0") return (sign == "-" ? "-" : "") + im + "i";
    return re + sign + im + "i";
}

// Coefficient of t inside an exponent or trig argument: "", "-", "5", "(1/3)".
std::string rate_text(const std::string& scalar) {
    if (scalar == "0") return "0";
    if (scalar == "1") return "";
    if (scalar == "-1") return "-";
    if (scalar.find_first_of("/+i") != std::string::npos || scalar.find('-', 1) != std::string::npos)
        return "(" + scalar + ")";
    return scalar;
}

std::string exp_text(Complex lambda) {
    const auto rate = rate_text(complex_text(lambda));
    if (rate == "0") return "";
    return "e^{" + rate + "t}";
}

std::string power_text(std::size_t power) {
    if (power == 0) return "";
    if (power == 1) return "t";
    return "t^" + std::to_string(power);
}

struct MatrixText {
    std::string factor;  // empty when no scalar is factored out
    std::vector<std::vector<std::string>> cells;
};

// Factors out a common rational scalar when every component is rational.
MatrixText matrix_text(const ComplexMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> comps;
    for (const auto& z : m.entries()) {
        comps.push_back(z.real());
        comps.push_back(z.imag());
    }
    MatrixText out;
    out.cells.assign(n, std::vector<std::string>(n));
    long long den = 1;
    const auto nums = common_denominator(comps, den);
    if (nums) {
        long long g = 0;
        for (auto v : *nums) g = std::gcd(g, v);
        if (g == 0) g = 1;
        const long long fg = std::gcd(g, den);
        const long long fnum = g / fg;
        const long long fden = den / fg;
        if (fden != 1)
            out.factor = std::to_string(fnum) + "/" + std::to_string(fden);
        else if (fnum != 1)
            out.factor = std::to_string(fnum);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long long re = (*nums)[2 * (i * n + j)] / g;
                const long long im = (*nums)[2 * (i * n + j) + 1] / g;
                out.cells[i][j] = complex_text(Complex{static_cast<double>(re), static_cast<double>(im)});
            }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.cells[i][j] = complex_text(m(i, j));
    return out;
}

std::string plain_matrix(const ComplexMatrix& m) {
    const auto mt = matrix_text(m);
    std::string s = mt.factor.empty() ? "" : "(" + mt.factor + ") ";
    s += "[";
    for (std::size_t i = 0; i < mt.cells.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < mt.cells[i].size(); ++j) s += (j ? ", " : "") + mt.cells[i][j];
        s += "]";
    }
    return s + "]";
}

std::string latex_scalar(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return text;
    const bool neg = text.front() == '-';
    const auto num = text.substr(neg ? 1 : 0, slash - (neg ? 1 : 0));
    return (neg ? "-" : "") + std::string("\\frac{") + num + "}{" + text.substr(slash + 1) + "}";
}

std::string latex_matrix(const ComplexMatrix& m) {
    const auto mt = matrix_text(m);
    std::string s = mt.factor.empty() ? "" : latex_scalar(mt.factor) + " ";
    s += "\\begin{pmatrix}";
    for (std::size_t i = 0; i < mt.cells.size(); ++i) {
        if (i) s += " \\\\ ";
        for (std::size_t j = 0; j < mt.cells[i].size(); ++j) s += (j ? " & " : "") + latex_scalar(mt.cells[i][j]);
    }
    return s + "\\end{pmatrix}";
}

bool is_zero(const ComplexMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const Complex& z) { return z == Complex{}; });
}

bool is_zero(const RealMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](double x) { return x == 0.0; });
}

std::string join_prefixed(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
    return s;
}

std::string term_prefix(std::size_t power, const std::string& exp_part, const std::string& trig) {
    std::vector<std::string> bits;
    for (const auto& b : {power_text(power), exp_part, trig})
        if (!b.empty()) bits.push_back(b);
    return join_prefixed(bits, " ");
}

std::string trig_text(const char* fn, double b) { return std::string(fn) + "(" + rate_text(scalar_text(b)) + "t)"; }

std::uint64_t seed_from_env() {
    const char* env = std::getenv("EXPM_SEED");
    if (env == nullptr || *env == '\0') return kDefaultRootSeed;
    std::uint64_t seed = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("EXPM_SEED must be an unsigned integer");
    return seed;
}

void print_warnings(const SymbolicExponential& s, std::ostream& err) {
    for (const auto& w : s.warnings()) err << "warning: " << w << '\n';
}

}  // namespace

MatrixFormat format_for_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".csv" ? MatrixFormat::csv : MatrixFormat::json;
}

MatrixDocument parse_matrix_text(std::string_view text, MatrixFormat format) {
    if (format == MatrixFormat::csv) {
        const auto rows = parse_csv_rows(text);
        if (rows.empty()) throw InputError("empty matrix file");
        const std::size_t n = rows.size();
        std::vector<double> entries;
        entries.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw InputError("matrix not square");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return {RealMatrix(n, std::move(entries)), std::nullopt};
    }

    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("matrix document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("field 'n' must be an integer");
    const auto n_signed = doc["n"].get<long long>();
    if (n_signed < 1) throw InputError("field 'n' must be positive");
    const auto n = static_cast<std::size_t>(n_signed);
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw InputError("field 'entries' must be an array");
    const auto& rows = doc["entries"];
    if (rows.size() != n) throw InputError("matrix not square");
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw InputError("matrix not square");
        for (std::size_t j = 0; j < n; ++j) entries.push_back(json_entry(rows[i][j], i, j));
    }
    MatrixDocument out{RealMatrix(n, std::move(entries)), std::nullopt};
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw InputError("field 'label' must be a string");
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

MatrixDocument parse_matrix_document(const std::filesystem::path& path, MatrixFormat format) {
    return parse_matrix_text(read_file(path), format);
}

std::vector<double> parse_vector_text(std::string_view text, MatrixFormat format) {
    if (format == MatrixFormat::csv) {
        std::vector<double> out;
        for (const auto& row : parse_csv_rows(text)) out.insert(out.end(), row.begin(), row.end());
        if (out.empty()) throw InputError("empty vector file");
        return out;
    }
    json doc = parse_json(text);
    if (doc.is_object() && doc.contains("x0")) doc = doc["x0"];
    if (!doc.is_array() || doc.empty()) throw InputError("vector must be a non-empty JSON array of numbers");
    std::vector<double> out;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        if (!doc[k].is_number()) throw InputError("vector entry " + std::to_string(k) + " is not a number");
        out.push_back(doc[k].get<double>());
        if (!std::isfinite(out.back())) throw InputError("vector entry " + std::to_string(k) + " is not finite");
    }
    return out;
}

std::vector<ClosedFormGroup> closed_form_groups(const SymbolicExponential& s) {
    std::vector<ClosedFormGroup> groups;
    for (const auto& e : s.spectrum().items()) groups.push_back({e.value, e.multiplicity, {}});
    for (const auto& term : s.terms()) {
        if (is_zero(term.matrix)) continue;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.lambda == term.lambda; });
        it->terms.push_back({term.power, term.matrix});
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
        if (x.lambda.real() != y.lambda.real()) return x.lambda.real() > y.lambda.real();
        return x.lambda.imag() > y.lambda.imag();
    });
    return groups;
}

std::vector<RealClosedFormGroup> real_closed_form_groups(const SymbolicExponential& s) {
    std::vector<RealClosedFormGroup> out;
    for (const auto& g : closed_form_groups(s)) {
        const double a = g.lambda.real();
        const double b = g.lambda.imag();
        if (b < 0.0) continue;  // folded into its partner with b > 0
        RealClosedFormGroup rg{a, b, g.multiplicity, {}};
        for (const auto& term : g.terms) {
            if (b == 0.0) {
                rg.terms.push_back({term.power, real_part(term.matrix), RealMatrix::zeros(s.order())});
            } else {
                RealMatrix p = real_part(term.matrix);
                RealMatrix q = imag_part(term.matrix);
                p *= 2.0;
                q *= -2.0;
                rg.terms.push_back({term.power, std::move(p), std::move(q)});
            }
        }
        out.push_back(std::move(rg));
    }
    return out;
}

ClosedFormRendering render_closed_form(const SymbolicExponential& s, bool realform) {
    std::ostringstream plain;
    std::vector<std::string> latex_groups;

    if (!realform) {
        const auto groups = closed_form_groups(s);
        plain << "e^{tA} = sum over " << groups.size() << " eigenvalue group" << (groups.size() == 1 ? "" : "s")
              << '\n';
        for (const auto& g : groups) {
            plain << "[lambda = " << complex_text(g.lambda) << ", multiplicity " << g.multiplicity << "]\n";
            std::vector<std::string> inner;
            for (const auto& term : g.terms) {
                const auto prefix = term_prefix(term.power, exp_text(g.lambda), "");
                plain << "  + " << (prefix.empty() ? "" : prefix + " * ") << plain_matrix(term.matrix) << '\n';
                inner.push_back((term.power ? power_text(term.power) + " " : "") + latex_matrix(term.matrix));
            }
            if (inner.empty()) continue;
            const auto e = exp_text(g.lambda);
            const auto body = inner.size() == 1 ? inner[0] : "\\left[" + join_prefixed(inner, " + ") + "\\right]";
            latex_groups.push_back(e.empty() ? body : e + " " + body);
        }
    } else {
        const auto groups = real_closed_form_groups(s);
        plain << "e^{tA} = sum over " << groups.size() << " real eigenvalue group" << (groups.size() == 1 ? "" : "s")
              << '\n';
        for (const auto& g : groups) {
            const auto e = exp_text(Complex{g.a, 0.0});
            if (g.b == 0.0)
                plain << "[lambda = " << scalar_text(g.a) << ", multiplicity " << g.multiplicity << "]\n";
            else
                plain << "[lambda = " << scalar_text(g.a) << " +- " << scalar_text(g.b) << "i, multiplicity "
                      << g.multiplicity << "]\n";
            std::vector<std::string> inner;
            for (const auto& term : g.terms) {
                const std::string pw = term.power ? power_text(term.power) + " " : "";
                const ComplexMatrix cp = to_complex(term.cos_part);
                const ComplexMatrix sp = to_complex(term.sin_part);
                if (g.b == 0.0) {
                    const auto prefix = term_prefix(term.power, e, "");
                    plain << "  + " << (prefix.empty() ? "" : prefix + " * ") << plain_matrix(cp) << '\n';
                    inner.push_back(pw + latex_matrix(cp));
                    continue;
                }
                if (!is_zero(term.cos_part)) {
                    plain << "  + " << term_prefix(term.power, e, trig_text("cos", g.b)) << " * " << plain_matrix(cp)
                          << '\n';
                    inner.push_back(pw + "\\cos(" + rate_text(scalar_text(g.b)) + "t) " + latex_matrix(cp));
                }
                if (!is_zero(term.sin_part)) {
                    plain << "  + " << term_prefix(term.power, e, trig_text("sin", g.b)) << " * " << plain_matrix(sp)
                          << '\n';
                    inner.push_back(pw + "\\sin(" + rate_text(scalar_text(g.b)) + "t) " + latex_matrix(sp));
                }
            }
            if (inner.empty()) continue;
            const auto body = inner.size() == 1 ? inner[0] : "\\left[" + join_prefixed(inner, " + ") + "\\right]";
            latex_groups.push_back(e.empty() ? body : e + " " + body);
        }
    }

    std::string latex = "e^{tA} = " + (latex_groups.empty() ? std::string("0") : join_prefixed(latex_groups, " + "));
    return {plain.str(), latex};
}

std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return buf.data();
}

std::string matrix_json(const RealMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.order(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.order(); ++j) s += (j ? "," : "") + json_number(m(i, j));
        s += "]";
    }
    return s + "]";
}

std::string polynomial_json(const Polynomial& p) {
    std::string s = "[";
    const auto c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + json_number(c[k].real());
    return s + "]";
}

std::string spectrum_json(const Spectrum& spectrum) {
    std::string s = "[";
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        const auto& e = spectrum[j];
        s += (j ? "," : "") + std::string("{\"lambda\":[") + json_number(e.value.real()) + "," +
             json_number(e.value.imag()) + "],\"multiplicity\":" + std::to_string(e.multiplicity) + "}";
    }
    return s + "]";
}

std::string stability_json(const StabilityReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? json_number(*v) : std::string("null"); };
    return std::string("{\"spectral_abscissa\":") + json_number(r.spectral_abscissa) +
           ",\"alpha\":" + opt(r.alpha) + ",\"C\":" + opt(r.c) +
           ",\"is_asymptotically_stable\":" + (r.is_asymptotically_stable ? "true" : "false") +
           ",\"samples_checked\":" + std::to_string(r.samples_checked) +
           ",\"bound_held\":" + (r.bound_held ? "true" : "false") + ",\"horizon\":" + json_number(r.horizon) + "}";
}

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matrix exponential e^{tA} by the Cayley-Hamilton partial-fraction formula", "expm"};
    app.require_subcommand(1, 1);

    std::string input;
    double tol = 0.0;
    double t = 0.0;
    bool check_oracle = false;
    bool latex = false;
    bool realform = false;
    std::string x0_path;
    double t0 = 0.0;
    double t1 = 10.0;
    std::size_t steps = 100;
    std::string out_path;
    double horizon = 50.0;
    std::size_t samples = 200;

    auto add_input = [&](CLI::App* sub) { sub->add_option("-i,--input", input, "Matrix file (.json or .csv)")->required(); };
    auto add_tol = [&](CLI::App* sub) {
        return sub->add_option("--tol", tol, "Eigenvalue cluster tolerance")->check(CLI::PositiveNumber);
    };

    auto* charpoly_cmd = app.add_subcommand("charpoly", "Monic characteristic polynomial, ascending coefficients");
    add_input(charpoly_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Distinct eigenvalues with multiplicities");
    add_input(spectrum_cmd);
    CLI::Option* spectrum_tol = add_tol(spectrum_cmd);

    auto* expm_cmd = app.add_subcommand("expm", "Evaluate e^{tA}");
    add_input(expm_cmd);
    expm_cmd->add_option("-t", t, "Time")->required();
    expm_cmd->add_flag("--check-oracle", check_oracle, "Also report the deviation from scaling and squaring");
    CLI::Option* expm_tol = add_tol(expm_cmd);

    auto* closed_cmd = app.add_subcommand("closed-form", "Print e^{tA} grouped by eigenvalue");
    add_input(closed_cmd);
    closed_cmd->add_flag("--latex", latex, "LaTeX output");
    closed_cmd->add_flag("--realform", realform, "Fold conjugate pairs into cos/sin combinations");
    CLI::Option* closed_tol = add_tol(closed_cmd);

    auto* traj_cmd = app.add_subcommand("trajectory", "Solve x' = Ax on a uniform time grid");
    add_input(traj_cmd);
    traj_cmd->add_option("--x0", x0_path, "Initial state (.json array or .csv)")->required();
    traj_cmd->add_option("--t0", t0, "Start time");
    traj_cmd->add_option("--t1", t1, "End time");
    traj_cmd->add_option("--steps", steps, "Number of steps")->check(CLI::PositiveNumber);
    traj_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
    CLI::Option* traj_tol = add_tol(traj_cmd);

    auto* stab_cmd = app.add_subcommand("stability", "Exponential stability certificate");
    add_input(stab_cmd);
    stab_cmd->add_option("--horizon", horizon, "Largest sampled time")->check(CLI::PositiveNumber);
    stab_cmd->add_option("--samples", samples, "Number of log-spaced samples")->check(CLI::PositiveNumber);
    CLI::Option* stab_tol = add_tol(stab_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        const auto seed = seed_from_env();
        const auto doc = parse_matrix_document(input, format_for_path(input));
        const RealMatrix& a = doc.matrix;
        BuildOptions options;
        options.seed = seed;
        for (const CLI::Option* o : {spectrum_tol, expm_tol, closed_tol, traj_tol, stab_tol})
            if (o->count() > 0) options.tolerance = tol;
        if (!within_accuracy_envelope(a) && (charpoly_cmd->parsed() || spectrum_cmd->parsed()))
            err << "warning: matrix outside the accuracy envelope (order <= 32, infinity norm <= 1e3)\n";

        if (charpoly_cmd->parsed()) {
            out << polynomial_json(characteristic_polynomial(a)) << '\n';
        } else if (spectrum_cmd->parsed()) {
            const auto p = characteristic_polynomial(a);
            const auto roots = find_roots(p, seed);
            const double cluster_tol = options.tolerance.value_or(default_cluster_tolerance(roots));
            const auto spectrum = polish_spectrum(p, cluster_spectrum(roots, cluster_tol), cluster_tol);
            if (spectrum.min_separation() < kConditioningSeparation)
                err << "warning: ill-conditioned spectrum: minimum eigenvalue separation below 1e-3\n";
            out << spectrum_json(spectrum) << '\n';
        } else if (expm_cmd->parsed()) {
            const auto s = build_symbolic_exponential(a, options);
            print_warnings(s, err);
            const RealMatrix e = evaluate(s, t);
            if (check_oracle) {
                const RealMatrix o = expm_oracle(a, t);
                const double dev = norm_frobenius(e - o) / std::max(norm_frobenius(o), 1e-300);
                out << "{\"expm\":" << matrix_json(e) << ",\"oracle_relative_deviation\":" << json_number(dev)
                    << "}\n";
            } else {
                out << matrix_json(e) << '\n';
            }
        } else if (closed_cmd->parsed()) {
            const auto s = build_symbolic_exponential(a, options);
            print_warnings(s, err);
            const auto rendering = render_closed_form(s, realform);
            if (doc.label) out << "# " << *doc.label << '\n';
            out << (latex ? rendering.latex + "\n" : rendering.plain_text);
        } else if (traj_cmd->parsed()) {
            const auto x0 = parse_vector_text(read_file(x0_path), format_for_path(x0_path));
            if (!std::isfinite(t0) || !std::isfinite(t1)) throw InputError("time bounds must be finite");
            std::vector<double> times(steps + 1);
            for (std::size_t k = 0; k <= steps; ++k)
                times[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(steps);
            times.back() = t1;
            const auto s = build_symbolic_exponential(a, options);
            print_warnings(s, err);
            const auto traj = solve_ivp(s, x0, times);

            std::ostringstream csv;
            csv << 't';
            for (std::size_t i = 1; i <= a.order(); ++i) csv << ",x" << i;
            csv << '\n';
            for (std::size_t k = 0; k < traj.times.size(); ++k) {
                csv << json_number(traj.times[k]);
                for (double v : traj.states[k]) csv << ',' << json_number(v);
                csv << '\n';
            }
            if (out_path.empty()) {
                out << csv.str();
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw InputError("cannot write '" + out_path + "'");
                f << csv.str();
            }
        } else if (stab_cmd->parsed()) {
            const auto s = build_symbolic_exponential(a, options);
            print_warnings(s, err);
            out << stability_json(stability_report(s, horizon, samples)) << '\n';
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace expm::cli
