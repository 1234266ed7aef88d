#ifndef UMBRAL_IO_HPP
#define UMBRAL_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "umbral/classical.hpp"
#include "umbral/orthopoly.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/scalar.hpp"

namespace umbral {

using json = nlohmann::ordered_json;

/// Exact scalars become "p/q" strings (integers as "n"); floating ones
/// become [re, im].
json to_json(const Scalar& s);
json to_json(std::span<const Scalar> values);
/// Coefficients from x^0 upwards.
json to_json(const Polynomial& p);
/// {"b": [...], "u": [...], "h": [...], "polys": [[...], ...]}.
json to_json(const MonicPolySystem& p);

/// Accepts "p/q" or decimal strings, integers, floats and [re, im] pairs.
/// Floats are converted exactly in exact mode.
Scalar scalar_from_json(const json& j, Mode mode);

/// Parses a moment or mu list: a JSON array, or CSV with one value per
/// line (blank lines and lines starting with '#' are skipped).
std::vector<Scalar> parse_scalar_list(std::string_view text, Mode mode);
std::vector<Scalar> read_scalar_file(const std::filesystem::path& path, Mode mode);

/// Decimal-free text form used in CSV cells.
std::string csv_cell(const Scalar& s);

/// {"verdict", "status", "depth", "max_residual", "failing_cell",
///  "band_width", "gram": {...}}. failing_cell is the first failing cell
/// of the main system, or the worst off-diagonal Gram cell when only the
/// Gram test fails. band_width is j, "nonlocal", or null without R.
json report_to_json(const ClassicalReport& rep, const Tolerance& tol);

} // namespace umbral

#endif // UMBRAL_IO_HPP
