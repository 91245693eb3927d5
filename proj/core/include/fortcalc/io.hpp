#pragma once

#include <filesystem>
#include <string>

#include "fortcalc/analysis.hpp"

namespace fortcalc {

inline constexpr const char* kCsvHeader =
    "r_over_w0,u_rwa,u_nonrwa,term1,term2,term3,f_rwa,f_nonrwa";

// Header plus one row per radius, "%.12e" fields, LF line endings.
std::string format_csv(const ScanCurve& curve);
void emit_csv(const ScanCurve& curve, const std::filesystem::path& path);

enum class Overlay { kRwa, kNonRwa, kBoth };

Overlay parse_overlay(const std::string& name);

// Self-contained SVG: non-RWA solid, RWA dashed, axes "r / w0" and "U / ħΓ".
// Rows with non-finite values are dropped; throws ValidationError if nothing
// is left (no file is written in that case).
std::string render_svg(const ScanCurve& curve, Overlay overlay);
void emit_svg(const ScanCurve& curve, const std::filesystem::path& path,
              Overlay overlay);

// Writes text to path, throwing std::runtime_error naming the path on failure.
void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace fortcalc
