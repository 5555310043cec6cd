#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mordell/asympt.hpp"
#include "mordell/identities.hpp"

namespace mordell::io {

// 17-significant-digit formatting used by every machine-readable emitter so
// identical inputs produce byte-identical output.
std::string format_double(double v);
std::string format_complex(Complex v);  // a+bi / a-bi literal

// Complex literal parser for the CLI: "a", "bi", "a+bi", "a-bi" (no spaces).
std::optional<Complex> parse_complex(std::string_view text);

// Verification record emitters. JSON keys follow the fixed report schema;
// wall_ms is the one field that varies between runs.
std::string to_json(const identities::VerificationRecord& rec);
std::string to_pretty(const identities::VerificationRecord& rec);
std::string verify_csv_header();
std::string to_csv_row(const identities::VerificationRecord& rec);

// Table emitters.
std::string table_csv_header(bool with_golden);
std::string table_csv_row(const asympt::Table1Cell& cell);
std::string table_csv_row(const asympt::Table1Cell& cell,
                          const asympt::Table1Golden& golden, bool lhs_ok,
                          bool rhs_ok);
std::string table_json(const std::vector<asympt::Table1Cell>& cells);

}  // namespace mordell::io
