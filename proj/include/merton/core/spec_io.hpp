/**
 * @file spec_io.hpp
 * @brief JSON serialization of ProblemSpec (schema "merton-spec/1").
 *
 * Parsing is fail-closed: unknown keys, wrong types and missing required
 * fields raise SpecFormatError. Parsing checks structure only; call
 * validate() for the mathematical invariants. The schema is documented in
 * README.md.
 */

#pragma once

#include "merton/core/types.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace merton {

inline constexpr std::string_view kSpecSchema = "merton-spec/1";

class SpecFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ProblemSpec parse_spec(const std::string& json_text);
std::string spec_to_json(const ProblemSpec& spec, int indent = 2);

/// Reads and parses a spec file; throws std::ios_base::failure if it
/// cannot be read and SpecFormatError if it is malformed.
ProblemSpec load_spec(const std::filesystem::path& path);
void save_spec(const ProblemSpec& spec, const std::filesystem::path& path);

/// Replaces one extension block, given as the JSON text of that block
/// (the value that would appear under "extensions"/name). Names:
/// mortality, income, insurance, consumption_floor, spending_limit,
/// minimum_cash, max_min_consumption, time_varying.
void set_extension(ProblemSpec& spec, std::string_view name, const std::string& json_text);

}  // namespace merton
