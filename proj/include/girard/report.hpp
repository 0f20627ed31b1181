#pragma once

// Machine-readable run reports for the command-line front end.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace girard {

using OrderedJson = nlohmann::ordered_json;

struct RunReport {
    std::string command;
    OrderedJson params = OrderedJson::object();
    std::uint64_t trials = 0;
    std::vector<OrderedJson> failures;
    std::int64_t elapsed_ms = 0;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Fixed key order, two-space indent, trailing newline.
std::string report_to_json(const RunReport& report);

/// Inverse of report_to_json. Throws std::invalid_argument on anything that
/// does not match the schema.
RunReport parse_report(std::string_view text);

/// Human-readable summary.
std::string report_to_text(const RunReport& report);

}  // namespace girard
