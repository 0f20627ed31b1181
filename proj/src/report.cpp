#include "girard/report.hpp"

#include <sstream>
#include <stdexcept>

namespace girard {

std::string report_to_json(const RunReport& report) {
    OrderedJson j;
    j["command"] = report.command;
    j["params"] = report.params;
    j["trials"] = report.trials;
    j["failures"] = OrderedJson::array();
    for (const auto& f : report.failures) j["failures"].push_back(f);
    j["elapsed_ms"] = report.elapsed_ms;
    j["seed"] = report.seed ? OrderedJson(*report.seed) : OrderedJson(nullptr);
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

namespace {

const OrderedJson& field(const OrderedJson& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("report is missing \"") + name + "\"");
    return *it;
}

}  // namespace

RunReport parse_report(std::string_view text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
    if (j.size() != 7) throw std::invalid_argument("report must have exactly seven fields");

    RunReport r;
    const auto& command = field(j, "command");
    const auto& params = field(j, "params");
    const auto& trials = field(j, "trials");
    const auto& failures = field(j, "failures");
    const auto& elapsed = field(j, "elapsed_ms");
    const auto& seed = field(j, "seed");
    const auto& notes = field(j, "notes");
    if (!command.is_string() || !params.is_object() || !trials.is_number_unsigned() || !failures.is_array() ||
        !elapsed.is_number_integer() || !(seed.is_null() || seed.is_number_unsigned()) || !notes.is_array()) {
        throw std::invalid_argument("report field has the wrong type");
    }
    r.command = command.get<std::string>();
    r.params = params;
    r.trials = trials.get<std::uint64_t>();
    for (const auto& f : failures) r.failures.push_back(f);
    r.elapsed_ms = elapsed.get<std::int64_t>();
    if (!seed.is_null()) r.seed = seed.get<std::uint64_t>();
    for (const auto& n : notes) {
        if (!n.is_string()) throw std::invalid_argument("notes must be strings");
        r.notes.push_back(n.get<std::string>());
    }
    return r;
}

std::string report_to_text(const RunReport& report) {
    std::ostringstream os;
    os << report.command << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    os << "  params: " << report.params.dump() << "\n";
    os << "  trials: " << report.trials << ", failures: " << report.failures.size() << "\n";
    if (report.seed) os << "  seed: " << *report.seed << "\n";
    for (const auto& f : report.failures) os << "  failure: " << f.dump() << "\n";
    for (const auto& n : report.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace girard
