#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace sba {

enum class Verdict { Pass, Fail, Inconclusive, Skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

struct CheckRecord {
    std::string name;
    std::string anchor;   // what the check is about
    Verdict verdict = Verdict::Pass;
    std::string witness;  // counterexample tuple for failures
    std::string detail;
    int samples = 0;
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::vector<std::string> lines;  // free-form output printed before the verdicts

    CheckRecord& add(CheckRecord r) {
        checks.push_back(std::move(r));
        return checks.back();
    }
    void say(std::string s) { lines.push_back(std::move(s)); }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.verdict == Verdict::Fail || c.verdict == Verdict::Inconclusive) return false;
        return true;
    }
    int exit_code() const { return all_pass() ? 0 : 1; }

    void print_text(std::ostream& os) const {
        os << "# " << command << " (seed " << seed << ")\n";
        for (const auto& l : lines) os << l << "\n";
        for (const auto& c : checks) {
            std::string v = to_string(c.verdict);
            for (auto& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            os << v << "  " << c.name;
            if (c.samples > 0) os << " [" << c.samples << " samples]";
            if (!c.detail.empty()) os << ": " << c.detail;
            if (!c.witness.empty()) os << " (witness " << c.witness << ")";
            os << "\n";
        }
        os << (all_pass() ? "all checks passed" : "some checks failed") << "\n";
    }

    void print_json(std::ostream& os) const {
        for (const auto& l : lines) {
            nlohmann::json j{{"command", command}, {"seed", seed}, {"output", l}};
            os << j.dump() << "\n";
        }
        for (const auto& c : checks) {
            nlohmann::json j{{"command", command}, {"seed", seed},     {"check", c.name},
                             {"anchor", c.anchor}, {"verdict", to_string(c.verdict)}};
            if (!c.witness.empty()) j["witness"] = c.witness;
            if (!c.detail.empty()) j["detail"] = c.detail;
            if (c.samples > 0) j["samples"] = c.samples;
            os << j.dump() << "\n";
        }
        nlohmann::json s{{"command", command}, {"seed", seed}, {"summary", all_pass() ? "pass" : "fail"},
                         {"exit", exit_code()}};
        os << s.dump() << "\n";
    }
};

}  // namespace sba
