#pragma once

#include <string>
#include <vector>

namespace twc {

// Line-oriented check report; deterministic ordering, diffable output.
struct Report {
    struct Entry {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Entry> entries;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        entries.push_back({name, ok, detail});
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& e : entries)
            if (!e.ok) ++n;
        return n;
    }
    std::string text() const {
        std::string out;
        for (const auto& e : entries) {
            out += "check " + e.name + " = " + (e.ok ? "pass" : "FAIL");
            if (!e.detail.empty()) out += "  # " + e.detail;
            out += "\n";
        }
        out += "checks.total = " + std::to_string(entries.size()) + "\n";
        out += "checks.failed = " + std::to_string(fail_count()) + "\n";
        return out;
    }
    std::string json() const {
        std::string out = "{\n  \"checks\": [\n";
        for (size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            out += "    {\"name\": \"" + e.name + "\", \"pass\": " + (e.ok ? "true" : "false");
            if (!e.detail.empty()) out += ", \"detail\": \"" + e.detail + "\"";
            out += "}";
            if (i + 1 < entries.size()) out += ",";
            out += "\n";
        }
        out += "  ],\n  \"failed\": " + std::to_string(fail_count()) + "\n}\n";
        return out;
    }
};

}  // namespace twc
