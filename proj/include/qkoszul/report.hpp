#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace qkoszul {

// Outcome of one verification sweep. One line per checked object:
// "OK <object>" or "FAIL <object> residue=<...>", plus a summary with counts.
struct Report {
    std::string title;
    std::vector<std::string> lines;
    std::size_t checked = 0;
    std::size_t failed = 0;

    explicit Report(std::string t = "") : title(std::move(t)) {}

    void ok(const std::string& object) {
        ++checked;
        lines.push_back("OK " + object);
    }

    void fail(const std::string& object, const std::string& residue) {
        ++checked;
        ++failed;
        lines.push_back("FAIL " + object + " residue=" + residue);
    }

    void note(const std::string& text) { lines.push_back(text); }

    bool passed() const { return failed == 0; }

    std::string first_failure() const {
        for (const auto& l : lines)
            if (l.rfind("FAIL ", 0) == 0) return l;
        return "";
    }

    std::string summary() const {
        return "summary: " + title + " checked=" + std::to_string(checked) +
               " failed=" + std::to_string(failed);
    }

    void print(std::ostream& os) const {
        os << "check: " << title << "\n";
        for (const auto& l : lines) os << l << "\n";
        os << summary() << "\n";
    }
};

}  // namespace qkoszul
