#pragma once

#include <stdexcept>
#include <string>

namespace cirlab {

// A rule whose (0,0,0) entry is 1 would flip the infinite zero background
// on every step; such rules are rejected everywhere a finite evolution is
// needed.
struct BackgroundUnstable : std::runtime_error {
    explicit BackgroundUnstable(int rule_index)
        : std::runtime_error("rule " + std::to_string(rule_index) +
                             " has an unstable background (table(0,0,0)=1)"),
          rule(rule_index) {}
    int rule;
};

struct UnsupportedRule : std::runtime_error {
    explicit UnsupportedRule(int rule_index, const std::string& what_for)
        : std::runtime_error("rule " + std::to_string(rule_index) +
                             ": no " + what_for + " registered"),
          rule(rule_index) {}
    int rule;
};

struct MalformedTape : std::runtime_error {
    explicit MalformedTape(const std::string& why)
        : std::runtime_error("malformed tape: " + why) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& why)
        : std::runtime_error("invalid machine spec: " + why) {}
};

struct SnapshotsMissing : std::runtime_error {
    explicit SnapshotsMissing(const std::string& why)
        : std::runtime_error("snapshots missing: " + why) {}
};

}  // namespace cirlab
