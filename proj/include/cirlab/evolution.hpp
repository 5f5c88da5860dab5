#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cirlab/configuration.hpp"
#include "cirlab/errors.hpp"
#include "cirlab/rule.hpp"

namespace cirlab {

// One synchronous update. The result is computed over the window
// [anchor-1, anchor+width] and stored in canonical (trimmed) form.
inline Configuration step(Rule rule, const Configuration& config) {
    if (rule.background_unstable()) throw BackgroundUnstable(rule.index());
    if (config.empty()) return Configuration{};
    int64_t lo = config.anchor() - 1;
    int64_t n = config.width() + 2;
    std::vector<uint8_t> out(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        int64_t p = lo + i;
        out[static_cast<size_t>(i)] =
            rule.apply(config.at(p - 1), config.at(p), config.at(p + 1));
    }
    return Configuration(std::move(out), lo);
}

// Rule applications needed to produce the row after `config`: one per
// window cell written (before trimming). Zero for the empty row.
inline int64_t applications_per_step(const Configuration& config) {
    return config.empty() ? 0 : config.width() + 2;
}

struct EvolutionTrace {
    Rule rule;
    std::vector<Configuration> rows;  // E_0 .. E_n
    int64_t applications = 0;         // cells written over all produced rows
    int64_t applications_before_final = 0;  // same, excluding the last row
    int64_t n = 0;                    // step count
    int64_t l = 0;                    // width of E_0
};

inline EvolutionTrace evolve(Rule rule, const Configuration& init, int64_t n) {
    if (n < 0) throw std::invalid_argument("step count must be >= 0");
    EvolutionTrace trace{rule, {}, 0, 0, n, init.width()};
    trace.rows.reserve(static_cast<size_t>(n) + 1);
    trace.rows.push_back(init);
    for (int64_t i = 0; i < n; ++i) {
        trace.applications_before_final = trace.applications;
        trace.applications += applications_per_step(trace.rows.back());
        trace.rows.push_back(step(rule, trace.rows.back()));
    }
    return trace;
}

// Streaming variant for long horizons: keeps only the current row and
// hands each produced row to `on_row(step_index, row)`. Returns the total
// application count.
inline int64_t evolve_stream(
    Rule rule, Configuration init, int64_t n,
    const std::function<void(int64_t, const Configuration&)>& on_row) {
    if (n < 0) throw std::invalid_argument("step count must be >= 0");
    int64_t applications = 0;
    if (on_row) on_row(0, init);
    Configuration row = std::move(init);
    for (int64_t i = 1; i <= n; ++i) {
        applications += applications_per_step(row);
        row = step(rule, row);
        if (on_row) on_row(i, row);
    }
    return applications;
}

// Closed-form application count for a non-collapsing evolution from an
// initial row of width l: n^2-1 when l=1, otherwise n^2+n(l-1)-1. An
// upper bound; instrumented counts agree within +-l.
inline int64_t applications_to_reach(int64_t n, int64_t l) {
    if (n < 1 || l < 1)
        throw std::invalid_argument("applications_to_reach needs n>=1, l>=1");
    if (l == 1) return n * n - 1;
    return n * n + n * (l - 1) - 1;
}

// --- renders ---------------------------------------------------------

namespace detail {
inline std::pair<int64_t, int64_t> row_extent(const std::vector<Configuration>& rows) {
    int64_t lo = 0, hi = 1;
    bool seen = false;
    for (const auto& r : rows) {
        if (r.empty()) continue;
        if (!seen) {
            lo = r.anchor();
            hi = r.end();
            seen = true;
        } else {
            lo = std::min(lo, r.anchor());
            hi = std::max(hi, r.end());
        }
    }
    if (!seen) return {0, 1};
    return {lo, hi};
}
}  // namespace detail

// One line per row, cells aligned by absolute position.
inline std::string render_ascii(const std::vector<Configuration>& rows,
                                char black = '\0') {
    auto [lo, hi] = detail::row_extent(rows);
    std::string out;
    for (const auto& r : rows) {
        for (int64_t p = lo; p < hi; ++p) {
            if (r.at(p)) {
                if (black) out.push_back(black);
                else out += "█";
            } else {
                out.push_back(' ');
            }
        }
        out.push_back('\n');
    }
    return out;
}

// Plain PBM (P1): 1 renders black.
inline std::string render_pbm(const std::vector<Configuration>& rows) {
    auto [lo, hi] = detail::row_extent(rows);
    int64_t w = hi - lo;
    std::string out = "P1\n" + std::to_string(w) + " " +
                      std::to_string(rows.size()) + "\n";
    for (const auto& r : rows) {
        for (int64_t p = lo; p < hi; ++p) {
            out.push_back(r.at(p) ? '1' : '0');
            out.push_back(p + 1 == hi ? '\n' : ' ');
        }
    }
    return out;
}

}  // namespace cirlab
