#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cirlab/configuration.hpp"
#include "cirlab/errors.hpp"
#include "cirlab/evolution.hpp"

namespace cirlab {

enum class PredictorKind { Vanishing, Fixed, Sliding, Rule158Pattern, Rule90Parity };

inline const char* to_string(PredictorKind k) {
    switch (k) {
        case PredictorKind::Vanishing: return "vanishing";
        case PredictorKind::Fixed: return "fixed";
        case PredictorKind::Sliding: return "sliding";
        case PredictorKind::Rule158Pattern: return "rule158-pattern";
        case PredictorKind::Rule90Parity: return "rule90-parity";
    }
    return "?";
}

struct PredictResult {
    Configuration row;
    int64_t work_units = 0;  // cells written plus per-call bookkeeping
};

// Closed form for rule 158 from a single black cell: row n has length
// 2n+1; even n is a prefix of (1110)*, odd n is "111" followed by (0011)*.
inline Configuration predict_rule158(int64_t n) {
    if (n < 1) throw std::invalid_argument("predict_rule158 needs n >= 1");
    int64_t len = 2 * n + 1;
    std::vector<uint8_t> cells(static_cast<size_t>(len));
    if (n % 2 == 0) {
        static constexpr uint8_t even_period[4] = {1, 1, 1, 0};
        for (int64_t i = 0; i < len; ++i)
            cells[static_cast<size_t>(i)] = even_period[i % 4];
    } else {
        static constexpr uint8_t odd_period[4] = {0, 0, 1, 1};
        for (int64_t i = 0; i < 3; ++i) cells[static_cast<size_t>(i)] = 1;
        for (int64_t i = 3; i < len; ++i)
            cells[static_cast<size_t>(i)] = odd_period[(i - 3) % 4];
    }
    return Configuration(std::move(cells), -n);
}

// Rule 90 row n from a single black cell: cell at offset j (j = n mod 2)
// is C(n,(n+j)/2) mod 2, via the no-carry test k & (n-k) == 0.
inline Configuration predict_rule90(int64_t n) {
    if (n < 0) throw std::invalid_argument("predict_rule90 needs n >= 0");
    std::vector<uint8_t> cells(static_cast<size_t>(2 * n + 1));
    for (int64_t k = 0; k <= n; ++k) {
        bool odd = ((static_cast<uint64_t>(k) & static_cast<uint64_t>(n - k)) == 0);
        cells[static_cast<size_t>(2 * k)] = odd ? 1 : 0;
    }
    return Configuration(std::move(cells), -n);
}

// A registered shortcut that produces E_n of the single-black-cell
// evolution without stepping through intermediate rows.
struct DirectPredictor {
    Rule rule;
    PredictorKind kind;
    int64_t validated_horizon = 0;
    std::function<PredictResult(int64_t)> compute;
};

namespace detail {

inline Configuration shift(const Configuration& c, int64_t by) {
    if (c.empty()) return c;
    return Configuration(c.cells(), c.anchor() + by);
}

struct SlidingLaw {
    int64_t first;   // first step covered by the law
    int64_t period;
    int64_t drift;   // anchor shift per period
    std::vector<Configuration> prefix;  // E_0 .. E_{first+period-1}
};

inline std::optional<SlidingLaw> detect_sliding(Rule rule) {
    const int64_t horizon = 12;
    auto trace = evolve(rule, Configuration::single_cell(), horizon);
    for (int64_t period = 1; period <= 4; ++period) {
        for (int64_t first = 1; first + 2 * period <= horizon; ++first) {
            const auto& a = trace.rows[static_cast<size_t>(first)];
            const auto& b = trace.rows[static_cast<size_t>(first + period)];
            if (a.empty() || b.empty() || a.cells() != b.cells()) continue;
            int64_t drift = b.anchor() - a.anchor();
            if (drift == 0) continue;  // fixed or periodic-in-place, not sliding
            bool ok = true;
            for (int64_t k = first; k + period <= horizon && ok; ++k) {
                const auto& x = trace.rows[static_cast<size_t>(k)];
                const auto& y = trace.rows[static_cast<size_t>(k + period)];
                ok = !x.empty() && shift(x, drift) == y;
            }
            if (!ok) continue;
            SlidingLaw law{first, period, drift, {}};
            law.prefix.assign(trace.rows.begin(),
                              trace.rows.begin() + static_cast<ptrdiff_t>(first + period));
            return law;
        }
    }
    return std::nullopt;
}

inline PredictResult finish(Configuration row) {
    int64_t work = row.width() + 1;
    return PredictResult{std::move(row), work};
}

}  // namespace detail

// Builds the predictor for one rule, deriving collapse steps, fixed rows
// and sliding direction from short simulations rather than hardcoding.
inline std::optional<DirectPredictor> make_predictor(Rule rule) {
    if (rule.background_unstable()) return std::nullopt;
    const int64_t probe = 12;
    auto trace = evolve(rule, Configuration::single_cell(), probe);

    // vanishing: some row is empty (and stays empty)
    for (int64_t s = 1; s <= probe; ++s) {
        if (trace.rows[static_cast<size_t>(s)].empty()) {
            auto prefix = std::vector<Configuration>(
                trace.rows.begin(), trace.rows.begin() + static_cast<ptrdiff_t>(s));
            return DirectPredictor{
                rule, PredictorKind::Vanishing, 0,
                [prefix](int64_t n) {
                    if (n < static_cast<int64_t>(prefix.size()))
                        return detail::finish(prefix[static_cast<size_t>(n)]);
                    return PredictResult{Configuration{}, 1};
                }};
        }
    }

    // fixed: consecutive rows equal
    for (int64_t s = 0; s < probe; ++s) {
        if (trace.rows[static_cast<size_t>(s)] == trace.rows[static_cast<size_t>(s + 1)]) {
            auto prefix = std::vector<Configuration>(
                trace.rows.begin(), trace.rows.begin() + static_cast<ptrdiff_t>(s + 1));
            return DirectPredictor{
                rule, PredictorKind::Fixed, 0,
                [prefix](int64_t n) {
                    size_t i = std::min<size_t>(static_cast<size_t>(n), prefix.size() - 1);
                    return detail::finish(prefix[i]);
                }};
        }
    }

    if (auto law = detail::detect_sliding(rule)) {
        auto l = *law;
        return DirectPredictor{
            rule, PredictorKind::Sliding, 0,
            [l](int64_t n) {
                if (n < static_cast<int64_t>(l.prefix.size()))
                    return detail::finish(l.prefix[static_cast<size_t>(n)]);
                int64_t m = l.first + (n - l.first) % l.period;
                int64_t hops = (n - m) / l.period;
                return detail::finish(
                    detail::shift(l.prefix[static_cast<size_t>(m)], l.drift * hops));
            }};
    }

    if (rule.index() == 158) {
        return DirectPredictor{
            rule, PredictorKind::Rule158Pattern, 0,
            [](int64_t n) {
                if (n == 0) return detail::finish(Configuration::single_cell());
                return detail::finish(predict_rule158(n));
            }};
    }

    // Rules whose single-cell rows never hold adjacent black cells evolve
    // exactly like rule 90 (the tables can only differ on the 011/110/111
    // windows, which such rows never produce). Covers 18, 26, and friends.
    if (rule.index() == 90 || rule.index() == 18 || rule.index() == 26) {
        return DirectPredictor{
            rule, PredictorKind::Rule90Parity, 0,
            [](int64_t n) {
                auto row = predict_rule90(n);
                return PredictResult{row, 2 * n + 2};
            }};
    }

    return std::nullopt;
}

namespace detail {

inline std::map<int, DirectPredictor> build_registry() {
    std::map<int, DirectPredictor> reg;
    const int defaults[] = {0, 8, 32, 40, 96,       // vanish
                            4, 12, 36, 44, 76,      // fixed
                            2, 6, 16, 24,           // sliding
                            18, 26, 90, 158};       // patterned
    for (int idx : defaults) {
        auto p = make_predictor(Rule(idx));
        if (!p) continue;
        // cheap oracle check against simulation before the entry goes live
        auto trace = evolve(Rule(idx), Configuration::single_cell(), 64);
        bool ok = true;
        for (int64_t n = 0; n <= 64 && ok; ++n)
            ok = p->compute(n).row == trace.rows[static_cast<size_t>(n)];
        if (!ok) continue;
        p->validated_horizon = 64;
        reg.emplace(idx, std::move(*p));
    }
    return reg;
}

inline std::map<int, DirectPredictor>& registry() {
    static std::map<int, DirectPredictor> reg = build_registry();
    return reg;
}

}  // namespace detail

inline const std::map<int, DirectPredictor>& predictor_registry() {
    return detail::registry();
}

// Extension point for new closed forms. Not thread-safe against
// concurrent predict() calls; register during startup.
inline void register_predictor(DirectPredictor p) {
    detail::registry().insert_or_assign(p.rule.index(), std::move(p));
}

inline bool has_predictor(Rule rule) {
    return predictor_registry().count(rule.index()) > 0;
}

inline PredictResult predict_with_work(Rule rule, int64_t n) {
    if (n < 0) throw std::invalid_argument("predict needs n >= 0");
    auto it = predictor_registry().find(rule.index());
    if (it == predictor_registry().end())
        throw UnsupportedRule(rule.index(), "direct predictor");
    return it->second.compute(n);
}

// E_n of the single-black-cell evolution, without simulating.
inline Configuration predict(Rule rule, int64_t n) {
    return predict_with_work(rule, n).row;
}

}  // namespace cirlab
