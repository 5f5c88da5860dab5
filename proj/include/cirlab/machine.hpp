#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cirlab/errors.hpp"

namespace cirlab {

inline constexpr const char* kBlank = "_";

// One row of the transition table: (state, read symbols) ->
// (next state, written symbols, head moves).
struct Transition {
    std::string state;
    std::vector<std::string> read;
    std::string next;
    std::vector<std::string> write;
    std::string moves;  // one of L/R/S per tape

    friend bool operator==(const Transition&, const Transition&) = default;
};

// A k-tape deterministic Turing machine over an explicit alphabet.
// The blank symbol is "_" and must be part of the alphabet, as must
// "0" and "1".
struct TmSpec {
    int tapes = 1;
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::string start;
    std::string halt;
    std::vector<Transition> transitions;

    friend bool operator==(const TmSpec&, const TmSpec&) = default;
};

namespace detail {

template <typename C, typename T>
inline bool contains(const C& c, const T& v) {
    return std::find(c.begin(), c.end(), v) != c.end();
}

}  // namespace detail

// Structural validation; with `require_total` also checks that every
// non-halt state has a transition for every read tuple.
inline void validate(const TmSpec& spec, bool require_total = true) {
    if (spec.tapes < 1) throw InvalidSpec("tape count must be >= 1");
    for (const char* sym : {"0", "1", kBlank})
        if (!detail::contains(spec.alphabet, std::string(sym)))
            throw InvalidSpec(std::string("alphabet must contain ") + sym);
    if (spec.states.empty()) throw InvalidSpec("no states");
    if (!detail::contains(spec.states, spec.start)) throw InvalidSpec("unknown start state");
    if (!detail::contains(spec.states, spec.halt)) throw InvalidSpec("unknown halt state");
    {
        std::vector<std::string> sorted_states = spec.states;
        std::sort(sorted_states.begin(), sorted_states.end());
        if (std::adjacent_find(sorted_states.begin(), sorted_states.end()) !=
            sorted_states.end())
            throw InvalidSpec("duplicate state name");
    }

    std::map<std::pair<std::string, std::vector<std::string>>, int> seen;
    for (const auto& t : spec.transitions) {
        if (!detail::contains(spec.states, t.state) || !detail::contains(spec.states, t.next))
            throw InvalidSpec("transition references unknown state");
        if (t.state == spec.halt) throw InvalidSpec("halt state has outgoing transition");
        if (static_cast<int>(t.read.size()) != spec.tapes ||
            static_cast<int>(t.write.size()) != spec.tapes ||
            static_cast<int>(t.moves.size()) != spec.tapes)
            throw InvalidSpec("transition arity does not match tape count");
        for (const auto& s : t.read)
            if (!detail::contains(spec.alphabet, s))
                throw InvalidSpec("transition reads unknown symbol " + s);
        for (const auto& s : t.write)
            if (!detail::contains(spec.alphabet, s))
                throw InvalidSpec("transition writes unknown symbol " + s);
        for (char m : t.moves)
            if (m != 'L' && m != 'R' && m != 'S')
                throw InvalidSpec("head move must be L, R or S");
        if (++seen[{t.state, t.read}] > 1)
            throw InvalidSpec("duplicate transition for state " + t.state);
    }

    if (require_total) {
        size_t combos = 1;
        for (int i = 0; i < spec.tapes; ++i) combos *= spec.alphabet.size();
        std::map<std::string, size_t> per_state;
        for (const auto& t : spec.transitions) ++per_state[t.state];
        for (const auto& q : spec.states) {
            if (q == spec.halt) continue;
            if (per_state[q] != combos)
                throw InvalidSpec("transition table not total in state " + q);
        }
    }
}

// Fills every uncovered (state, read tuple) with a halt-in-place entry,
// so partial builder output satisfies the totality contract. Unexpected
// tape content then halts the machine instead of wedging it.
inline void make_total(TmSpec& spec) {
    std::map<std::pair<std::string, std::vector<std::string>>, int> seen;
    for (const auto& t : spec.transitions) seen[{t.state, t.read}] = 1;
    std::vector<std::string> tuple(static_cast<size_t>(spec.tapes));
    size_t combos = 1;
    for (int i = 0; i < spec.tapes; ++i) combos *= spec.alphabet.size();
    for (const auto& q : spec.states) {
        if (q == spec.halt) continue;
        for (size_t ix = 0; ix < combos; ++ix) {
            size_t rem = ix;
            for (int tp = 0; tp < spec.tapes; ++tp) {
                tuple[static_cast<size_t>(tp)] = spec.alphabet[rem % spec.alphabet.size()];
                rem /= spec.alphabet.size();
            }
            if (seen.count({q, tuple})) continue;
            spec.transitions.push_back(
                {q, tuple, spec.halt, tuple, std::string(static_cast<size_t>(spec.tapes), 'S')});
        }
    }
}

// --- execution --------------------------------------------------------

namespace detail {

class Tape {
public:
    explicit Tape(uint16_t blank_id) : blank_(blank_id) {}

    uint16_t read(int64_t pos) const {
        if (pos >= 0)
            return pos < static_cast<int64_t>(right_.size())
                       ? right_[static_cast<size_t>(pos)]
                       : blank_;
        int64_t i = -pos - 1;
        return i < static_cast<int64_t>(left_.size()) ? left_[static_cast<size_t>(i)]
                                                      : blank_;
    }

    void write(int64_t pos, uint16_t v) {
        if (pos >= 0) {
            if (pos >= static_cast<int64_t>(right_.size()))
                right_.resize(static_cast<size_t>(pos) + 1, blank_);
            right_[static_cast<size_t>(pos)] = v;
        } else {
            int64_t i = -pos - 1;
            if (i >= static_cast<int64_t>(left_.size()))
                left_.resize(static_cast<size_t>(i) + 1, blank_);
            left_[static_cast<size_t>(i)] = v;
        }
    }

    // [lo, hi) covering all non-blank cells; empty extent -> lo == hi == 0
    std::pair<int64_t, int64_t> extent() const {
        int64_t lo = 0, hi = 0;
        for (int64_t i = -static_cast<int64_t>(left_.size());
             i < static_cast<int64_t>(right_.size()); ++i) {
            if (read(i) != blank_) {
                lo = i;
                break;
            }
        }
        for (int64_t i = static_cast<int64_t>(right_.size()) - 1;
             i >= -static_cast<int64_t>(left_.size()); --i) {
            if (read(i) != blank_) {
                hi = i + 1;
                if (lo > i) lo = i;
                break;
            }
        }
        if (hi <= lo) return {0, 0};
        return {lo, hi};
    }

private:
    std::vector<uint16_t> right_, left_;
    uint16_t blank_;
};

}  // namespace detail

// Compiled form: symbols and states interned, transitions in a dense
// table when small enough, else a hash map.
class CompiledMachine {
public:
    explicit CompiledMachine(TmSpec spec, bool check_total = true) : spec_(std::move(spec)) {
        validate(spec_, check_total);
        for (const auto& s : spec_.alphabet) sym_id_.emplace(s, static_cast<uint16_t>(sym_id_.size()));
        for (const auto& q : spec_.states) state_id_.emplace(q, static_cast<uint32_t>(state_id_.size()));
        blank_ = sym_id_.at(kBlank);
        start_ = state_id_.at(spec_.start);
        halt_ = state_id_.at(spec_.halt);

        nsym_ = spec_.alphabet.size();
        size_t combos = 1;
        for (int i = 0; i < spec_.tapes; ++i) combos *= nsym_;
        combos_ = combos;
        size_t total = spec_.states.size() * combos;
        dense_ = total <= (1u << 23);
        if (dense_) table_.assign(total, -1);

        for (const auto& t : spec_.transitions) {
            Entry e;
            e.next = state_id_.at(t.next);
            for (const auto& w : t.write) e.write.push_back(sym_id_.at(w));
            for (char m : t.moves) e.move.push_back(m == 'L' ? -1 : (m == 'R' ? 1 : 0));
            uint64_t key = key_of(state_id_.at(t.state), t.read);
            if (dense_) table_[key] = static_cast<int32_t>(entries_.size());
            else map_[key] = static_cast<int32_t>(entries_.size());
            entries_.push_back(std::move(e));
        }
    }

    const TmSpec& spec() const { return spec_; }
    uint16_t blank_id() const { return blank_; }
    uint16_t symbol_id(const std::string& s) const {
        auto it = sym_id_.find(s);
        if (it == sym_id_.end()) throw InvalidSpec("symbol not in alphabet: " + s);
        return it->second;
    }
    const std::string& symbol_name(uint16_t id) const { return spec_.alphabet[id]; }
    uint32_t start_id() const { return start_; }
    uint32_t halt_id() const { return halt_; }
    const std::string& state_name(uint32_t id) const { return spec_.states[id]; }

    struct Entry {
        uint32_t next = 0;
        std::vector<uint16_t> write;
        std::vector<int8_t> move;
    };

    const Entry* find(uint32_t state, const std::vector<uint16_t>& reads) const {
        uint64_t key = static_cast<uint64_t>(state) * combos_;
        uint64_t mul = 1;
        for (uint16_t r : reads) {
            key += r * mul;
            mul *= nsym_;
        }
        int32_t ix;
        if (dense_) {
            ix = table_[key];
        } else {
            auto it = map_.find(key);
            ix = it == map_.end() ? -1 : it->second;
        }
        return ix < 0 ? nullptr : &entries_[static_cast<size_t>(ix)];
    }

private:
    uint64_t key_of(uint32_t state, const std::vector<std::string>& reads) const {
        uint64_t key = static_cast<uint64_t>(state) * combos_;
        uint64_t mul = 1;
        for (const auto& r : reads) {
            key += sym_id_.at(r) * mul;
            mul *= nsym_;
        }
        return key;
    }

    TmSpec spec_;
    std::unordered_map<std::string, uint16_t> sym_id_;
    std::unordered_map<std::string, uint32_t> state_id_;
    uint16_t blank_ = 0;
    uint32_t start_ = 0, halt_ = 0;
    size_t nsym_ = 0, combos_ = 0;
    bool dense_ = true;
    std::vector<int32_t> table_;
    std::unordered_map<uint64_t, int32_t> map_;
    std::vector<Entry> entries_;
};

struct TapeDump {
    int64_t lo = 0;                     // absolute position of content[0]
    std::vector<std::string> content;   // symbols over the non-blank extent
    int64_t head = 0;

    // Single-char alphabets collapse to a plain string, blanks as '_'.
    std::string text() const {
        bool single = true;
        for (const auto& s : content)
            if (s.size() != 1) single = false;
        std::string out;
        for (size_t i = 0; i < content.size(); ++i) {
            if (!single && i) out.push_back(' ');
            out += content[i];
        }
        return out;
    }

    friend bool operator==(const TapeDump&, const TapeDump&) = default;
};

struct Snapshot {
    int64_t step = 0;
    std::vector<std::string> tapes;  // text() of each tape at that step
};

struct MachineRun {
    bool halted = false;
    int64_t steps = 0;
    std::string final_state;
    std::vector<TapeDump> tapes;
    std::vector<Snapshot> snapshots;
};

struct RunOptions {
    int64_t budget = std::numeric_limits<int64_t>::max();
    int64_t snapshot_every = 0;  // 0 = none
};

namespace detail {

inline TapeDump dump_tape(const Tape& tape, const CompiledMachine& m, int64_t head) {
    auto [lo, hi] = tape.extent();
    TapeDump d;
    d.lo = lo;
    d.head = head;
    for (int64_t p = lo; p < hi; ++p) d.content.push_back(m.symbol_name(tape.read(p)));
    return d;
}

}  // namespace detail

// Executes until halt or budget exhaustion. Initial head positions are 0
// on every tape; `inputs[i]` is written on tape i starting at cell 0.
inline MachineRun run(const CompiledMachine& m,
                      const std::vector<std::vector<std::string>>& inputs,
                      RunOptions opt = {}) {
    const auto& spec = m.spec();
    if (static_cast<int>(inputs.size()) > spec.tapes)
        throw InvalidSpec("more inputs than tapes");

    std::vector<detail::Tape> tapes(static_cast<size_t>(spec.tapes),
                                    detail::Tape(m.blank_id()));
    for (size_t i = 0; i < inputs.size(); ++i)
        for (size_t j = 0; j < inputs[i].size(); ++j)
            tapes[i].write(static_cast<int64_t>(j), m.symbol_id(inputs[i][j]));

    std::vector<int64_t> heads(static_cast<size_t>(spec.tapes), 0);
    uint32_t state = m.start_id();
    int64_t steps = 0;

    MachineRun out;
    auto snap = [&](int64_t at) {
        Snapshot s;
        s.step = at;
        for (size_t i = 0; i < tapes.size(); ++i)
            s.tapes.push_back(detail::dump_tape(tapes[i], m, heads[i]).text());
        out.snapshots.push_back(std::move(s));
    };

    std::vector<uint16_t> reads(static_cast<size_t>(spec.tapes));
    while (state != m.halt_id() && steps < opt.budget) {
        if (opt.snapshot_every > 0 && steps % opt.snapshot_every == 0) snap(steps);
        for (size_t i = 0; i < tapes.size(); ++i) reads[i] = tapes[i].read(heads[i]);
        const auto* e = m.find(state, reads);
        if (!e)
            throw InvalidSpec("no transition from state " + m.state_name(state));
        for (size_t i = 0; i < tapes.size(); ++i) {
            tapes[i].write(heads[i], e->write[i]);
            heads[i] += e->move[i];
        }
        state = e->next;
        ++steps;
    }

    out.halted = (state == m.halt_id());
    out.steps = steps;
    out.final_state = m.state_name(state);
    for (size_t i = 0; i < tapes.size(); ++i)
        out.tapes.push_back(detail::dump_tape(tapes[i], m, heads[i]));
    if (opt.snapshot_every > 0) snap(steps);
    return out;
}

inline MachineRun run(const TmSpec& spec,
                      const std::vector<std::vector<std::string>>& inputs,
                      RunOptions opt = {}) {
    return run(CompiledMachine(spec), inputs, opt);
}

// Convenience for single-char alphabets: one string per tape.
inline std::vector<std::vector<std::string>> tape_input(
    const std::vector<std::string>& raw) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : raw) {
        std::vector<std::string> syms;
        syms.reserve(s.size());
        for (char c : s) syms.emplace_back(1, c);
        out.push_back(std::move(syms));
    }
    return out;
}

inline MachineRun run(const TmSpec& spec, const std::string& tape1,
                      RunOptions opt = {}) {
    return run(spec, tape_input({tape1}), opt);
}

// One line per tape: `tape[i] head=<pos>: <symbols>`
inline std::string dump(const MachineRun& r) {
    std::string out;
    for (size_t i = 0; i < r.tapes.size(); ++i) {
        out += "tape[" + std::to_string(i) + "] head=" +
               std::to_string(r.tapes[i].head) + ": " + r.tapes[i].text() + "\n";
    }
    return out;
}

}  // namespace cirlab
