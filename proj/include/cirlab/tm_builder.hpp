#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cirlab/errors.hpp"
#include "cirlab/machine.hpp"

namespace cirlab {

// Incremental construction of transition tables. Reads may use the
// wildcard "*" (any symbol); writes may use "=" (echo the symbol read on
// that tape). Explicit entries win over wildcard expansions; earlier
// wildcard rows win over later ones.
class TmBuilder {
public:
    TmBuilder(int tapes, std::vector<std::string> alphabet)
        : tapes_(tapes), alphabet_(std::move(alphabet)) {}

    void t(const std::string& state, std::vector<std::string> read,
           const std::string& next, std::vector<std::string> write,
           const std::string& moves) {
        if (static_cast<int>(read.size()) != tapes_ ||
            static_cast<int>(write.size()) != tapes_ ||
            static_cast<int>(moves.size()) != tapes_)
            throw InvalidSpec("builder row arity mismatch in state " + state);
        states_.insert(state);
        states_.insert(next);
        expand(state, read, next, write, moves, 0);
    }

    // Same transition applied to every read tuple not yet covered.
    void any(const std::string& state, const std::string& next,
             const std::string& moves) {
        std::vector<std::string> stars(static_cast<size_t>(tapes_), "*");
        std::vector<std::string> echo(static_cast<size_t>(tapes_), "=");
        t(state, stars, next, echo, moves);
    }

    TmSpec finish(const std::string& start, const std::string& halt) {
        states_.insert(start);
        states_.insert(halt);
        TmSpec spec;
        spec.tapes = tapes_;
        spec.alphabet = alphabet_;
        spec.states.assign(states_.begin(), states_.end());
        spec.start = start;
        spec.halt = halt;
        for (auto& [key, rhs] : rows_)
            spec.transitions.push_back(
                {key.first, key.second, std::get<0>(rhs), std::get<1>(rhs), std::get<2>(rhs)});
        make_total(spec);
        validate(spec);
        return spec;
    }

private:
    void expand(const std::string& state, std::vector<std::string>& read,
                const std::string& next, const std::vector<std::string>& write,
                const std::string& moves, size_t tape) {
        if (tape == read.size()) {
            auto key = std::make_pair(state, read);
            if (rows_.count(key)) return;  // first definition wins
            std::vector<std::string> w = write;
            for (size_t i = 0; i < w.size(); ++i)
                if (w[i] == "=") w[i] = read[i];
            rows_.emplace(std::move(key), std::make_tuple(next, std::move(w), moves));
            return;
        }
        if (read[tape] == "*") {
            for (const auto& sym : alphabet_) {
                read[tape] = sym;
                expand(state, read, next, write, moves, tape + 1);
            }
            read[tape] = "*";
        } else {
            expand(state, read, next, write, moves, tape + 1);
        }
    }

    int tapes_;
    std::vector<std::string> alphabet_;
    std::set<std::string> states_;
    std::map<std::pair<std::string, std::vector<std::string>>,
             std::tuple<std::string, std::vector<std::string>, std::string>>
        rows_;
};

}  // namespace cirlab
