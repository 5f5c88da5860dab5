#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace cirlab {

// One of the 256 elementary cellular automaton update rules. Entry
// (l,c,r) of the truth table is bit number 4l+2c+r of the rule index.
class Rule {
public:
    constexpr explicit Rule(int index) : index_(check(index)) {}

    constexpr int index() const { return index_; }

    constexpr uint8_t apply(uint8_t l, uint8_t c, uint8_t r) const {
        return static_cast<uint8_t>((index_ >> ((l << 2) | (c << 1) | r)) & 1);
    }

    // True when table(0,0,0)=1: the quiescent background would flip on
    // every step and the evolution has no finite representation.
    constexpr bool background_unstable() const { return (index_ & 1) != 0; }

    constexpr std::array<uint8_t, 8> table() const {
        std::array<uint8_t, 8> t{};
        for (int i = 0; i < 8; ++i) t[i] = static_cast<uint8_t>((index_ >> i) & 1);
        return t;
    }

    friend constexpr bool operator==(Rule a, Rule b) { return a.index_ == b.index_; }

private:
    static constexpr int check(int index) {
        if (index < 0 || index > 255)
            throw std::out_of_range("ECA rule index must be in 0..255");
        return index;
    }

    int index_;
};

}  // namespace cirlab
