#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cirlab {

// A finite row of cells on an infinite zero background. `anchor` is the
// absolute position of the first stored cell. Canonical form: the first
// and last stored cells are 1, or the row is empty (anchor 0).
class Configuration {
public:
    Configuration() = default;

    Configuration(std::vector<uint8_t> cells, int64_t anchor) {
        assign(std::move(cells), anchor);
    }

    // "1011..." at the given anchor.
    static Configuration from_string(const std::string& bits, int64_t anchor = 0) {
        std::vector<uint8_t> cells;
        cells.reserve(bits.size());
        for (char ch : bits) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("configuration bits must be 0/1");
            cells.push_back(static_cast<uint8_t>(ch - '0'));
        }
        return Configuration(std::move(cells), anchor);
    }

    static Configuration single_cell() { return from_string("1", 0); }

    bool empty() const { return cells_.empty(); }
    int64_t width() const { return static_cast<int64_t>(cells_.size()); }
    int64_t anchor() const { return anchor_; }
    int64_t end() const { return anchor_ + width(); }  // one past the last cell
    const std::vector<uint8_t>& cells() const { return cells_; }

    uint8_t at(int64_t pos) const {
        if (pos < anchor_ || pos >= end()) return 0;
        return cells_[static_cast<size_t>(pos - anchor_)];
    }

    int64_t popcount() const {
        int64_t n = 0;
        for (uint8_t c : cells_) n += c;
        return n;
    }

    std::string bits() const {
        std::string s;
        s.reserve(cells_.size());
        for (uint8_t c : cells_) s.push_back(static_cast<char>('0' + c));
        return s;
    }

    // Row text format: `anchor:bitstring`, e.g. "-2:10001". Empty row: "0:".
    std::string to_text() const {
        return std::to_string(anchor_) + ":" + bits();
    }

    static Configuration parse_text(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("row text must be anchor:bits");
        int64_t anchor = std::stoll(text.substr(0, colon));
        return from_string(text.substr(colon + 1), anchor);
    }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.anchor_ == b.anchor_ && a.cells_ == b.cells_;
    }

private:
    void assign(std::vector<uint8_t> cells, int64_t anchor) {
        size_t first = 0;
        while (first < cells.size() && cells[first] == 0) ++first;
        size_t last = cells.size();
        while (last > first && cells[last - 1] == 0) --last;
        if (first == last) {
            cells_.clear();
            anchor_ = 0;
            return;
        }
        anchor_ = anchor + static_cast<int64_t>(first);
        cells_.assign(cells.begin() + static_cast<ptrdiff_t>(first),
                      cells.begin() + static_cast<ptrdiff_t>(last));
    }

    std::vector<uint8_t> cells_;
    int64_t anchor_ = 0;
};

// Number of absolute positions where the two rows differ.
inline int64_t diff_count(const Configuration& a, const Configuration& b) {
    if (a.empty() && b.empty()) return 0;
    int64_t lo = std::min(a.empty() ? b.anchor() : a.anchor(),
                          b.empty() ? a.anchor() : b.anchor());
    int64_t hi = std::max(a.empty() ? b.end() : a.end(),
                          b.empty() ? a.end() : b.end());
    int64_t n = 0;
    for (int64_t p = lo; p < hi; ++p) n += (a.at(p) != b.at(p)) ? 1 : 0;
    return n;
}

}  // namespace cirlab
