#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cirlab/configuration.hpp"
#include "cirlab/errors.hpp"

namespace cirlab {

// Wire format for evolutions on a 2-symbol tape: every payload bit is
// doubled ("00"/"11"), so the pair "01" can never occur inside a payload
// and is reserved as the separator. A full tape reads
//   01 <row1 doubled> 01 <row2 doubled> 01 ... 01
using EcaTapeString = std::string;

using BitRow = std::vector<uint8_t>;

namespace detail {
inline void append_doubled(EcaTapeString& out, const BitRow& row) {
    for (uint8_t b : row) {
        char c = b ? '1' : '0';
        out.push_back(c);
        out.push_back(c);
    }
}
}  // namespace detail

// Rows joined by "01" separators, leading and trailing included. Rows may
// contain zeros anywhere but must be nonempty (the format has no empty
// payloads).
inline EcaTapeString encode_rows(const std::vector<BitRow>& rows) {
    if (rows.empty()) throw MalformedTape("no rows to encode");
    EcaTapeString out = "01";
    for (const auto& row : rows) {
        if (row.empty()) throw MalformedTape("empty row payload");
        detail::append_doubled(out, row);
        out += "01";
    }
    return out;
}

inline EcaTapeString encode_evolution(const std::vector<BitRow>& rows) {
    return encode_rows(rows);
}

inline EcaTapeString encode_evolution(const std::vector<Configuration>& rows) {
    std::vector<BitRow> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) bits.push_back(r.cells());
    return encode_rows(bits);
}

// Exact inverse of encode_rows.
inline std::vector<BitRow> decode_tape(const EcaTapeString& t) {
    if (t.size() < 4 || t.size() % 2 != 0)
        throw MalformedTape("length must be even and >= 4");
    size_t n = t.size();
    for (char c : t)
        if (c != '0' && c != '1') throw MalformedTape("symbols must be 0/1");
    if (t[0] != '0' || t[1] != '1') throw MalformedTape("missing leading separator");

    std::vector<BitRow> rows;
    BitRow current;
    bool in_payload = true;
    for (size_t i = 2; i < n; i += 2) {
        char a = t[i], b = t[i + 1];
        if (a == '0' && b == '1') {
            if (current.empty()) throw MalformedTape("empty row payload");
            rows.push_back(std::move(current));
            current.clear();
            in_payload = (i + 2 < n);
        } else if (a == b) {
            current.push_back(a == '1' ? 1 : 0);
        } else {
            throw MalformedTape("pair 10 cannot appear");
        }
    }
    if (in_payload || !current.empty())
        throw MalformedTape("missing trailing separator");
    if (rows.empty()) throw MalformedTape("no rows");
    return rows;
}

inline std::vector<Configuration> decode_tape_configs(const EcaTapeString& t,
                                                      int64_t first_anchor = 0,
                                                      int64_t anchor_step = 0) {
    auto raw = decode_tape(t);
    std::vector<Configuration> out;
    out.reserve(raw.size());
    int64_t anchor = first_anchor;
    for (auto& row : raw) {
        out.emplace_back(std::move(row), anchor);
        anchor += anchor_step;
    }
    return out;
}

namespace detail {
inline BitRow binary_msb_first(uint64_t n) {
    BitRow bits;
    for (int i = 63; i >= 0; --i)
        if ((n >> i) & 1 || !bits.empty()) bits.push_back((n >> i) & 1);
    if (bits.empty()) bits.push_back(0);
    return bits;
}
}  // namespace detail

// Machine input: "01" <n in binary, figures doubled> "01" <initial row
// doubled> "01".
inline EcaTapeString encode_input(uint64_t n, const Configuration& init) {
    if (n < 1) throw std::invalid_argument("encode_input needs n >= 1");
    if (init.empty()) throw MalformedTape("empty initial configuration");
    return encode_rows({detail::binary_msb_first(n), init.cells()});
}

// Inverse of encode_input: (n, initial row bits).
inline std::pair<uint64_t, BitRow> decode_input(const EcaTapeString& t) {
    auto rows = decode_tape(t);
    if (rows.size() != 2) throw MalformedTape("input must hold counter and row");
    uint64_t n = 0;
    for (uint8_t b : rows[0]) n = (n << 1) | b;
    return {n, rows[1]};
}

}  // namespace cirlab
