#pragma once

#include <string>
#include <vector>

#include "cirlab/configuration.hpp"
#include "cirlab/errors.hpp"
#include "cirlab/evolution.hpp"
#include "cirlab/machine.hpp"
#include "cirlab/rule.hpp"
#include "cirlab/tape_codec.hpp"
#include "cirlab/tm_builder.hpp"

namespace cirlab {

// Builds a 2-tape machine that simulates one ECA rule. Input is
// encode_input(n, E_0) on tape 1; tape 2 starts blank.
//
// Tape 1 is the work tape. The counter stays at its input position and is
// decremented in place once per row; the current row lives to its right,
// drifting two cells rightward per step, so the head trip between counter
// and row costs O(i) in step i. Tape 2 is the archive: the machine
// appends "01" + row (symbols doubled) for E_0 and for every produced row,
// plus a final "01", so at halt tape 2 decodes to the full evolution.
//
// Per row the work head makes one sweep over the current row, computing
// the successor in place with a three-cell window held in the state and
// echoing every produced cell to the archive. Window cells beyond the
// stored row read as background zeros. Counter scan, decrement and the
// return walk add O(log n + i) bookkeeping steps per row, keeping the
// total within a constant factor of the sum of row lengths.
inline TmSpec build_eca_machine_2tape(Rule rule) {
    if (rule.background_unstable()) throw BackgroundUnstable(rule.index());

    TmBuilder b(2, {"0", "1", "_"});
    auto bit = [](int v) { return std::string(1, static_cast<char>('0' + v)); };

    // setup: erase leading "01" (archive lead-in "01" written meanwhile)
    b.t("su1", {"0", "_"}, "su2", {"_", "0"}, "RR");
    b.t("su2", {"1", "_"}, "cn1", {"_", "1"}, "RR");
    // setup: cross the counter, then erase the separator behind it
    b.t("cn1", {"0", "_"}, "cn0", {"0", "_"}, "RS");
    b.t("cn1", {"1", "_"}, "cn1b", {"1", "_"}, "RS");
    b.t("cn1b", {"1", "_"}, "cn1", {"1", "_"}, "RS");
    b.t("cn0", {"0", "_"}, "cn1", {"0", "_"}, "RS");
    b.t("cn0", {"1", "_"}, "cse", {"_", "_"}, "LS");
    b.t("cse", {"0", "_"}, "css", {"_", "_"}, "RS");
    b.t("css", {"_", "_"}, "cp1", {"_", "_"}, "RS");
    // setup: archive E_0, erasing the trailing separator when it appears
    b.t("cp1", {"1", "_"}, "cp1b", {"1", "1"}, "RR");
    b.t("cp1b", {"1", "_"}, "cp1", {"1", "1"}, "RR");
    b.t("cp1", {"0", "_"}, "cp0", {"0", "_"}, "RS");
    b.t("cp0", {"0", "_"}, "cp0c", {"0", "0"}, "SR");
    b.t("cp0c", {"0", "_"}, "cp1", {"0", "0"}, "RR");
    b.t("cp0", {"1", "_"}, "cte", {"_", "_"}, "LS");
    b.t("cte", {"0", "_"}, "rr", {"_", "_"}, "LS");

    // return walk: row, gap, counter, then one step right to its start
    b.t("rr", {"0", "_"}, "rr", {"0", "_"}, "LS");
    b.t("rr", {"1", "_"}, "rr", {"1", "_"}, "LS");
    b.t("rr", {"_", "_"}, "rg", {"_", "_"}, "LS");
    b.t("rg", {"_", "_"}, "rg", {"_", "_"}, "LS");
    b.t("rg", {"0", "_"}, "rc", {"0", "_"}, "LS");
    b.t("rg", {"1", "_"}, "rc", {"1", "_"}, "LS");
    b.t("rc", {"0", "_"}, "rc", {"0", "_"}, "LS");
    b.t("rc", {"1", "_"}, "rc", {"1", "_"}, "LS");
    b.t("rc", {"_", "_"}, "zs0", {"_", "_"}, "RS");

    // counter scan: all zeros means every row is written
    b.t("zs0", {"0", "_"}, "zs0", {"0", "_"}, "RS");
    b.t("zs0", {"1", "_"}, "zs1", {"1", "_"}, "RS");
    b.t("zs0", {"_", "_"}, "cl1", {"_", "0"}, "LR");
    b.t("zs1", {"0", "_"}, "zs1", {"0", "_"}, "RS");
    b.t("zs1", {"1", "_"}, "zs1", {"1", "_"}, "RS");
    b.t("zs1", {"_", "_"}, "db2", {"_", "_"}, "LS");

    // decrement, least significant digit first (digits doubled)
    b.t("db2", {"0", "_"}, "db1z", {"1", "_"}, "LS");
    b.t("db1z", {"0", "_"}, "db2", {"1", "_"}, "LS");
    b.t("db2", {"1", "_"}, "db1o", {"0", "_"}, "LS");
    b.t("db1o", {"1", "_"}, "wc", {"0", "_"}, "RS");
    b.t("wc", {"0", "_"}, "wc", {"0", "_"}, "RS");
    b.t("wc", {"1", "_"}, "wc", {"1", "_"}, "RS");
    b.t("wc", {"_", "_"}, "gs", {"_", "_"}, "RS");
    b.t("gs", {"_", "_"}, "gs", {"_", "_"}, "RS");

    // the sweep: pair 0 is erased while the archive separator goes out,
    // pair j then reads cell j and rewrites it with output cell j-1
    for (int r = 0; r <= 1; ++r) {
        b.t("gs", {bit(r), "_"}, "r0b_" + bit(r), {"_", "0"}, "RR");
        b.t("r0b_" + bit(r), {bit(r), "_"}, "p1_00" + bit(r), {"_", "1"}, "RR");
    }
    for (int a = 0; a <= 1; ++a)
        for (int c = 0; c <= 1; ++c)
            for (int d = 0; d <= 1; ++d) {
                std::string w = bit(a) + bit(c) + bit(d);
                std::string m = bit(rule.apply(static_cast<uint8_t>(a),
                                               static_cast<uint8_t>(c),
                                               static_cast<uint8_t>(d)));
                for (int r = 0; r <= 1; ++r) {
                    b.t("p1_" + w, {bit(r), "_"}, "p2_" + w + "_" + bit(r), {m, m}, "RR");
                    b.t("p2_" + w + "_" + bit(r), {bit(r), "_"},
                        "p1_" + bit(c) + bit(d) + bit(r), {m, m}, "RR");
                }
                // beyond the stored row: three more pairs over background zeros
                b.t("p1_" + w, {"_", "_"}, "o2_" + w + "_3", {m, m}, "RR");
                for (int k = 1; k <= 3; ++k) {
                    b.t("o1_" + w + "_" + std::to_string(k), {"_", "_"},
                        "o2_" + w + "_" + std::to_string(k), {m, m}, "RR");
                    std::string next = k > 1 ? "o1_" + bit(c) + bit(d) + "0_" +
                                                   std::to_string(k - 1)
                                             : "re";
                    b.t("o2_" + w + "_" + std::to_string(k), {"_", "_"}, next, {m, m},
                        "RR");
                }
            }
    b.t("re", {"_", "_"}, "rr", {"_", "_"}, "LS");

    // halt path: erase the zero counter and the scratch row, close the
    // archive with the trailing separator
    b.t("cl1", {"0", "_"}, "cl2", {"_", "1"}, "LR");
    b.t("cl2", {"0", "_"}, "cl2", {"_", "_"}, "LS");
    b.t("cl2", {"_", "_"}, "cl3", {"_", "_"}, "RS");
    b.t("cl3", {"_", "_"}, "cl3", {"_", "_"}, "RS");
    b.t("cl3", {"0", "_"}, "cl4", {"_", "_"}, "RS");
    b.t("cl3", {"1", "_"}, "cl4", {"_", "_"}, "RS");
    b.t("cl4", {"0", "_"}, "cl4", {"_", "_"}, "RS");
    b.t("cl4", {"1", "_"}, "cl4", {"_", "_"}, "RS");
    b.t("cl4", {"_", "_"}, "halt", {"_", "_"}, "SS");

    return b.finish("su1", "halt");
}

// Runs the 2-tape machine for the rule on (n, init) and decodes the
// archive tape back into anchored configurations.
struct EcaMachineRun {
    MachineRun run;
    std::vector<Configuration> rows;
};

inline EcaMachineRun run_eca_machine(Rule rule, const Configuration& init,
                                     uint64_t n, RunOptions opt = {}) {
    auto spec = build_eca_machine_2tape(rule);
    auto input = encode_input(n, init);
    auto result = run(spec, input, opt);
    EcaMachineRun out{std::move(result), {}};
    if (out.run.halted)
        out.rows = decode_tape_configs(out.run.tapes[1].text(), init.anchor(), -1);
    return out;
}

// Computes the rule-158 row E_n directly from its closed form: on input
// encode_input(n, "1") it decrements the counter n times, appending two
// pattern cells per tick and one final cell, so no intermediate row ever
// appears on a tape. O(n log n) steps.
inline TmSpec build_rule158_direct_machine() {
    TmBuilder b(2, {"0", "1", "_"});

    // phase alphabet: pe<k> = prefix "111" of the odd template,
    // c<k> = position in the cyclic part ("0011" odd, "1110" even)
    struct Phase {
        std::string name;
        char ch;
        std::string next;
    };
    std::vector<Phase> phases = {
        {"oP0", '1', "oP1"}, {"oP1", '1', "oP2"}, {"oP2", '1', "oC0"},
        {"oC0", '0', "oC1"}, {"oC1", '0', "oC2"}, {"oC2", '1', "oC3"},
        {"oC3", '1', "oC0"}, {"eC0", '1', "eC1"}, {"eC1", '1', "eC2"},
        {"eC2", '1', "eC3"}, {"eC3", '0', "eC0"},
    };
    auto phase_of = [&](const std::string& name) -> const Phase& {
        for (const auto& p : phases)
            if (p.name == name) return p;
        throw InvalidSpec("unknown phase " + name);
    };

    // skip "01", then scan the counter remembering the last digit (the
    // parity of n picks the template), erasing the separator behind it
    b.t("su1", {"0", "_"}, "su2", {"_", "0"}, "RR");
    b.t("su2", {"1", "_"}, "sc1_x", {"_", "1"}, "RR");
    for (std::string pv : {"x", "0", "1"}) {
        b.t("sc1_" + pv, {"1", "_"}, "sc1b_" + pv, {"1", "_"}, "RS");
        b.t("sc1b_" + pv, {"1", "_"}, "sc1_1", {"1", "_"}, "RS");
        b.t("sc1_" + pv, {"0", "_"}, "sc0_" + pv, {"0", "_"}, "RS");
        b.t("sc0_" + pv, {"0", "_"}, "sc1_0", {"0", "_"}, "RS");
    }
    b.t("sc0_0", {"1", "_"}, "cse_e", {"_", "_"}, "LS");  // n even
    b.t("sc0_1", {"1", "_"}, "cse_o", {"_", "_"}, "LS");  // n odd
    b.t("cse_e", {"0", "_"}, "bk_eC0", {"_", "_"}, "LS");
    b.t("cse_o", {"0", "_"}, "bk_oP0", {"_", "_"}, "LS");

    for (const auto& p : phases) {
        const std::string ph = p.name;
        // walk back to the counter start
        b.t("bk_" + ph, {"0", "_"}, "bk_" + ph, {"0", "_"}, "LS");
        b.t("bk_" + ph, {"1", "_"}, "bk_" + ph, {"1", "_"}, "LS");
        b.t("bk_" + ph, {"_", "_"}, "zs0_" + ph, {"_", "_"}, "RS");
        // zero test
        b.t("zs0_" + ph, {"0", "_"}, "zs0_" + ph, {"0", "_"}, "RS");
        b.t("zs0_" + ph, {"1", "_"}, "zs1_" + ph, {"1", "_"}, "RS");
        b.t("zs1_" + ph, {"0", "_"}, "zs1_" + ph, {"0", "_"}, "RS");
        b.t("zs1_" + ph, {"1", "_"}, "zs1_" + ph, {"1", "_"}, "RS");
        b.t("zs1_" + ph, {"_", "_"}, "db2_" + ph, {"_", "_"}, "LS");
        // decrement from the least significant digit
        b.t("db2_" + ph, {"0", "_"}, "db1z_" + ph, {"1", "_"}, "LS");
        b.t("db1z_" + ph, {"0", "_"}, "db2_" + ph, {"1", "_"}, "LS");
        b.t("db2_" + ph, {"1", "_"}, "db1o_" + ph, {"0", "_"}, "LS");
        b.t("db1o_" + ph, {"1", "_"}, "bk2_" + ph, {"0", "_"}, "LS");
        b.t("bk2_" + ph, {"0", "_"}, "bk2_" + ph, {"0", "_"}, "LS");
        b.t("bk2_" + ph, {"1", "_"}, "bk2_" + ph, {"1", "_"}, "LS");
        b.t("bk2_" + ph, {"_", "_"}, "w1_" + ph, {"_", "_"}, "RS");
        // tick: append two pattern cells (doubled) to the output tape
        const Phase& p2 = phase_of(p.next);
        std::string c1(1, p.ch), c2(1, p2.ch);
        b.t("w1_" + ph, {"*", "_"}, "w2_" + ph, {"=", c1}, "SR");
        b.t("w2_" + ph, {"*", "_"}, "w3_" + ph, {"=", c1}, "SR");
        b.t("w3_" + ph, {"*", "_"}, "w4_" + ph, {"=", c2}, "SR");
        b.t("w4_" + ph, {"*", "_"}, "zs0_" + p2.next, {"=", c2}, "SR");
        // counter exhausted: final cell plus the trailing separator
        b.t("zs0_" + ph, {"_", "_"}, "f1_" + ph, {"_", c1}, "SR");
        b.t("f1_" + ph, {"*", "_"}, "f2_" + ph, {"=", c1}, "SR");
        b.t("f2_" + ph, {"*", "_"}, "f3_" + ph, {"=", "0"}, "SR");
        b.t("f3_" + ph, {"*", "_"}, "halt", {"=", "1"}, "SR");
    }

    return b.finish("su1", "halt");
}

// Needle for "row appears on a tape": the row's doubled encoding with
// both separators.
inline std::string row_needle(const Configuration& row) {
    if (row.empty()) throw MalformedTape("empty row has no needle");
    return encode_rows({row.cells()});
}

}  // namespace cirlab
