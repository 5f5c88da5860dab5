#pragma once

#include <string>
#include <vector>

#include "cirlab/machine.hpp"
#include "cirlab/tm_builder.hpp"

namespace cirlab::machines {

inline const std::vector<std::string> kBits01{"0", "1", "_"};

// Decides whether tape 1 holds a palindrome over {0,1} by matching and
// erasing the outermost symbols, zigzagging across the remainder. Halts
// with "1" on the tape for a palindrome, "0" otherwise. Theta(l^2) steps.
inline TmSpec palindrome_1tape() {
    TmBuilder b(1, kBits01);
    for (std::string x : {"0", "1"}) {
        std::string other = x == "0" ? "1" : "0";
        b.t("start", {x}, "seek" + x, {"_"}, "R");
        b.t("seek" + x, {"0"}, "seek" + x, {"0"}, "R");
        b.t("seek" + x, {"1"}, "seek" + x, {"1"}, "R");
        b.t("seek" + x, {"_"}, "atend" + x, {"_"}, "L");
        b.t("atend" + x, {x}, "rewind", {"_"}, "L");
        b.t("atend" + x, {"_"}, "halt", {"1"}, "S");  // odd center matched
        // mismatch: leave "0" as the verdict, erase what is left of it
        b.t("atend" + x, {other}, "rej_left", {"0"}, "L");
    }
    b.t("start", {"_"}, "halt", {"1"}, "S");
    b.t("rewind", {"0"}, "rewind", {"0"}, "L");
    b.t("rewind", {"1"}, "rewind", {"1"}, "L");
    b.t("rewind", {"_"}, "start", {"_"}, "R");
    b.t("rej_left", {"0"}, "rej_left", {"_"}, "L");
    b.t("rej_left", {"1"}, "rej_left", {"_"}, "L");
    b.t("rej_left", {"_"}, "halt", {"_"}, "S");
    return b.finish("start", "halt");
}

// Same decision problem with a second tape: copy the input, then compare
// it forward against the copy backward. Theta(l) steps.
inline TmSpec palindrome_2tape() {
    TmBuilder b(2, kBits01);
    for (std::string x : {"0", "1"}) {
        std::string other = x == "0" ? "1" : "0";
        b.t("copy", {x, "_"}, "copy", {x, x}, "RR");
        b.t("rewind", {x, "*"}, "rewind", {x, "="}, "LS");
        b.t("compare", {x, x}, "compare", {x, "_"}, "RL");
        b.t("compare", {x, other}, "rej2", {x, "_"}, "SL");
    }
    b.t("copy", {"_", "_"}, "rewind", {"_", "_"}, "LL");
    b.t("rewind", {"_", "*"}, "compare", {"_", "="}, "RS");
    b.t("compare", {"_", "_"}, "acc_step", {"_", "_"}, "LS");
    for (std::string x : {"0", "1"}) {
        b.t("acc_step", {x, "_"}, "acc_step", {"_", "_"}, "LS");
        b.t("rej2", {"*", x}, "rej2", {"=", "_"}, "SL");
        // erase left of the mismatch, return, drop the verdict, erase right
        b.t("rej_left", {x, "_"}, "rej_left", {"_", "_"}, "LS");
        b.t("rej_find", {x, "_"}, "rej_erase", {"0", "_"}, "RS");
        b.t("rej_erase", {x, "_"}, "rej_erase", {"_", "_"}, "RS");
    }
    b.t("acc_step", {"_", "_"}, "halt", {"1", "_"}, "SS");
    b.t("rej2", {"*", "_"}, "rej_left", {"=", "_"}, "LS");
    b.t("rej_left", {"_", "_"}, "rej_find", {"_", "_"}, "RS");
    b.t("rej_find", {"_", "_"}, "rej_find", {"_", "_"}, "RS");
    b.t("rej_erase", {"_", "_"}, "halt", {"_", "_"}, "SS");
    return b.finish("copy", "halt");
}

// Halts immediately with its input untouched: output equals input in
// zero steps. Serves as the in-place extractor for witness checks.
inline TmSpec identity_extractor() {
    TmSpec spec;
    spec.tapes = 1;
    spec.alphabet = kBits01;
    spec.states = {"done"};
    spec.start = "done";
    spec.halt = "done";
    validate(spec);
    return spec;
}

}  // namespace cirlab::machines
