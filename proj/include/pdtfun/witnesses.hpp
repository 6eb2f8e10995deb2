#ifndef PDTFUN_WITNESSES_HPP
#define PDTFUN_WITNESSES_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdtfun/oracle.hpp"

namespace pdtfun {

// One catalog row: a construction (machine, composition, or operator
// expression) paired with an independently coded brute-force evaluator of
// the same function. The two must agree exactly on every input over
// enum_alphabet up to test_len.
struct WitnessEntry {
    std::string name;
    std::string description;
    Alphabet enum_alphabet;
    std::size_t test_len = 6;
    FunctionHandle construction;
    FunctionHandle brute;
    std::vector<std::string> machine_files;
};

std::vector<WitnessEntry> catalog(const EngineLimits& limits = {});

struct WitnessVerdict {
    bool ok = true;
    Str mismatch_input;
    std::string detail;
};

// Exact set equality of construction vs brute on every input up to max_len.
WitnessVerdict verify_entry(const WitnessEntry& entry, std::size_t max_len);

// Every machine shipped under machines/, keyed by its file name. The files
// are generated from these builders, so loading a file must reproduce the
// builder's spec exactly.
std::vector<std::pair<std::string, MachineSpec>> machine_corpus();

// The machines behind the catalog, also shipped as files under machines/.
MachineSpec make_pal_sub();        // palindromic substrings of a binary input
MachineSpec make_eta_pal();        // "1" on palindromes, undefined elsewhere
MachineSpec make_chi_pal();        // "1" on palindromes, "0" elsewhere
MachineSpec make_eta_all();        // "1" on every binary input
MachineSpec make_reject_all();     // no accepting state at all
MachineSpec make_l_pal();          // acceptor of x#reverse(x)
MachineSpec make_track_eq();       // acceptor of tracks (x#y, y-padded) with x = y
MachineSpec make_strip_suffix();   // x#y -> y for binary x, y; undefined otherwise
MachineSpec make_dup_emit_rev();   // x -> x natural reverse(x); non-binary x -> empty
MachineSpec make_rev_tail();       // u natural v -> u natural reverse(v); else empty
MachineSpec make_copy_query();     // emits the input as both output and query word
MachineSpec make_neq_pair();       // acceptor of u#v with binary u != v
MachineSpec make_square_base();    // guesses x, queries block equality, outputs x
MachineSpec make_rev_pairs();      // block-pair matches x_i y_i, plus the empty string

// Brute-force evaluators, shared by the catalog and by tests that need the
// raw sets without a machine in the loop.
OutputSet brute_pal_sub(const Str& w);
bool brute_is_palindrome(const Str& w);
bool brute_dup_hash(const Str& w);   // w = x#x with binary x
bool brute_l_pal(const Str& w);      // w = x#reverse(x) with binary x
OutputSet brute_f_dup(const Str& w); // {w natural w} on binary w, else {the empty string}
bool brute_dup_nat(const Str& w);    // w = x natural x with binary x
OutputSet brute_square_sub(const Str& w);
OutputSet brute_rev_pairs(const Str& w);

} // namespace pdtfun

#endif
