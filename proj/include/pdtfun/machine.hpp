#ifndef PDTFUN_MACHINE_HPP
#define PDTFUN_MACHINE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdtfun/strings.hpp"

namespace pdtfun {

// A set of output strings. Empty means the function is undefined at the
// evaluated input; a defined value always has at least one element.
using OutputSet = std::set<Str>;

// Step budget a*n + b over input length n. Every computation path must halt
// within the budget; the engine refuses machines that cannot.
struct LinearBound {
    std::uint64_t slope = 0;
    std::uint64_t intercept = 0;

    std::uint64_t eval(std::uint64_t n) const { return slope * n + intercept; }
    bool valid() const { return slope + intercept >= 1; }

    // Bound of "this applied after inner": a1*(a2*n + b2) + b1.
    LinearBound after(const LinearBound& inner) const {
        return {slope * inner.slope, slope * inner.intercept + intercept};
    }
    LinearBound join(const LinearBound& other) const {
        return {std::max(slope, other.slope), std::max(intercept, other.intercept)};
    }
    bool operator==(const LinearBound&) const = default;
};

// One nondeterministic move. read is empty for a spontaneous move and may be
// an endmarker; push replaces the popped top symbol, leftmost symbol on top.
// query_emit appends to the query tape of an oracle machine.
struct Transition {
    std::string from;
    std::optional<Symbol> read;
    Symbol top = 0;
    std::string to;
    Str push;
    std::optional<Symbol> emit;
    std::optional<Symbol> query_emit;

    bool operator==(const Transition&) const = default;
};

// Inner states wired to the oracle under adaptive querying: entering `query`
// hands the query word to the oracle, which blanks the query tape and resumes
// control at `yes` or `no`.
struct QueryStates {
    std::string query;
    std::string yes;
    std::string no;

    bool operator==(const QueryStates&) const = default;
};

enum class OracleMode { none, many_one, turing };

// A one-way nondeterministic pushdown transducer: finite control, one-way
// input head over the endmarked input, a stack seeded with the bottom symbol,
// and a write-only output tape. Machines with a query alphabet additionally
// write a query tape; with qstates they query an oracle adaptively.
struct MachineSpec {
    std::string name;
    Alphabet input;
    Alphabet stack;
    Alphabet output;
    std::optional<Alphabet> query;
    std::string start;
    Symbol bottom = 0;
    std::vector<std::string> accepting;
    std::vector<std::string> rejecting;
    LinearBound step_bound;
    std::vector<Transition> transitions;
    std::optional<QueryStates> qstates;

    OracleMode mode() const {
        if (qstates) return OracleMode::turing;
        if (query) return OracleMode::many_one;
        return OracleMode::none;
    }
    // States are declared by mention; the set is collected, not listed.
    std::set<std::string> state_set() const;
    bool is_halting(const std::string& state) const;

    bool operator==(const MachineSpec&) const = default;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> notes;
    bool ok() const { return errors.empty(); }
    std::string describe() const;
};

ValidationReport validate_spec(const MachineSpec& spec);
void require_valid(const MachineSpec& spec);  // throws ValidationError

// True when no transition ever changes the stack, i.e. the machine is a
// plain finite transducer that happens to carry an unused stack.
bool is_stack_free(const MachineSpec& spec);

// Copy with the oracle's yes/no continuations exchanged.
MachineSpec swap_yes_no(const MachineSpec& spec);

// Lift a plain machine to a query machine that writes the empty query word
// on every path (no transition gains a query emission).
MachineSpec as_many_one(const MachineSpec& spec, Alphabet query_alphabet);

} // namespace pdtfun

#endif
