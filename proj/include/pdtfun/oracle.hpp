#ifndef PDTFUN_ORACLE_HPP
#define PDTFUN_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "pdtfun/function.hpp"

namespace pdtfun {

// A language given as a membership predicate. Answers must be deterministic;
// machine-backed oracles memoize behind a lock, so sharing one oracle across
// threads is safe.
struct Oracle {
    std::string name;
    Alphabet alphabet;
    std::function<bool(const Str&)> membership;
};

Oracle oracle_all(Alphabet alphabet);
Oracle oracle_none(Alphabet alphabet);
// Words equal to their own reversal.
Oracle oracle_palindromes(Alphabet alphabet);
// Words w#w with exactly one # separator.
Oracle oracle_dup(Alphabet alphabet);

Oracle complement_oracle(const Oracle& A);

// The language accepted by spec, memoized. Words with symbols outside the
// machine's input alphabet are simply not members (no error), so the
// complement of such an oracle stays total. The second form runs the machine
// itself against an inner oracle, for nested query machines.
Oracle language_from_machine(const MachineSpec& spec, const EngineLimits& limits = {});
Oracle language_from_machine(const MachineSpec& spec, Oracle inner,
                             const EngineLimits& limits = {});

// One query word per path, accumulated from query-emit symbols and judged
// once at acceptance: the path's output survives iff the word is in A.
OutputSet eval_many_one(const MachineSpec& spec, const Oracle& A, const Str& x,
                        const EngineLimits& limits = {});

// Adaptive queries through the query/yes/no states; each answer blanks the
// query tape, rewinds its head, and costs one step.
OutputSet eval_turing(const MachineSpec& spec, const Oracle& A, const Str& x,
                      const EngineLimits& limits = {});

// Function computed by a query machine against a fixed oracle, dispatched on
// the machine's mode.
FunctionHandle relativized_fn(const MachineSpec& spec, Oracle A,
                              const EngineLimits& limits = {});

// Level-k nesting: base runs against the complement of chain[0]'s language,
// chain[0] against the complement of chain[1]'s, and so on; the last chain
// machine runs unrelativized. k = 1 takes an empty chain and means plain
// enumeration. Depth is capped at 4.
FunctionHandle build_level(std::size_t k, const MachineSpec& base,
                           const std::vector<MachineSpec>& oracle_chain,
                           const EngineLimits& limits = {});

} // namespace pdtfun

#endif
