#ifndef PDTFUN_MACHINE_IO_HPP
#define PDTFUN_MACHINE_IO_HPP

#include <string>

#include "pdtfun/machine.hpp"

namespace pdtfun {

// Line-oriented machine files. Each line is "key: tokens..."; lines whose
// first character is '#' and blank lines are skipped. Keys:
//
//   machine: name
//   input:   symbol tokens
//   stack:   symbol tokens
//   output:  symbol tokens
//   query:   symbol tokens              (only on oracle machines)
//   start:   state
//   bottom:  symbol
//   accept:  states
//   reject:  states                     (optional)
//   bound:   slope intercept
//   qstates: query yes no               (only on answer-branching machines)
//   trans:   from read top -> to push emit [query-emit]
//
// A symbol token is one UTF-8 scalar or a pair "(a,b)". In a trans line the
// read, push, emit, and query-emit fields may be the placeholder λ: no read,
// empty push, no emit, no query emit. ¢ and $ are only meaningful in the
// read field. The "->" separator is optional on input and "->" is reserved
// (not a state name). The machine, input, stack, output, start, bottom,
// accept, and bound keys are required, each at most once.
MachineSpec parse_machine(const std::string& text);
std::string serialize_machine(const MachineSpec& spec);

// load_machine reads and parses path; by default it also rejects specs that
// fail structural validation.
MachineSpec load_machine(const std::string& path, bool validate = true);
void save_machine(const MachineSpec& spec, const std::string& path);

} // namespace pdtfun

#endif
