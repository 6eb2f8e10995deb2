#ifndef PDTFUN_RUN_HPP
#define PDTFUN_RUN_HPP

#include <optional>
#include <utility>

#include "pdtfun/machine.hpp"

namespace pdtfun {

struct Oracle;  // pdtfun/oracle.hpp

// One instantaneous description. input_position indexes the endmarked tape
// (0 is the left endmarker; n+1 the right endmarker; n+2 means fully read).
// The stack is written top-first.
struct Configuration {
    std::string state;
    std::size_t input_position = 0;
    Str stack;
    Str output_so_far;
    Str query_so_far;
    std::size_t steps = 0;
};

std::string render_configuration(const Configuration& c);
std::string render_prefix(const std::vector<Configuration>& prefix);

struct EngineLimits {
    std::size_t max_configs = 10'000'000;
};

// A computation path that still has an applicable move when the step budget
// runs out. Carries the offending path so callers can show it.
class TerminationError : public Error {
public:
    TerminationError(const std::string& msg, std::vector<Configuration> prefix)
        : Error(msg), prefix_(std::move(prefix)) {}
    const std::vector<Configuration>& prefix() const { return prefix_; }

private:
    std::vector<Configuration> prefix_;
};

// One oracle answer as the engine saw it, with the query tape state right
// after the answer (it must always be blank with the head rewound).
struct QueryEvent {
    Str word;
    bool answer = false;
    std::size_t tape_len_after = 0;
    std::size_t head_after = 0;
};

// Everything one exhaustive run produces. `accepted` holds (output, query
// word) pairs reached in accepting states, duplicates collapsed.
struct RunResult {
    std::set<std::pair<Str, Str>> accepted;
    bool termination_ok = true;
    std::vector<Configuration> violating_prefix;
    std::size_t configs_explored = 0;
    std::vector<QueryEvent> query_events;

    OutputSet outputs() const;
    bool accepted_any() const { return !accepted.empty(); }
};

// Exhaustively explore every computation path on the endmarked input. Stuck
// paths reject; paths that would outlive the step budget make the result a
// termination violation (reported, not thrown). Oracle may be null for
// machines that never enter their query state.
RunResult run_machine(const MachineSpec& spec, const Str& input,
                      const Oracle* oracle = nullptr, const EngineLimits& limits = {},
                      bool record_queries = false);

// The valid outputs of the machine on the input: strings written along
// accepting paths. Throws TerminationError when some path overruns.
OutputSet enumerate_outputs(const MachineSpec& spec, const Str& input,
                            const EngineLimits& limits = {});

// Whether some accepting path exists within the budget.
bool accepts(const MachineSpec& spec, const Str& input, const EngineLimits& limits = {});

struct TerminationCheck {
    bool ok = true;
    std::vector<Configuration> violating_prefix;
};

TerminationCheck check_termination(const MachineSpec& spec, const Str& input,
                                   const EngineLimits& limits = {});

struct SingleValuedCheck {
    bool single_valued = true;
    std::optional<Str> witness;
    OutputSet outputs;
};

// At most one output per listed input?
SingleValuedCheck is_single_valued(const MachineSpec& spec, const std::vector<Str>& inputs,
                                   const EngineLimits& limits = {});

} // namespace pdtfun

#endif
