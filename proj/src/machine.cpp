#include "pdtfun/machine.hpp"

#include <algorithm>
#include <sstream>

namespace pdtfun {

std::set<std::string> MachineSpec::state_set() const {
    std::set<std::string> states;
    states.insert(start);
    states.insert(accepting.begin(), accepting.end());
    states.insert(rejecting.begin(), rejecting.end());
    if (qstates) {
        states.insert(qstates->query);
        states.insert(qstates->yes);
        states.insert(qstates->no);
    }
    for (const Transition& t : transitions) {
        states.insert(t.from);
        states.insert(t.to);
    }
    return states;
}

bool MachineSpec::is_halting(const std::string& state) const {
    return std::find(accepting.begin(), accepting.end(), state) != accepting.end() ||
           std::find(rejecting.begin(), rejecting.end(), state) != rejecting.end();
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    for (const std::string& e : errors) os << "error: " << e << "\n";
    for (const std::string& n : notes) os << "note: " << n << "\n";
    return os.str();
}

ValidationReport validate_spec(const MachineSpec& spec) {
    ValidationReport rep;
    const auto err = [&](const std::string& msg) { rep.errors.push_back(msg); };

    if (spec.name.empty()) err("machine has no name");
    if (spec.start.empty()) err("machine has no start state");
    if (!spec.stack.contains(spec.bottom))
        err("bottom symbol '" + symbol_utf8(spec.bottom) + "' not in the stack alphabet");
    if (!spec.step_bound.valid()) err("step bound must satisfy a + b >= 1");

    for (const std::string& a : spec.accepting)
        if (std::find(spec.rejecting.begin(), spec.rejecting.end(), a) !=
            spec.rejecting.end())
            err("state '" + a + "' is both accepting and rejecting");

    if (spec.qstates) {
        const QueryStates& qs = *spec.qstates;
        if (!spec.query) err("adaptive query states declared without a query alphabet");
        if (qs.query == qs.yes || qs.query == qs.no || qs.yes == qs.no)
            err("query, yes and no states must be distinct");
        if (spec.is_halting(qs.query))
            err("query state '" + qs.query + "' must not be a halting state");
    }

    for (std::size_t i = 0; i < spec.transitions.size(); ++i) {
        const Transition& t = spec.transitions[i];
        const std::string where = "transition " + std::to_string(i + 1);
        if (spec.is_halting(t.from))
            err(where + " leaves halting state '" + t.from + "'");
        if (spec.qstates && t.from == spec.qstates->query)
            err(where + " leaves the query state (control there belongs to the oracle)");
        if (t.read && *t.read != kLeftEnd && *t.read != kRightEnd &&
            !spec.input.contains(*t.read))
            err(where + " reads '" + symbol_utf8(*t.read) + "' outside the input alphabet");
        if (!spec.stack.contains(t.top))
            err(where + " pops '" + symbol_utf8(t.top) + "' outside the stack alphabet");
        for (Symbol c : t.push)
            if (!spec.stack.contains(c))
                err(where + " pushes '" + symbol_utf8(c) + "' outside the stack alphabet");
        if (t.emit && !spec.output.contains(*t.emit))
            err(where + " emits '" + symbol_utf8(*t.emit) + "' outside the output alphabet");
        if (t.query_emit) {
            if (!spec.query)
                err(where + " writes a query symbol but the machine has no query alphabet");
            else if (!spec.query->contains(*t.query_emit))
                err(where + " writes '" + symbol_utf8(*t.query_emit) +
                    "' outside the query alphabet");
        }
    }

    rep.notes.push_back(
        "acceptance is by halting state alone; a machine may halt with input unconsumed");
    return rep;
}

void require_valid(const MachineSpec& spec) {
    const ValidationReport rep = validate_spec(spec);
    if (!rep.ok())
        throw ValidationError("machine '" + spec.name + "' is malformed\n" + rep.describe());
}

bool is_stack_free(const MachineSpec& spec) {
    return std::all_of(spec.transitions.begin(), spec.transitions.end(),
                       [](const Transition& t) {
                           return t.push.size() == 1 && t.push[0] == t.top;
                       });
}

MachineSpec swap_yes_no(const MachineSpec& spec) {
    if (!spec.qstates)
        throw InputError("machine '" + spec.name + "' has no adaptive query states");
    MachineSpec out = spec;
    std::swap(out.qstates->yes, out.qstates->no);
    return out;
}

MachineSpec as_many_one(const MachineSpec& spec, Alphabet query_alphabet) {
    if (spec.mode() != OracleMode::none)
        throw InputError("machine '" + spec.name + "' already has a query tape");
    MachineSpec out = spec;
    out.query = std::move(query_alphabet);
    return out;
}

} // namespace pdtfun
