#include "pdtfun/optimize.hpp"

#include "pdtfun/errors.hpp"

namespace pdtfun {

Str extremal(const OutputSet& values, OptMode mode, const Alphabet& order) {
    if (values.empty()) throw InputError("extremal of an empty set");
    const Str* best = nullptr;
    for (const Str& y : values) {
        if (!best) {
            best = &y;
            continue;
        }
        const bool better = mode == OptMode::maximum ? dict_less(*best, y, order)
                                                     : dict_less(y, *best, order);
        if (better) best = &y;
    }
    return *best;
}

Str opt_eval(const MachineSpec& spec, OptMode mode, const Str& x,
             const EngineLimits& limits) {
    OutputSet values = enumerate_outputs(spec, x, limits);
    if (values.empty())
        throw ValidationError(spec.name + ": no accepting computation path on \"" +
                              to_utf8(x) + "\"; optimization assumes at least one");
    return extremal(values, mode, spec.output);
}

Str opt_nfa_el_eval(const MachineSpec& spec, OptMode mode, const Str& x,
                    const EngineLimits& limits) {
    if (!is_stack_free(spec))
        throw InputError(spec.name + ": uses its stack; equal-length optimization is "
                                     "restricted to stack-free machines");
    OutputSet values = enumerate_outputs(spec, x, limits);
    if (values.empty())
        throw ValidationError(spec.name + ": no accepting computation path on \"" +
                              to_utf8(x) + "\"; optimization assumes at least one");
    const std::size_t len = values.begin()->size();
    for (const Str& y : values)
        if (y.size() != len)
            throw ValidationError(spec.name + ": accepting outputs of lengths " +
                                  std::to_string(len) + " and " +
                                  std::to_string(y.size()) + " on \"" + to_utf8(x) +
                                  "\" break the equal-length requirement");
    return extremal(values, mode, spec.output);
}

FunctionHandle opt_refinement(const FunctionHandle& fset, OptMode mode) {
    FunctionHandle h;
    h.name = (mode == OptMode::maximum ? "max(" : "min(") + fset.name + ")";
    h.input = fset.input;
    h.output = fset.output;
    h.output_bound = fset.output_bound;
    h.raw = [fset, mode](const Str& x) {
        OutputSet values = fset.eval(x);
        if (values.empty())
            throw ValidationError(fset.name + ": undefined at \"" + to_utf8(x) +
                                  "\"; optimization requires a total source");
        return OutputSet{extremal(values, mode, fset.output)};
    };
    return h;
}

} // namespace pdtfun
