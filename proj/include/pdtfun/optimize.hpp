#ifndef PDTFUN_OPTIMIZE_HPP
#define PDTFUN_OPTIMIZE_HPP

#include "pdtfun/function.hpp"

namespace pdtfun {

enum class OptMode { maximum, minimum };

// Extremal element of a nonempty set under dictionary order induced by the
// listing order of `order`.
Str extremal(const OutputSet& values, OptMode mode, const Alphabet& order);

// Dictionary-extremal valid output of the machine on x. The machine is
// assumed to accept along at least one path on every input; a missing
// accepting path is surfaced as an error, never defaulted.
Str opt_eval(const MachineSpec& spec, OptMode mode, const Str& x,
             const EngineLimits& limits = {});

// Same, restricted to stack-free machines whose accepting outputs on x all
// share one length. Stack use or mixed lengths are errors.
Str opt_nfa_el_eval(const MachineSpec& spec, OptMode mode, const Str& x,
                    const EngineLimits& limits = {});

// Single-valued handle x -> {extremal of fset(x)}. Evaluating it where fset
// is undefined is a totality violation. The result refines fset wherever
// both are defined.
FunctionHandle opt_refinement(const FunctionHandle& fset, OptMode mode);

} // namespace pdtfun

#endif
