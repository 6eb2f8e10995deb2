#ifndef PDTFUN_FUNCTION_HPP
#define PDTFUN_FUNCTION_HPP

#include <functional>
#include <string>

#include "pdtfun/run.hpp"

namespace pdtfun {

// A multi-valued partial function from input-alphabet strings to sets of
// output-alphabet strings. Undefined at x means eval(x) is empty. Handles
// are immutable values; the operators below build new ones. Every evaluation
// checks the declared output-length bound and the output alphabet.
struct FunctionHandle {
    std::string name;
    Alphabet input;
    Alphabet output;
    LinearBound output_bound;
    std::function<OutputSet(const Str&)> raw;

    OutputSet eval(const Str& x) const;
};

FunctionHandle from_machine(const MachineSpec& spec, const EngineLimits& limits = {});
FunctionHandle from_evaluator(std::string name, Alphabet input, Alphabet output,
                              LinearBound bound, std::function<OutputSet(const Str&)> fn);
FunctionHandle everywhere_undefined(Alphabet input, Alphabet output);
FunctionHandle identity_fn(const Alphabet& alphabet);

// Pointwise set operations. Input alphabets must agree.
FunctionHandle intersect(const FunctionHandle& f, const FunctionHandle& g);
FunctionHandle union_fn(const FunctionHandle& f, const FunctionHandle& g);
FunctionHandle set_difference(const FunctionHandle& f, const FunctionHandle& g);

// Bounded complement: for |x| >= n0 the value is every output-alphabet string
// of length <= p(|x|) that g does not produce; below n0 it is undefined.
FunctionHandle complement_fn(const FunctionHandle& g, LinearBound p, std::size_t n0,
                             const EngineLimits& limits = {});

// (f after g)(x) = union of f(y) over y in g(x). g's outputs must be legal
// inputs to f.
FunctionHandle compose(const FunctionHandle& f, const FunctionHandle& g);

struct RefinementResult {
    bool holds = true;
    std::optional<Str> counterexample;
    std::string reason;
};

// Does f refine g on every input up to max_len: same domain, f(x) a subset
// of g(x)?
RefinementResult refinement_check(const FunctionHandle& g, const FunctionHandle& f,
                                  std::size_t max_len);

std::set<Str> domain_of(const FunctionHandle& f, std::size_t max_len);
std::set<Str> range_of(const FunctionHandle& f, std::size_t max_len);

// Decide y in f(x) through f's length-aligned two-track presentation: some
// extension pair (x~, y~) of equal length <= ext_len has its track in the
// acceptor, and |y| <= p(|x|).
bool nivat_check(const std::function<bool(const Str&)>& track_language,
                 const LinearBound& p, const Str& x, const Str& y, std::size_t ext_len,
                 std::size_t cap = 10'000'000);
bool nivat_check(const MachineSpec& track_acceptor, const LinearBound& p, const Str& x,
                 const Str& y, std::size_t ext_len, const EngineLimits& limits = {});

// Membership through an advice function: x is in the advised language when
// some y in h(x) puts the track of (x, y) into B.
bool advice_membership(const MachineSpec& B, const FunctionHandle& h, const Str& x,
                       const EngineLimits& limits = {});

// Total 0/1 indicator of a language.
FunctionHandle char_fn(std::string name, Alphabet input,
                       std::function<bool(const Str&)> member);
// Partial indicator: members map to {"1"}, everything else is undefined.
FunctionHandle quasi_char_fn(std::string name, Alphabet input,
                             std::function<bool(const Str&)> member);

} // namespace pdtfun

#endif
