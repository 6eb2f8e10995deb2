#include "pdtfun/function.hpp"

#include <algorithm>

#include "pdtfun/errors.hpp"

namespace pdtfun {
namespace {

Alphabet merge_alphabets(const Alphabet& a, const Alphabet& b) {
    std::vector<Symbol> merged = a.symbols();
    for (Symbol s : b.symbols())
        if (!a.contains(s)) merged.push_back(s);
    return Alphabet(merged, /*allow_marks=*/true);
}

void require_same_input(const FunctionHandle& f, const FunctionHandle& g,
                        const char* op) {
    if (f.input != g.input)
        throw InputError(std::string(op) + ": input alphabets differ (" +
                         f.input.describe() + " vs " + g.input.describe() + ")");
}

} // namespace

OutputSet FunctionHandle::eval(const Str& x) const {
    if (!input.contains_all(x))
        throw InputError(name + ": input contains a symbol outside " + input.describe());
    OutputSet result = raw(x);
    const std::uint64_t cap = output_bound.eval(x.size());
    for (const Str& y : result) {
        if (y.size() > cap)
            throw ValidationError(name + ": produced an output of length " +
                                  std::to_string(y.size()) + " past the declared bound " +
                                  std::to_string(cap) + " on input " + to_utf8(x));
        if (!output.contains_all(y))
            throw ValidationError(name + ": produced an output outside " +
                                  output.describe() + " on input " + to_utf8(x));
    }
    return result;
}

FunctionHandle from_machine(const MachineSpec& spec, const EngineLimits& limits) {
    require_valid(spec);
    if (spec.mode() == OracleMode::turing)
        throw InputError(spec.name + ": a query machine needs an oracle to define a function");
    FunctionHandle f;
    f.name = spec.name;
    f.input = spec.input;
    f.output = spec.output;
    f.output_bound = spec.step_bound;  // one emitted symbol per step at most
    f.raw = [spec, limits](const Str& x) { return enumerate_outputs(spec, x, limits); };
    return f;
}

FunctionHandle from_evaluator(std::string name, Alphabet input, Alphabet output,
                              LinearBound bound, std::function<OutputSet(const Str&)> fn) {
    if (!bound.valid())
        throw InputError(name + ": output bound must satisfy slope+intercept >= 1");
    FunctionHandle f;
    f.name = std::move(name);
    f.input = std::move(input);
    f.output = std::move(output);
    f.output_bound = bound;
    f.raw = std::move(fn);
    return f;
}

FunctionHandle everywhere_undefined(Alphabet input, Alphabet output) {
    return from_evaluator("undefined", std::move(input), std::move(output), {0, 1},
                          [](const Str&) { return OutputSet{}; });
}

FunctionHandle identity_fn(const Alphabet& alphabet) {
    return from_evaluator("id", alphabet, alphabet, {1, 1},
                          [](const Str& x) { return OutputSet{x}; });
}

FunctionHandle intersect(const FunctionHandle& f, const FunctionHandle& g) {
    require_same_input(f, g, "intersect");
    FunctionHandle h;
    h.name = "(" + f.name + " & " + g.name + ")";
    h.input = f.input;
    h.output = f.output;
    h.output_bound = f.output_bound;
    h.raw = [f, g](const Str& x) {
        OutputSet fx = f.eval(x), out;
        for (const Str& y : g.eval(x))
            if (fx.count(y)) out.insert(y);
        return out;
    };
    return h;
}

FunctionHandle union_fn(const FunctionHandle& f, const FunctionHandle& g) {
    require_same_input(f, g, "union");
    FunctionHandle h;
    h.name = "(" + f.name + " | " + g.name + ")";
    h.input = f.input;
    h.output = merge_alphabets(f.output, g.output);
    h.output_bound = f.output_bound.join(g.output_bound);
    h.raw = [f, g](const Str& x) {
        OutputSet out = f.eval(x);
        OutputSet gx = g.eval(x);
        out.insert(gx.begin(), gx.end());
        return out;
    };
    return h;
}

FunctionHandle set_difference(const FunctionHandle& f, const FunctionHandle& g) {
    require_same_input(f, g, "difference");
    FunctionHandle h;
    h.name = "(" + f.name + " \\ " + g.name + ")";
    h.input = f.input;
    h.output = f.output;
    h.output_bound = f.output_bound;
    h.raw = [f, g](const Str& x) {
        OutputSet gx = g.eval(x), out;
        for (const Str& y : f.eval(x))
            if (!gx.count(y)) out.insert(y);
        return out;
    };
    return h;
}

FunctionHandle complement_fn(const FunctionHandle& g, LinearBound p, std::size_t n0,
                             const EngineLimits& limits) {
    if (!p.valid())
        throw InputError("complement: length bound must satisfy slope+intercept >= 1");
    FunctionHandle h;
    h.name = "co(" + g.name + ")";
    h.input = g.input;
    h.output = g.output;
    h.output_bound = p;
    h.raw = [g, p, n0, limits](const Str& x) {
        if (x.size() < n0) return OutputSet{};
        const std::uint64_t cap = p.eval(x.size());
        // Guard the enumeration: sum of |Gamma|^k for k <= cap.
        const std::size_t base = g.output.size();
        std::uint64_t total = 1;
        for (std::uint64_t k = 1; k <= cap; ++k) {
            std::uint64_t layer = 1;
            for (std::uint64_t j = 0; j < k; ++j) {
                layer *= base;
                if (layer > limits.max_configs) break;
            }
            total += layer;
            if (total > limits.max_configs)
                throw ResourceError("complement: candidate output space exceeds the config limit");
        }
        OutputSet gx = g.eval(x), out;
        for (const Str& y : strings_up_to(g.output, static_cast<std::size_t>(cap)))
            if (!gx.count(y)) out.insert(y);
        return out;
    };
    return h;
}

FunctionHandle compose(const FunctionHandle& f, const FunctionHandle& g) {
    if (!g.output.subset_of(f.input))
        throw InputError("compose: outputs of " + g.name + " are not all legal inputs to " +
                         f.name);
    FunctionHandle h;
    h.name = "(" + f.name + " o " + g.name + ")";
    h.input = g.input;
    h.output = f.output;
    h.output_bound = f.output_bound.after(g.output_bound);
    h.raw = [f, g](const Str& x) {
        OutputSet out;
        for (const Str& y : g.eval(x)) {
            OutputSet fy = f.eval(y);
            out.insert(fy.begin(), fy.end());
        }
        return out;
    };
    return h;
}

RefinementResult refinement_check(const FunctionHandle& g, const FunctionHandle& f,
                                  std::size_t max_len) {
    require_same_input(f, g, "refinement");
    for (const Str& x : strings_up_to(g.input, max_len)) {
        OutputSet fx = f.eval(x);
        OutputSet gx = g.eval(x);
        if (fx.empty() != gx.empty()) {
            RefinementResult r;
            r.holds = false;
            r.counterexample = x;
            r.reason = "domain mismatch at \"" + to_utf8(x) + "\": " + f.name + " is " +
                       (fx.empty() ? "undefined" : "defined") + " but " + g.name + " is " +
                       (gx.empty() ? "undefined" : "defined");
            return r;
        }
        for (const Str& y : fx) {
            if (!gx.count(y)) {
                RefinementResult r;
                r.holds = false;
                r.counterexample = x;
                r.reason = "at \"" + to_utf8(x) + "\" value \"" + to_utf8(y) + "\" of " +
                           f.name + " is not a value of " + g.name;
                return r;
            }
        }
    }
    return {};
}

std::set<Str> domain_of(const FunctionHandle& f, std::size_t max_len) {
    std::set<Str> dom;
    for (const Str& x : strings_up_to(f.input, max_len))
        if (!f.eval(x).empty()) dom.insert(x);
    return dom;
}

std::set<Str> range_of(const FunctionHandle& f, std::size_t max_len) {
    std::set<Str> ran;
    for (const Str& x : strings_up_to(f.input, max_len)) {
        OutputSet fx = f.eval(x);
        ran.insert(fx.begin(), fx.end());
    }
    return ran;
}

bool nivat_check(const std::function<bool(const Str&)>& track_language,
                 const LinearBound& p, const Str& x, const Str& y, std::size_t ext_len,
                 std::size_t cap) {
    if (y.size() > p.eval(x.size())) return false;
    const std::size_t lo = std::max(x.size(), y.size());
    if (ext_len < lo) return false;
    std::set<Str> xs = natural_extensions(x, ext_len, cap);
    std::set<Str> ys = natural_extensions(y, ext_len, cap);
    for (std::size_t len = lo; len <= ext_len; ++len) {
        for (const Str& xe : xs) {
            if (xe.size() != len) continue;
            for (const Str& ye : ys) {
                if (ye.size() != len) continue;
                if (track_language(track_pair(xe, ye).rendered)) return true;
            }
        }
    }
    return false;
}

bool nivat_check(const MachineSpec& track_acceptor, const LinearBound& p, const Str& x,
                 const Str& y, std::size_t ext_len, const EngineLimits& limits) {
    require_valid(track_acceptor);
    return nivat_check(
        [&](const Str& t) {
            // Tracks with symbols the acceptor does not list are outside its
            // language, not errors.
            if (!track_acceptor.input.contains_all(t)) return false;
            return accepts(track_acceptor, t, limits);
        },
        p, x, y, ext_len, limits.max_configs);
}

bool advice_membership(const MachineSpec& B, const FunctionHandle& h, const Str& x,
                       const EngineLimits& limits) {
    require_valid(B);
    for (const Str& y : h.eval(x)) {
        const Str track = track_pair(x, y).rendered;
        // A track with symbols the acceptor does not list is simply outside
        // its language, not an error in the advised machine.
        if (!B.input.contains_all(track)) continue;
        if (accepts(B, track, limits)) return true;
    }
    return false;
}

FunctionHandle char_fn(std::string name, Alphabet input,
                       std::function<bool(const Str&)> member) {
    Alphabet bits(std::vector<Symbol>{U'0', U'1'});
    return from_evaluator(std::move(name), std::move(input), bits, {0, 1},
                          [member = std::move(member)](const Str& x) {
                              return OutputSet{member(x) ? Str{U'1'} : Str{U'0'}};
                          });
}

FunctionHandle quasi_char_fn(std::string name, Alphabet input,
                             std::function<bool(const Str&)> member) {
    Alphabet bits(std::vector<Symbol>{U'0', U'1'});
    return from_evaluator(std::move(name), std::move(input), bits, {0, 1},
                          [member = std::move(member)](const Str& x) {
                              return member(x) ? OutputSet{Str{U'1'}} : OutputSet{};
                          });
}

} // namespace pdtfun
