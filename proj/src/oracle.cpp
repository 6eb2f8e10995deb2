#include "pdtfun/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "pdtfun/errors.hpp"

namespace pdtfun {

Oracle oracle_all(Alphabet alphabet) {
    return {"all", std::move(alphabet), [](const Str&) { return true; }};
}

Oracle oracle_none(Alphabet alphabet) {
    return {"none", std::move(alphabet), [](const Str&) { return false; }};
}

Oracle oracle_palindromes(Alphabet alphabet) {
    return {"palindromes", std::move(alphabet), [](const Str& w) {
                return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
            }};
}

Oracle oracle_dup(Alphabet alphabet) {
    return {"dup", std::move(alphabet), [](const Str& w) {
                const std::size_t first = w.find(kPad);
                if (first == Str::npos) return false;
                if (w.find(kPad, first + 1) != Str::npos) return false;
                return w.substr(0, first) == w.substr(first + 1);
            }};
}

Oracle complement_oracle(const Oracle& A) {
    return {"co(" + A.name + ")", A.alphabet,
            [inner = A.membership](const Str& w) { return !inner(w); }};
}

namespace {

Oracle machine_oracle(const MachineSpec& spec, std::optional<Oracle> inner,
                      const EngineLimits& limits) {
    require_valid(spec);
    if (spec.mode() != OracleMode::none && !inner)
        throw InputError(spec.name +
                         ": defines a language only relative to an inner oracle");
    struct Memo {
        std::mutex mu;
        std::map<Str, bool> table;
    };
    auto memo = std::make_shared<Memo>();
    auto fn = [spec, inner = std::move(inner), limits, memo](const Str& w) {
        if (!spec.input.contains_all(w)) return false;
        {
            std::lock_guard<std::mutex> lock(memo->mu);
            auto it = memo->table.find(w);
            if (it != memo->table.end()) return it->second;
        }
        const bool adaptive = spec.mode() == OracleMode::turing;
        RunResult r = run_machine(spec, w, adaptive && inner ? &*inner : nullptr, limits);
        if (!r.termination_ok)
            throw TerminationError(spec.name + " (as oracle) outlives its step budget on \"" +
                                       to_utf8(w) + "\":\n" + render_prefix(r.violating_prefix),
                                   r.violating_prefix);
        bool member = false;
        if (spec.mode() == OracleMode::many_one) {
            // A path counts only when its query word is in the inner language.
            for (const auto& [z, y] : r.accepted)
                if (inner->membership(y)) {
                    member = true;
                    break;
                }
        } else {
            member = r.accepted_any();
        }
        std::lock_guard<std::mutex> lock(memo->mu);
        memo->table.emplace(w, member);
        return member;
    };
    return {"L(" + spec.name + ")", spec.input, std::move(fn)};
}

} // namespace

Oracle language_from_machine(const MachineSpec& spec, const EngineLimits& limits) {
    return machine_oracle(spec, std::nullopt, limits);
}

Oracle language_from_machine(const MachineSpec& spec, Oracle inner,
                             const EngineLimits& limits) {
    return machine_oracle(spec, std::move(inner), limits);
}

OutputSet eval_many_one(const MachineSpec& spec, const Oracle& A, const Str& x,
                        const EngineLimits& limits) {
    require_valid(spec);
    if (spec.mode() != OracleMode::many_one)
        throw InputError(spec.name + ": expected a query-writing machine without "
                                     "answer-branching states");
    if (!spec.query->subset_of(A.alphabet))
        throw InputError(spec.name + ": query alphabet is not covered by oracle '" +
                         A.name + "'");
    RunResult r = run_machine(spec, x, nullptr, limits);
    if (!r.termination_ok)
        throw TerminationError(spec.name + " outlives its step budget on \"" + to_utf8(x) +
                                   "\":\n" + render_prefix(r.violating_prefix),
                               r.violating_prefix);
    OutputSet out;
    for (const auto& [z, y] : r.accepted)
        if (A.membership(y)) out.insert(z);
    return out;
}

OutputSet eval_turing(const MachineSpec& spec, const Oracle& A, const Str& x,
                      const EngineLimits& limits) {
    require_valid(spec);
    if (spec.mode() != OracleMode::turing)
        throw InputError(spec.name + ": expected a machine with query/yes/no states");
    RunResult r = run_machine(spec, x, &A, limits);
    if (!r.termination_ok)
        throw TerminationError(spec.name + " outlives its step budget on \"" + to_utf8(x) +
                                   "\":\n" + render_prefix(r.violating_prefix),
                               r.violating_prefix);
    return r.outputs();
}

FunctionHandle relativized_fn(const MachineSpec& spec, Oracle A,
                              const EngineLimits& limits) {
    require_valid(spec);
    const OracleMode mode = spec.mode();
    if (mode == OracleMode::none)
        throw InputError(spec.name + ": machine has no query capability");
    FunctionHandle f;
    f.name = spec.name + "^" + A.name;
    f.input = spec.input;
    f.output = spec.output;
    f.output_bound = spec.step_bound;
    if (mode == OracleMode::many_one) {
        f.raw = [spec, A = std::move(A), limits](const Str& x) {
            return eval_many_one(spec, A, x, limits);
        };
    } else {
        f.raw = [spec, A = std::move(A), limits](const Str& x) {
            return eval_turing(spec, A, x, limits);
        };
    }
    return f;
}

FunctionHandle build_level(std::size_t k, const MachineSpec& base,
                           const std::vector<MachineSpec>& oracle_chain,
                           const EngineLimits& limits) {
    if (k < 1) throw InputError("level index must be at least 1");
    if (k > 4) throw InputError("level nesting past 4 is rejected as a depth guard");
    if (oracle_chain.size() != k - 1)
        throw InputError("level " + std::to_string(k) + " needs a chain of " +
                         std::to_string(k - 1) + " machines, got " +
                         std::to_string(oracle_chain.size()));
    require_valid(base);
    if (k == 1) {
        if (base.mode() == OracleMode::turing)
            throw InputError(base.name + ": level 1 is unrelativized; this machine "
                                         "requires an oracle");
        return from_machine(base, limits);
    }
    // Assemble oracles from the innermost chain machine outward.
    std::optional<Oracle> inner;
    for (std::size_t i = oracle_chain.size(); i-- > 0;) {
        Oracle lang = inner ? language_from_machine(oracle_chain[i], *inner, limits)
                            : language_from_machine(oracle_chain[i], limits);
        inner = complement_oracle(lang);
    }
    FunctionHandle f = relativized_fn(base, *inner, limits);
    f.name = "level" + std::to_string(k) + "(" + base.name + ")";
    return f;
}

} // namespace pdtfun
