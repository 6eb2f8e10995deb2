#include "pdtfun/run.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pdtfun/oracle.hpp"

namespace pdtfun {

std::string render_configuration(const Configuration& c) {
    std::ostringstream os;
    os << "(" << c.state << ", pos=" << c.input_position << ", stack="
       << render_string(c.stack) << ", out=" << render_string(c.output_so_far);
    if (!c.query_so_far.empty()) os << ", query=" << render_string(c.query_so_far);
    os << ", steps=" << c.steps << ")";
    return os.str();
}

std::string render_prefix(const std::vector<Configuration>& prefix) {
    std::ostringstream os;
    for (const Configuration& c : prefix) os << "  " << render_configuration(c) << "\n";
    return os.str();
}

OutputSet RunResult::outputs() const {
    OutputSet out;
    for (const auto& [o, q] : accepted) out.insert(o);
    return out;
}

namespace {

struct Cfg {
    int state;
    std::uint32_t pos;
    std::uint32_t steps;
    Str stack;  // top first
    Str out;
    Str qry;

    bool operator==(const Cfg&) const = default;
};

struct CfgHash {
    static void mix(std::size_t& h, std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    std::size_t operator()(const Cfg& c) const {
        std::size_t h = std::hash<int>()(c.state);
        mix(h, c.pos);
        mix(h, c.steps);
        mix(h, std::hash<Str>()(c.stack));
        mix(h, std::hash<Str>()(c.out));
        mix(h, std::hash<Str>()(c.qry));
        return h;
    }
};

// Per-run transition index: by state, keyed on the read symbol, plus the
// spontaneous moves.
struct Compiled {
    std::unordered_map<std::string, int> id;
    std::vector<std::string> names;
    std::vector<bool> acc, rej;
    std::vector<std::unordered_map<Symbol, std::vector<const Transition*>>> by_read;
    std::vector<std::vector<const Transition*>> spontaneous;
    int start = -1, q_query = -1, q_yes = -1, q_no = -1;

    int intern(const std::string& s) {
        const auto [it, fresh] = id.emplace(s, static_cast<int>(names.size()));
        if (fresh) {
            names.push_back(s);
            acc.push_back(false);
            rej.push_back(false);
            by_read.emplace_back();
            spontaneous.emplace_back();
        }
        return it->second;
    }
};

Compiled compile(const MachineSpec& spec) {
    Compiled c;
    c.start = c.intern(spec.start);
    for (const std::string& s : spec.accepting) c.acc[c.intern(s)] = true;
    for (const std::string& s : spec.rejecting) c.rej[c.intern(s)] = true;
    if (spec.qstates) {
        c.q_query = c.intern(spec.qstates->query);
        c.q_yes = c.intern(spec.qstates->yes);
        c.q_no = c.intern(spec.qstates->no);
    }
    for (const Transition& t : spec.transitions) {
        const int from = c.intern(t.from);
        c.intern(t.to);
        if (t.read)
            c.by_read[from][*t.read].push_back(&t);
        else
            c.spontaneous[from].push_back(&t);
    }
    return c;
}

Configuration to_public(const Compiled& c, const Cfg& cfg) {
    return {c.names[cfg.state], cfg.pos, cfg.stack, cfg.out, cfg.qry, cfg.steps};
}

} // namespace

RunResult run_machine(const MachineSpec& spec, const Str& input, const Oracle* oracle,
                      const EngineLimits& limits, bool record_queries) {
    require_valid(spec);
    for (Symbol s : input)
        if (!spec.input.contains(s))
            throw InputError("input symbol '" + symbol_utf8(s) +
                             "' not in the input alphabet of '" + spec.name + "'");
    if (spec.qstates && oracle && spec.query && !spec.query->subset_of(oracle->alphabet))
        throw InputError("query alphabet of '" + spec.name +
                         "' is not covered by oracle '" + oracle->name + "'");

    const Compiled c = compile(spec);
    const std::size_t n = input.size();
    const std::uint64_t budget = spec.step_bound.eval(n);
    const auto char_at = [&](std::uint32_t pos) -> std::optional<Symbol> {
        if (pos == 0) return kLeftEnd;
        if (pos <= n) return input[pos - 1];
        if (pos == n + 1) return kRightEnd;
        return std::nullopt;
    };

    RunResult result;
    std::unordered_set<Cfg, CfgHash> visited;
    struct Frame {
        Cfg cfg;
        std::uint32_t depth;
    };
    std::vector<Frame> work;
    std::vector<Cfg> path;

    Cfg initial{c.start, 0, 0, Str(1, spec.bottom), Str(), Str()};
    visited.insert(initial);
    work.push_back({std::move(initial), 0});

    std::vector<std::pair<const Transition*, bool>> applicable;  // (move, consumes)

    const auto violate = [&](const Cfg& cur, std::uint32_t depth) {
        result.termination_ok = false;
        result.violating_prefix.reserve(depth + 1);
        for (std::uint32_t i = 0; i < depth; ++i)
            result.violating_prefix.push_back(to_public(c, path[i]));
        result.violating_prefix.push_back(to_public(c, cur));
    };

    while (!work.empty()) {
        Frame fr = std::move(work.back());
        work.pop_back();
        path.resize(fr.depth);
        path.push_back(fr.cfg);
        const Cfg& cur = fr.cfg;

        if (++result.configs_explored > limits.max_configs)
            throw ResourceError("explored-configuration cap exceeded (" +
                                std::to_string(limits.max_configs) + ")");

        if (c.acc[cur.state]) {
            result.accepted.emplace(cur.out, cur.qry);
            continue;
        }
        if (c.rej[cur.state]) continue;

        if (cur.state == c.q_query && c.q_query >= 0) {
            if (!oracle)
                throw InputError("machine '" + spec.name +
                                 "' entered its query state but no oracle was supplied");
            if (cur.steps >= budget) {
                violate(cur, fr.depth);
                return result;
            }
            const bool answer = oracle->membership(cur.qry);
            Cfg next = cur;
            next.state = answer ? c.q_yes : c.q_no;
            next.qry.clear();
            ++next.steps;
            if (record_queries)
                result.query_events.push_back(
                    {cur.qry, answer, next.qry.size(), next.qry.size()});
            if (visited.insert(next).second)
                work.push_back({std::move(next), fr.depth + 1});
            continue;
        }

        applicable.clear();
        const std::optional<Symbol> here = char_at(cur.pos);
        if (here && !cur.stack.empty()) {
            const auto& keyed = c.by_read[cur.state];
            const auto it = keyed.find(*here);
            if (it != keyed.end())
                for (const Transition* t : it->second)
                    if (t->top == cur.stack[0]) applicable.emplace_back(t, true);
        }
        if (!cur.stack.empty())
            for (const Transition* t : c.spontaneous[cur.state])
                if (t->top == cur.stack[0]) applicable.emplace_back(t, false);

        if (applicable.empty()) continue;  // stuck: terminated and rejecting
        if (cur.steps >= budget) {
            violate(cur, fr.depth);
            return result;
        }

        for (const auto& [t, consumes] : applicable) {
            Cfg next;
            next.state = c.id.at(t->to);
            next.pos = cur.pos + (consumes ? 1 : 0);
            next.steps = cur.steps + 1;
            next.stack.reserve(t->push.size() + cur.stack.size() - 1);
            next.stack = t->push;
            next.stack.append(cur.stack, 1, Str::npos);
            next.out = cur.out;
            if (t->emit) next.out.push_back(*t->emit);
            next.qry = cur.qry;
            if (t->query_emit) next.qry.push_back(*t->query_emit);
            if (visited.insert(next).second)
                work.push_back({std::move(next), fr.depth + 1});
        }
    }
    return result;
}

namespace {

const RunResult& require_terminating(const RunResult& r, const MachineSpec& spec) {
    if (!r.termination_ok)
        throw TerminationError("machine '" + spec.name +
                                   "' has a path that outlives its step budget:\n" +
                                   render_prefix(r.violating_prefix),
                               r.violating_prefix);
    return r;
}

} // namespace

OutputSet enumerate_outputs(const MachineSpec& spec, const Str& input,
                            const EngineLimits& limits) {
    const RunResult r = run_machine(spec, input, nullptr, limits);
    return require_terminating(r, spec).outputs();
}

bool accepts(const MachineSpec& spec, const Str& input, const EngineLimits& limits) {
    const RunResult r = run_machine(spec, input, nullptr, limits);
    return require_terminating(r, spec).accepted_any();
}

TerminationCheck check_termination(const MachineSpec& spec, const Str& input,
                                   const EngineLimits& limits) {
    const RunResult r = run_machine(spec, input, nullptr, limits);
    return {r.termination_ok, r.violating_prefix};
}

SingleValuedCheck is_single_valued(const MachineSpec& spec, const std::vector<Str>& inputs,
                                   const EngineLimits& limits) {
    SingleValuedCheck check;
    for (const Str& x : inputs) {
        OutputSet out = enumerate_outputs(spec, x, limits);
        if (out.size() > 1) {
            check.single_valued = false;
            check.witness = x;
            check.outputs = std::move(out);
            return check;
        }
    }
    return check;
}

} // namespace pdtfun
