#include "pdtfun/pumping.hpp"

#include <map>
#include <sstream>

#include "pdtfun/errors.hpp"

namespace pdtfun {
namespace {

Str repeat(const Str& part, std::size_t i) {
    Str out;
    out.reserve(part.size() * i);
    for (std::size_t k = 0; k < i; ++k) out += part;
    return out;
}

std::string part_utf8(const Str& part) {
    return part.empty() ? std::string("()") : to_utf8(part);
}

std::string render_parts(const Decomposition& d) {
    std::ostringstream out;
    out << part_utf8(d.u) << '|' << part_utf8(d.v) << '|' << part_utf8(d.x) << '|'
        << part_utf8(d.y) << '|' << part_utf8(d.z) << "  /  " << part_utf8(d.a) << '|'
        << part_utf8(d.b) << '|' << part_utf8(d.p) << '|' << part_utf8(d.q) << '|'
        << part_utf8(d.r);
    return out.str();
}

} // namespace

Str Decomposition::pump_input(std::size_t i) const {
    return u + repeat(v, i) + x + repeat(y, i) + z;
}

Str Decomposition::pump_output(std::size_t i) const {
    return a + repeat(b, i) + p + repeat(q, i) + r;
}

const char* describe_condition(PumpCondition c) {
    switch (c) {
        case PumpCondition::none: return "all conditions hold";
        case PumpCondition::window: return "(i) |vxy| <= m";
        case PumpCondition::growth: return "(ii) |vybq| >= 1";
        case PumpCondition::output_window: return "(iii) |bq| <= c*m+d";
        case PumpCondition::pump: return "(iv) pumped output stays a value at the pumped input";
        case PumpCondition::length_match: return "(v) |v|=|b| and |y|=|q|";
        case PumpCondition::relaxed_growth: return "(i') |bq| >= 1";
    }
    return "unknown condition";
}

PumpVerdict check_decomposition(const FunctionHandle& f, const Str& w, const Str& s,
                                const Decomposition& dec, const PumpingParams& params,
                                const std::set<std::size_t>& i_range,
                                bool length_preserving, bool relaxed) {
    if (params.m < 1) throw InputError("pumping parameter m must be at least 1");
    if (dec.pump_input(1) != w)
        throw InputError("decomposition parts do not reassemble the input");
    if (dec.pump_output(1) != s)
        throw InputError("decomposition parts do not reassemble the output");
    if (!f.eval(w).count(s))
        throw InputError("\"" + to_utf8(s) + "\" is not a value of " + f.name + " at \"" +
                         to_utf8(w) + "\"");

    const std::size_t vxy = dec.v.size() + dec.x.size() + dec.y.size();
    const std::size_t bq = dec.b.size() + dec.q.size();
    if (relaxed) {
        if (bq < 1) return {false, PumpCondition::relaxed_growth, 0};
    } else {
        if (vxy > params.m) return {false, PumpCondition::window, 0};
        if (dec.v.size() + dec.y.size() + bq < 1) return {false, PumpCondition::growth, 0};
    }
    if (bq > params.c * params.m + params.d)
        return {false, PumpCondition::output_window, 0};
    for (std::size_t i : i_range) {
        if (!f.eval(dec.pump_input(i)).count(dec.pump_output(i)))
            return {false, PumpCondition::pump, i};
    }
    if (length_preserving &&
        (dec.v.size() != dec.b.size() || dec.y.size() != dec.q.size()))
        return {false, PumpCondition::length_match, 0};
    return {};
}

std::optional<Decomposition> search_decomposition(const FunctionHandle& f, const Str& w,
                                                  const Str& s,
                                                  const PumpingParams& params,
                                                  std::size_t i_max,
                                                  bool length_preserving, bool relaxed,
                                                  std::size_t max_candidates) {
    if (params.m < 1) throw InputError("pumping parameter m must be at least 1");
    if (w.size() < params.m)
        throw InputError("input shorter than m: decomposition needs |w| >= m");
    if (!f.eval(w).count(s))
        throw InputError("\"" + to_utf8(s) + "\" is not a value of " + f.name + " at \"" +
                         to_utf8(w) + "\"");

    std::vector<std::size_t> probes;
    for (std::size_t i = 0; i <= i_max; ++i)
        if (i != 1) probes.push_back(i);  // i = 1 reassembles (w, s) and cannot fail

    std::map<Str, OutputSet> memo;
    auto values_at = [&](const Str& wi) -> const OutputSet& {
        auto it = memo.find(wi);
        if (it == memo.end()) it = memo.emplace(wi, f.eval(wi)).first;
        return it->second;
    };

    const std::size_t out_cap = params.c * params.m + params.d;
    const std::size_t n = w.size(), sn = s.size();
    std::size_t candidates = 0;

    auto try_outputs = [&](const Decomposition& base) -> std::optional<Decomposition> {
        // base carries u,v,x,y,z; enumerate a,b,p,q,r.
        for (std::size_t al = 0; al <= sn; ++al) {
            const std::size_t bl_max = std::min(out_cap, sn - al);
            const std::size_t bl_fix = base.v.size();
            for (std::size_t bl = length_preserving ? bl_fix : 0;
                 bl <= (length_preserving ? bl_fix : bl_max); ++bl) {
                if (al + bl > sn || bl > out_cap) break;
                for (std::size_t pl = 0; pl + al + bl <= sn; ++pl) {
                    const std::size_t ql_room = sn - al - bl - pl;
                    const std::size_t ql_fix = base.y.size();
                    for (std::size_t ql = length_preserving ? ql_fix : 0;
                         ql <= (length_preserving ? ql_fix : std::min(out_cap - bl, ql_room));
                         ++ql) {
                        if (ql > ql_room || bl + ql > out_cap) break;
                        if (relaxed) {
                            if (bl + ql < 1) continue;
                        } else {
                            if (base.v.size() + base.y.size() + bl + ql < 1) continue;
                        }
                        if (++candidates > max_candidates)
                            throw ResourceError("pumping search exceeded the candidate cap");
                        Decomposition dec = base;
                        dec.a = s.substr(0, al);
                        dec.b = s.substr(al, bl);
                        dec.p = s.substr(al + bl, pl);
                        dec.q = s.substr(al + bl + pl, ql);
                        dec.r = s.substr(al + bl + pl + ql);
                        bool ok = true;
                        for (std::size_t i : probes) {
                            if (!values_at(dec.pump_input(i)).count(dec.pump_output(i))) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) return dec;
                    }
                }
            }
        }
        return std::nullopt;
    };

    for (std::size_t ul = 0; ul <= n; ++ul) {
        const std::size_t win = relaxed ? n : params.m;
        for (std::size_t vl = 0; vl <= std::min(win, n - ul); ++vl) {
            for (std::size_t xl = 0; ul + vl + xl <= n; ++xl) {
                if (!relaxed && vl + xl > params.m) break;
                for (std::size_t yl = 0; ul + vl + xl + yl <= n; ++yl) {
                    if (!relaxed && vl + xl + yl > params.m) break;
                    Decomposition base;
                    base.u = w.substr(0, ul);
                    base.v = w.substr(ul, vl);
                    base.x = w.substr(ul + vl, xl);
                    base.y = w.substr(ul + vl + xl, yl);
                    base.z = w.substr(ul + vl + xl + yl);
                    if (auto found = try_outputs(base)) return found;
                }
            }
        }
    }
    return std::nullopt;
}

bool PumpingReport::all_found() const {
    for (const auto& e : entries)
        if (!e.found) return false;
    return true;
}

bool PumpingReport::all_failed() const {
    for (const auto& e : entries)
        if (e.found) return false;
    return true;
}

std::string PumpingReport::describe() const {
    std::ostringstream out;
    out << "pumping search at m=" << params.m << " c=" << params.c << " d=" << params.d
        << " i<=" << i_max << (length_preserving ? " length-preserving" : "")
        << (relaxed ? " relaxed" : "") << "\n";
    for (const auto& e : entries) {
        out << "  w=" << part_utf8(e.w) << "  s=" << part_utf8(e.s) << "  ";
        if (e.found)
            out << "found  " << render_parts(*e.found) << "\n";
        else
            out << "none\n";
    }
    out << (all_found() ? "every pair admits a decomposition at these constants\n"
            : all_failed()
                ? "no pair admits a decomposition at these constants; this refutes "
                  "pumping only at the supplied (m,c,d), not in general\n"
                : "mixed verdicts; a none refutes pumping only at the supplied (m,c,d)\n");
    return out.str();
}

PumpingReport pumping_report(const FunctionHandle& f, const PumpingParams& params,
                             const std::vector<Str>& w_list, std::size_t i_max,
                             bool length_preserving, bool relaxed,
                             std::size_t max_candidates) {
    PumpingReport report;
    report.params = params;
    report.i_max = i_max;
    report.length_preserving = length_preserving;
    report.relaxed = relaxed;
    for (const Str& w : w_list) {
        OutputSet values = f.eval(w);
        if (values.empty())
            throw InputError("pumping report: " + f.name + " is undefined at \"" +
                             to_utf8(w) + "\"");
        for (const Str& s : values) {
            PumpingReportEntry entry;
            entry.w = w;
            entry.s = s;
            entry.found = search_decomposition(f, w, s, params, i_max, length_preserving,
                                               relaxed, max_candidates);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

} // namespace pdtfun
