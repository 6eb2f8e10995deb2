#include "pdtfun/machine_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pdtfun/errors.hpp"

namespace pdtfun {
namespace {

constexpr char32_t kLambda = U'λ';

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("machine file, line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// One scalar, or "(a,b)" with plain scalar components.
Symbol parse_symbol_token(const std::string& tok, std::size_t line) {
    Str decoded;
    try {
        decoded = utf8_to_str(tok);
    } catch (const Error& e) {
        fail(line, std::string("bad token \"") + tok + "\": " + e.what());
    }
    if (decoded.size() == 1) {
        if (decoded[0] == U'(' || decoded[0] == U')' || decoded[0] == U',')
            fail(line, "parentheses and comma are reserved for pair tokens");
        return decoded[0];
    }
    if (decoded.size() == 5 && decoded[0] == U'(' && decoded[2] == U',' &&
        decoded[4] == U')') {
        try {
            return compose_symbol(decoded[1], decoded[3]);
        } catch (const Error& e) {
            fail(line, std::string("bad pair token \"") + tok + "\": " + e.what());
        }
    }
    fail(line, "expected one symbol or a pair (a,b), got \"" + tok + "\"");
}

// A concatenation of scalars and "(a,b)" pairs with no separators.
Str parse_string_token(const std::string& tok, std::size_t line) {
    Str decoded;
    try {
        decoded = utf8_to_str(tok);
    } catch (const Error& e) {
        fail(line, std::string("bad token \"") + tok + "\": " + e.what());
    }
    Str out;
    for (std::size_t i = 0; i < decoded.size();) {
        if (decoded[i] == U'(') {
            if (i + 4 >= decoded.size() || decoded[i + 2] != U',' || decoded[i + 4] != U')')
                fail(line, "malformed pair inside \"" + tok + "\"");
            try {
                out.push_back(compose_symbol(decoded[i + 1], decoded[i + 3]));
            } catch (const Error& e) {
                fail(line, std::string("bad pair inside \"") + tok + "\": " + e.what());
            }
            i += 5;
        } else if (decoded[i] == U')' || decoded[i] == U',') {
            fail(line, "stray '" + std::string(1, static_cast<char>(decoded[i])) +
                           "' inside \"" + tok + "\"");
        } else {
            out.push_back(decoded[i]);
            ++i;
        }
    }
    return out;
}

Alphabet parse_alphabet(const std::vector<std::string>& toks, std::size_t line) {
    std::vector<Symbol> symbols;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        Symbol s = parse_symbol_token(toks[i], line);
        if (s == kLambda) fail(line, "the placeholder λ cannot be an alphabet symbol");
        symbols.push_back(s);
    }
    try {
        return Alphabet(symbols, /*allow_marks=*/true);
    } catch (const Error& e) {
        fail(line, e.what());
    }
}

std::uint64_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a nonnegative integer, got \"" + tok + "\"");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        fail(line, "integer out of range: \"" + tok + "\"");
    }
}

bool is_lambda(const std::string& tok) { return tok == "λ"; }

std::string symbol_token(Symbol s) {
    if (s == kLambda)
        throw InputError("the placeholder λ cannot be serialized as a symbol");
    return symbol_utf8(s);
}

void check_state_name(const std::string& name) {
    if (name.empty()) throw InputError("state names must be nonempty");
    if (name == "->") throw InputError("\"->\" is reserved and cannot name a state");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw InputError("state name \"" + name + "\" contains whitespace");
}

} // namespace

MachineSpec parse_machine(const std::string& text) {
    MachineSpec spec;
    std::set<std::string> seen;
    bool have_bound = false;

    auto once = [&](const std::string& key, std::size_t line) {
        if (!seen.insert(key).second) fail(line, "duplicate key \"" + key + "\"");
    };

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> toks = split_tokens(line);
        if (toks.empty()) continue;
        std::string key = toks[0];
        if (!key.empty() && key.back() == ':') {
            key.pop_back();
        } else if (key != "machine") {
            // Only the machine name line may omit the colon.
            fail(lineno, "expected \"key:\", got \"" + key + "\"");
        }

        if (key == "machine") {
            once(key, lineno);
            if (toks.size() != 2) fail(lineno, "machine takes exactly one name");
            check_state_name(toks[1]);
            spec.name = toks[1];
        } else if (key == "input") {
            once(key, lineno);
            spec.input = parse_alphabet(toks, lineno);
        } else if (key == "stack") {
            once(key, lineno);
            spec.stack = parse_alphabet(toks, lineno);
        } else if (key == "output") {
            once(key, lineno);
            spec.output = parse_alphabet(toks, lineno);
        } else if (key == "query") {
            once(key, lineno);
            spec.query = parse_alphabet(toks, lineno);
        } else if (key == "start") {
            once(key, lineno);
            if (toks.size() != 2) fail(lineno, "start takes exactly one state");
            check_state_name(toks[1]);
            spec.start = toks[1];
        } else if (key == "bottom") {
            once(key, lineno);
            if (toks.size() != 2) fail(lineno, "bottom takes exactly one symbol");
            spec.bottom = parse_symbol_token(toks[1], lineno);
        } else if (key == "accept") {
            once(key, lineno);
            spec.accepting.assign(toks.begin() + 1, toks.end());
            for (const std::string& s : spec.accepting) check_state_name(s);
        } else if (key == "reject") {
            once(key, lineno);
            spec.rejecting.assign(toks.begin() + 1, toks.end());
            for (const std::string& s : spec.rejecting) check_state_name(s);
        } else if (key == "bound") {
            once(key, lineno);
            if (toks.size() != 3) fail(lineno, "bound takes slope and intercept");
            spec.step_bound.slope = parse_count(toks[1], lineno);
            spec.step_bound.intercept = parse_count(toks[2], lineno);
            have_bound = true;
        } else if (key == "qstates") {
            once(key, lineno);
            if (toks.size() != 4) fail(lineno, "qstates takes query, yes, and no states");
            for (int i : {1, 2, 3}) check_state_name(toks[i]);
            spec.qstates = QueryStates{toks[1], toks[2], toks[3]};
        } else if (key == "trans") {
            // Arrow form: trans: from read top -> to push emit [query-emit].
            // The arrow may be omitted.
            std::vector<std::string> f(toks.begin() + 1, toks.end());
            if (f.size() >= 4 && f[3] == "->") f.erase(f.begin() + 3);
            if (f.size() != 6 && f.size() != 7)
                fail(lineno, "trans takes from read top -> to push emit [query-emit]");
            Transition t;
            check_state_name(f[0]);
            check_state_name(f[3]);
            t.from = f[0];
            if (!is_lambda(f[1])) t.read = parse_symbol_token(f[1], lineno);
            t.top = parse_symbol_token(f[2], lineno);
            t.to = f[3];
            if (!is_lambda(f[4])) t.push = parse_string_token(f[4], lineno);
            if (!is_lambda(f[5])) t.emit = parse_symbol_token(f[5], lineno);
            if (f.size() == 7 && !is_lambda(f[6]))
                t.query_emit = parse_symbol_token(f[6], lineno);
            spec.transitions.push_back(std::move(t));
        } else {
            fail(lineno, "unknown key \"" + key + "\"");
        }
    }

    for (const char* req : {"machine", "input", "stack", "output", "start", "bottom",
                            "accept"})
        if (!seen.count(req))
            throw InputError(std::string("machine file: missing required key \"") + req +
                             "\"");
    if (!have_bound) throw InputError("machine file: missing required key \"bound\"");
    return spec;
}

std::string serialize_machine(const MachineSpec& spec) {
    check_state_name(spec.name);
    check_state_name(spec.start);
    for (const auto& s : spec.accepting) check_state_name(s);
    for (const auto& s : spec.rejecting) check_state_name(s);

    std::ostringstream out;
    auto alphabet_line = [&](const char* key, const Alphabet& a) {
        out << key << ":";
        for (Symbol s : a.symbols()) out << ' ' << symbol_token(s);
        out << '\n';
    };

    out << "machine: " << spec.name << '\n';
    alphabet_line("input", spec.input);
    alphabet_line("stack", spec.stack);
    alphabet_line("output", spec.output);
    if (spec.query) alphabet_line("query", *spec.query);
    out << "start: " << spec.start << '\n';
    out << "bottom: " << symbol_token(spec.bottom) << '\n';
    out << "accept:";
    for (const auto& s : spec.accepting) out << ' ' << s;
    out << '\n';
    if (!spec.rejecting.empty()) {
        out << "reject:";
        for (const auto& s : spec.rejecting) out << ' ' << s;
        out << '\n';
    }
    out << "bound: " << spec.step_bound.slope << ' ' << spec.step_bound.intercept << '\n';
    if (spec.qstates)
        out << "qstates: " << spec.qstates->query << ' ' << spec.qstates->yes << ' '
            << spec.qstates->no << '\n';
    for (const Transition& t : spec.transitions) {
        check_state_name(t.from);
        check_state_name(t.to);
        out << "trans: " << t.from << ' ' << (t.read ? symbol_token(*t.read) : "λ")
            << ' ' << symbol_token(t.top) << " -> " << t.to << ' ';
        if (t.push.empty()) {
            out << "λ";
        } else {
            for (Symbol s : t.push) out << symbol_token(s);
        }
        out << ' ' << (t.emit ? symbol_token(*t.emit) : "λ");
        if (t.query_emit) out << ' ' << symbol_token(*t.query_emit);
        out << '\n';
    }
    return out.str();
}

MachineSpec load_machine(const std::string& path, bool validate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open machine file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    MachineSpec spec;
    try {
        spec = parse_machine(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    if (validate) {
        ValidationReport report = validate_spec(spec);
        if (!report.ok())
            throw ValidationError(path + ": " + report.describe());
    }
    return spec;
}

void save_machine(const MachineSpec& spec, const std::string& path) {
    std::string text = serialize_machine(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write machine file: " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

} // namespace pdtfun
