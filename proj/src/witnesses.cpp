#include "pdtfun/witnesses.hpp"

#include <algorithm>
#include <sstream>

#include "pdtfun/errors.hpp"
#include "pdtfun/optimize.hpp"

namespace pdtfun {
namespace {

constexpr Symbol k0 = U'0';
constexpr Symbol k1 = U'1';
const std::vector<Symbol> kBin{k0, k1};

Alphabet bin_alphabet() { return Alphabet(kBin); }
Alphabet binh_alphabet() { return Alphabet({k0, k1, kPad}, true); }
Alphabet binn_alphabet() { return Alphabet({k0, k1, kExt}, true); }
Alphabet binnh_alphabet() { return Alphabet({k0, k1, kExt, kPad}, true); }
Alphabet empty_alphabet() { return Alphabet(std::vector<Symbol>{}); }

Transition tr(std::string from, std::optional<Symbol> read, Symbol top, std::string to,
              Str push, std::optional<Symbol> emit = std::nullopt,
              std::optional<Symbol> qemit = std::nullopt) {
    Transition t;
    t.from = std::move(from);
    t.read = read;
    t.top = top;
    t.to = std::move(to);
    t.push = std::move(push);
    t.emit = emit;
    t.query_emit = qemit;
    return t;
}

// Stack alphabet {Z, 0, 1}: the three possible tops for push-phase states.
const std::vector<Symbol> kTopsZ01{U'Z', k0, k1};

std::string render_set(const OutputSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const Str& y : s) {
        if (!first) out << ", ";
        first = false;
        out << (y.empty() ? "()" : to_utf8(y));
    }
    out << '}';
    return out.str();
}

} // namespace

MachineSpec make_pal_sub() {
    MachineSpec m;
    m.name = "pal_sub";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 6};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "skip_l", {U'Z'}));
    for (Symbol s : kBin) {
        t.push_back(tr("skip_l", s, U'Z', "skip_l", {U'Z'}));
        t.push_back(tr("skip_r", s, U'Z', "skip_r", {U'Z'}));
    }
    t.push_back(tr("skip_l", std::nullopt, U'Z', "grow", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) {
            t.push_back(tr("grow", s, top, "grow", Str{s, top}, s));
            t.push_back(tr("grow", s, top, "shrink", Str{top}, s));  // odd middle
        }
        t.push_back(tr("grow", std::nullopt, top, "shrink", Str{top}));  // even middle
    }
    for (Symbol s : kBin) t.push_back(tr("shrink", s, s, "shrink", {}, s));
    t.push_back(tr("shrink", std::nullopt, U'Z', "skip_r", {U'Z'}));
    t.push_back(tr("skip_r", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_eta_all() {
    MachineSpec m;
    m.name = "eta_all";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z'});
    m.output = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "scan", {U'Z'}, k1));
    for (Symbol s : kBin) t.push_back(tr("scan", s, U'Z', "scan", {U'Z'}));
    t.push_back(tr("scan", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_reject_all() {
    MachineSpec m;
    m.name = "reject_all";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z'});
    m.output = empty_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.step_bound = {0, 1};
    return m;
}

MachineSpec make_eta_pal() {
    MachineSpec m;
    m.name = "eta_pal";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 4};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "grow", {U'Z'}, k1));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) {
            t.push_back(tr("grow", s, top, "grow", Str{s, top}));
            t.push_back(tr("grow", s, top, "shrink", Str{top}));  // odd middle
        }
        t.push_back(tr("grow", std::nullopt, top, "shrink", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("shrink", s, s, "shrink", {}));
    t.push_back(tr("shrink", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_chi_pal() {
    MachineSpec m = make_eta_pal();
    m.name = "chi_pal";
    m.step_bound = {1, 4};
    auto& t = m.transitions;
    // Second branch: certify a mismatch x_i != x_j at mirrored positions by
    // counting i pushed markers against the n-1-j symbols after j.
    t.push_back(tr("go", kLeftEnd, U'Z', "mark", {U'Z'}, k0));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin)
            t.push_back(tr("mark", s, top, "mark", Str{k0, top}));  // marker per symbol
        t.push_back(tr("mark", k0, top, "saw0", Str{top}));
        t.push_back(tr("mark", k1, top, "saw1", Str{top}));
        for (Symbol s : kBin) {
            t.push_back(tr("saw0", s, top, "saw0", Str{top}));
            t.push_back(tr("saw1", s, top, "saw1", Str{top}));
        }
        t.push_back(tr("saw0", k1, top, "drain", Str{top}));
        t.push_back(tr("saw1", k0, top, "drain", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("drain", s, k0, "drain", {}));
    t.push_back(tr("drain", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_l_pal() {
    MachineSpec m;
    m.name = "l_pal";
    m.input = binh_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = empty_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "rd", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("rd", s, top, "rd", Str{s, top}));
        t.push_back(tr("rd", kPad, top, "md", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("md", s, s, "md", {}));
    t.push_back(tr("md", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_track_eq() {
    const Symbol p00 = compose_symbol(k0, k0);
    const Symbol p11 = compose_symbol(k1, k1);
    const Symbol phh = compose_symbol(kPad, kPad);
    const Symbol p0h = compose_symbol(k0, kPad);
    const Symbol p1h = compose_symbol(k1, kPad);
    MachineSpec m;
    m.name = "track_eq";
    m.input = Alphabet({p00, p11, phh, p0h, p1h});
    m.stack = Alphabet({U'Z'});
    m.output = empty_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "s0", {U'Z'}));
    t.push_back(tr("s0", p00, U'Z', "s0", {U'Z'}));
    t.push_back(tr("s0", p11, U'Z', "s0", {U'Z'}));
    t.push_back(tr("s0", phh, U'Z', "s1", {U'Z'}));
    t.push_back(tr("s1", p0h, U'Z', "s1", {U'Z'}));
    t.push_back(tr("s1", p1h, U'Z', "s1", {U'Z'}));
    t.push_back(tr("s1", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_strip_suffix() {
    MachineSpec m;
    m.name = "strip_suffix";
    m.input = binh_alphabet();
    m.stack = Alphabet({U'Z'});
    m.output = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "pre", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("pre", s, U'Z', "pre", {U'Z'}));
    t.push_back(tr("pre", kPad, U'Z', "post", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("post", s, U'Z', "post", {U'Z'}, s));
    t.push_back(tr("post", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_dup_emit_rev() {
    MachineSpec m;
    m.name = "dup_emit_rev";
    m.input = binn_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = binn_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {2, 4};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "cp", {U'Z'}));
    t.push_back(tr("go", kLeftEnd, U'Z', "m0", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("cp", s, top, "cp", Str{s, top}, s));
        t.push_back(tr("cp", kRightEnd, top, "rv", Str{top}, kExt));
    }
    for (Symbol s : kBin) t.push_back(tr("rv", std::nullopt, s, "rv", {}, s));
    t.push_back(tr("rv", std::nullopt, U'Z', "acc", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("m0", s, U'Z', "m0", {U'Z'}));
    t.push_back(tr("m0", kExt, U'Z', "m1", {U'Z'}));
    for (Symbol s : {k0, k1, kExt}) t.push_back(tr("m1", s, U'Z', "m1", {U'Z'}));
    t.push_back(tr("m1", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_rev_tail() {
    MachineSpec m;
    m.name = "rev_tail";
    m.input = binn_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = binn_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {2, 4};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "cu", {U'Z'}));
    t.push_back(tr("go", kLeftEnd, U'Z', "z0", {U'Z'}));
    t.push_back(tr("go", kLeftEnd, U'Z', "t0", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("cu", s, U'Z', "cu", {U'Z'}, s));
    t.push_back(tr("cu", kExt, U'Z', "pv", {U'Z'}, kExt));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("pv", s, top, "pv", Str{s, top}));
        t.push_back(tr("pv", kRightEnd, top, "rw", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("rw", std::nullopt, s, "rw", {}, s));
    t.push_back(tr("rw", std::nullopt, U'Z', "acc", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("z0", s, U'Z', "z0", {U'Z'}));
    t.push_back(tr("z0", kRightEnd, U'Z', "acc", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("t0", s, U'Z', "t0", {U'Z'}));
    t.push_back(tr("t0", kExt, U'Z', "t1", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("t1", s, U'Z', "t1", {U'Z'}));
    t.push_back(tr("t1", kExt, U'Z', "t2", {U'Z'}));
    for (Symbol s : {k0, k1, kExt}) t.push_back(tr("t2", s, U'Z', "t2", {U'Z'}));
    t.push_back(tr("t2", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_copy_query() {
    MachineSpec m;
    m.name = "copy_query";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z'});
    m.output = bin_alphabet();
    m.query = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "t", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("t", s, U'Z', "t", {U'Z'}, s, s));
    t.push_back(tr("t", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

MachineSpec make_neq_pair() {
    MachineSpec m;
    m.name = "neq_pair";
    m.input = binh_alphabet();
    m.stack = Alphabet({U'Z', U'M'});
    m.output = empty_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"aa"};
    m.step_bound = {1, 3};
    const std::vector<Symbol> tops{U'Z', U'M'};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "la", {U'Z'}));
    t.push_back(tr("go", kLeftEnd, U'Z', "b0", {U'Z'}));
    // Length branch: count the left block up, the right block down.
    for (Symbol top : tops) {
        for (Symbol s : kBin) t.push_back(tr("la", s, top, "la", Str{U'M', top}));
        t.push_back(tr("la", kPad, top, "lb", Str{top}));
    }
    for (Symbol s : kBin) {
        t.push_back(tr("lb", s, U'M', "lb", {}));
        t.push_back(tr("lb", s, U'Z', "lc", {U'Z'}));  // right block is longer
        t.push_back(tr("lc", s, U'Z', "lc", {U'Z'}));
    }
    t.push_back(tr("lb", kRightEnd, U'M', "aa", {U'M'}));  // left block is longer
    t.push_back(tr("lc", kRightEnd, U'Z', "aa", {U'Z'}));
    // Mismatch branch: push a marker per symbol before the guessed position,
    // remember that symbol, then pop one marker per right-block symbol; the
    // markers run out exactly at the aligned position.
    for (Symbol top : tops) {
        for (Symbol s : kBin) t.push_back(tr("b0", s, top, "b0", Str{U'M', top}));
        t.push_back(tr("b0", k0, top, "saw0", Str{top}));
        t.push_back(tr("b0", k1, top, "saw1", Str{top}));
        for (Symbol s : kBin) {
            t.push_back(tr("saw0", s, top, "saw0", Str{top}));
            t.push_back(tr("saw1", s, top, "saw1", Str{top}));
        }
        t.push_back(tr("saw0", kPad, top, "al0", Str{top}));
        t.push_back(tr("saw1", kPad, top, "al1", Str{top}));
    }
    for (Symbol s : kBin) {
        t.push_back(tr("al0", s, U'M', "al0", {}));
        t.push_back(tr("al1", s, U'M', "al1", {}));
    }
    t.push_back(tr("al0", k1, U'Z', "tail", {U'Z'}));
    t.push_back(tr("al1", k0, U'Z', "tail", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("tail", s, U'Z', "tail", {U'Z'}));
    t.push_back(tr("tail", kRightEnd, U'Z', "aa", {U'Z'}));
    return m;
}

MachineSpec make_square_base() {
    MachineSpec m;
    m.name = "square_base";
    m.input = bin_alphabet();
    m.stack = Alphabet({U'Z'});
    m.output = bin_alphabet();
    m.query = binh_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"ay"};
    m.rejecting = {"rn"};
    m.step_bound = {1, 7};
    m.qstates = QueryStates{"qq", "ay", "rn"};
    auto& t = m.transitions;
    t.push_back(tr("go", kLeftEnd, U'Z', "u0", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("u0", s, U'Z', "u0", {U'Z'}));
    t.push_back(tr("u0", std::nullopt, U'Z', "x1", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("x1", s, U'Z', "x1", {U'Z'}, s, s));
    t.push_back(tr("x1", std::nullopt, U'Z', "x2", {U'Z'}, std::nullopt, kPad));
    for (Symbol s : kBin)
        t.push_back(tr("x2", s, U'Z', "x2", {U'Z'}, std::nullopt, s));
    t.push_back(tr("x2", std::nullopt, U'Z', "v0", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("v0", s, U'Z', "v0", {U'Z'}));
    t.push_back(tr("v0", kRightEnd, U'Z', "qq", {U'Z'}));
    return m;
}

MachineSpec make_rev_pairs() {
    MachineSpec m;
    m.name = "rev_pairs";
    m.input = binnh_alphabet();
    m.stack = Alphabet({U'Z', k0, k1});
    m.output = bin_alphabet();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    auto& t = m.transitions;
    // Inputs have the shape x1.x2.x3#y1.y2.y3 with binary blocks and "." the
    // extension mark; anything else only reaches the lam branch. Each pi
    // branch emits x_i while pushing it, then emits y_i while pop-matching,
    // which succeeds exactly when x_i is the reversal of y_i.
    t.push_back(tr("go", kLeftEnd, U'Z', "lam", {U'Z'}));
    for (Symbol s : {k0, k1, kExt, kPad}) t.push_back(tr("lam", s, U'Z', "lam", {U'Z'}));
    t.push_back(tr("lam", kRightEnd, U'Z', "acc", {U'Z'}));

    t.push_back(tr("go", kLeftEnd, U'Z', "p1_read", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("p1_read", s, top, "p1_read", Str{s, top}, s));
        t.push_back(tr("p1_read", kExt, top, "p1_sx2", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p1_sx2", s, top, "p1_sx2", Str{top}));
        t.push_back(tr("p1_sx2", kExt, top, "p1_sx3", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p1_sx3", s, top, "p1_sx3", Str{top}));
        t.push_back(tr("p1_sx3", kPad, top, "p1_pop", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("p1_pop", s, s, "p1_pop", {}, s));
    t.push_back(tr("p1_pop", kExt, U'Z', "p1_sy2", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p1_sy2", s, U'Z', "p1_sy2", {U'Z'}));
    t.push_back(tr("p1_sy2", kExt, U'Z', "p1_sy3", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p1_sy3", s, U'Z', "p1_sy3", {U'Z'}));
    t.push_back(tr("p1_sy3", kRightEnd, U'Z', "acc", {U'Z'}));

    t.push_back(tr("go", kLeftEnd, U'Z', "p2_sx1", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p2_sx1", s, U'Z', "p2_sx1", {U'Z'}));
    t.push_back(tr("p2_sx1", kExt, U'Z', "p2_read", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("p2_read", s, top, "p2_read", Str{s, top}, s));
        t.push_back(tr("p2_read", kExt, top, "p2_sx3", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p2_sx3", s, top, "p2_sx3", Str{top}));
        t.push_back(tr("p2_sx3", kPad, top, "p2_sy1", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p2_sy1", s, top, "p2_sy1", Str{top}));
        t.push_back(tr("p2_sy1", kExt, top, "p2_pop", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("p2_pop", s, s, "p2_pop", {}, s));
    t.push_back(tr("p2_pop", kExt, U'Z', "p2_sy3", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p2_sy3", s, U'Z', "p2_sy3", {U'Z'}));
    t.push_back(tr("p2_sy3", kRightEnd, U'Z', "acc", {U'Z'}));

    t.push_back(tr("go", kLeftEnd, U'Z', "p3_sx1", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p3_sx1", s, U'Z', "p3_sx1", {U'Z'}));
    t.push_back(tr("p3_sx1", kExt, U'Z', "p3_sx2", {U'Z'}));
    for (Symbol s : kBin) t.push_back(tr("p3_sx2", s, U'Z', "p3_sx2", {U'Z'}));
    t.push_back(tr("p3_sx2", kExt, U'Z', "p3_read", {U'Z'}));
    for (Symbol top : kTopsZ01) {
        for (Symbol s : kBin) t.push_back(tr("p3_read", s, top, "p3_read", Str{s, top}, s));
        t.push_back(tr("p3_read", kPad, top, "p3_sy1", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p3_sy1", s, top, "p3_sy1", Str{top}));
        t.push_back(tr("p3_sy1", kExt, top, "p3_sy2", Str{top}));
        for (Symbol s : kBin) t.push_back(tr("p3_sy2", s, top, "p3_sy2", Str{top}));
        t.push_back(tr("p3_sy2", kExt, top, "p3_pop", Str{top}));
    }
    for (Symbol s : kBin) t.push_back(tr("p3_pop", s, s, "p3_pop", {}, s));
    t.push_back(tr("p3_pop", kRightEnd, U'Z', "acc", {U'Z'}));
    return m;
}

OutputSet brute_pal_sub(const Str& w) {
    OutputSet out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t len = 0; i + len <= w.size(); ++len) {
            Str sub = w.substr(i, len);
            if (brute_is_palindrome(sub)) out.insert(std::move(sub));
        }
    return out;
}

bool brute_is_palindrome(const Str& w) {
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

bool brute_dup_hash(const Str& w) {
    const std::size_t cut = w.find(kPad);
    if (cut == Str::npos || w.find(kPad, cut + 1) != Str::npos) return false;
    return w.substr(0, cut) == w.substr(cut + 1);
}

bool brute_l_pal(const Str& w) {
    const std::size_t cut = w.find(kPad);
    if (cut == Str::npos || w.find(kPad, cut + 1) != Str::npos) return false;
    Str left = w.substr(0, cut);
    std::reverse(left.begin(), left.end());
    return left == w.substr(cut + 1);
}

OutputSet brute_f_dup(const Str& w) {
    if (w.find(kExt) != Str::npos) return {Str{}};
    return {w + Str{kExt} + w};
}

bool brute_dup_nat(const Str& w) {
    const std::size_t cut = w.find(kExt);
    if (cut == Str::npos || w.find(kExt, cut + 1) != Str::npos) return false;
    return w.substr(0, cut) == w.substr(cut + 1);
}

OutputSet brute_square_sub(const Str& w) {
    OutputSet out;
    for (std::size_t start = 0; start <= w.size(); ++start)
        for (std::size_t len = 0; start + 2 * len <= w.size(); ++len)
            if (w.compare(start, len, w, start + len, len) == 0)
                out.insert(w.substr(start, len));
    return out;
}

OutputSet brute_rev_pairs(const Str& w) {
    OutputSet out{Str{}};
    const std::size_t cut = w.find(kPad);
    if (cut == Str::npos || w.find(kPad, cut + 1) != Str::npos) return out;
    auto split3 = [](const Str& side) -> std::optional<std::vector<Str>> {
        std::vector<Str> blocks{Str{}};
        for (Symbol s : side) {
            if (s == kExt)
                blocks.emplace_back();
            else
                blocks.back().push_back(s);
        }
        if (blocks.size() != 3) return std::nullopt;
        return blocks;
    };
    auto xs = split3(w.substr(0, cut));
    auto ys = split3(w.substr(cut + 1));
    if (!xs || !ys) return out;
    for (int i = 0; i < 3; ++i) {
        Str rev = (*ys)[i];
        std::reverse(rev.begin(), rev.end());
        if ((*xs)[i] == rev) out.insert((*xs)[i] + (*ys)[i]);
    }
    return out;
}

std::vector<std::pair<std::string, MachineSpec>> machine_corpus() {
    return {
        {"pal_sub.m", make_pal_sub()},
        {"eta_pal.m", make_eta_pal()},
        {"chi_pal.m", make_chi_pal()},
        {"eta_all.m", make_eta_all()},
        {"reject_all.m", make_reject_all()},
        {"l_pal.m", make_l_pal()},
        {"track_eq.m", make_track_eq()},
        {"strip_suffix.m", make_strip_suffix()},
        {"dup_emit_rev.m", make_dup_emit_rev()},
        {"rev_tail.m", make_rev_tail()},
        {"copy_query.m", make_copy_query()},
        {"neq_pair.m", make_neq_pair()},
        {"square_base.m", make_square_base()},
        {"rev_pairs.m", make_rev_pairs()},
    };
}

std::vector<WitnessEntry> catalog(const EngineLimits& limits) {
    std::vector<WitnessEntry> entries;
    const Alphabet bin = bin_alphabet();

    {
        WitnessEntry e;
        e.name = "pal_sub";
        e.description = "every palindromic substring of a binary input";
        e.enum_alphabet = bin;
        e.test_len = 8;
        e.construction = from_machine(make_pal_sub(), limits);
        e.brute = from_evaluator("pal_sub_brute", bin, bin, {1, 1}, brute_pal_sub);
        e.machine_files = {"pal_sub.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "eta_pal";
        e.description = "partial indicator of binary palindromes, undefined off them";
        e.enum_alphabet = bin;
        e.test_len = 8;
        e.construction = from_machine(make_eta_pal(), limits);
        e.brute = quasi_char_fn("eta_pal_brute", bin, brute_is_palindrome);
        e.machine_files = {"eta_pal.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "chi_pal";
        e.description = "total indicator of binary palindromes";
        e.enum_alphabet = bin;
        e.test_len = 8;
        e.construction = from_machine(make_chi_pal(), limits);
        e.brute = char_fn("chi_pal_brute", bin, brute_is_palindrome);
        e.machine_files = {"chi_pal.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "dup_hash";
        e.description = "decides w = x#x by sending the suffix through an advice "
                        "function into a track acceptor";
        e.enum_alphabet = binh_alphabet();
        e.test_len = 6;
        const MachineSpec track = make_track_eq();
        const FunctionHandle h = from_machine(make_strip_suffix(), limits);
        e.construction =
            char_fn("dup_hash_advice", binh_alphabet(), [track, h, limits](const Str& x) {
                return advice_membership(track, h, x, limits);
            });
        e.brute = char_fn("dup_hash_brute", binh_alphabet(), brute_dup_hash);
        e.machine_files = {"track_eq.m", "strip_suffix.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "l_pal";
        e.description = "decides w = x#reverse(x) by stack matching";
        e.enum_alphabet = binh_alphabet();
        e.test_len = 6;
        const Oracle lang = language_from_machine(make_l_pal(), limits);
        e.construction = char_fn("l_pal_lang", binh_alphabet(), lang.membership);
        e.brute = char_fn("l_pal_brute", binh_alphabet(), brute_l_pal);
        e.machine_files = {"l_pal.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "dup_fn";
        e.description = "x -> x.x around the extension mark, built by composing "
                        "two single-valued transducers";
        e.enum_alphabet = binn_alphabet();
        e.test_len = 6;
        e.construction = compose(from_machine(make_rev_tail(), limits),
                                 from_machine(make_dup_emit_rev(), limits));
        e.brute = from_evaluator("dup_fn_brute", binn_alphabet(), binn_alphabet(), {2, 2},
                                 brute_f_dup);
        e.machine_files = {"dup_emit_rev.m", "rev_tail.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "dup_lang";
        e.description = "decides w = x.x through the range of the duplicating "
                        "composition";
        e.enum_alphabet = binn_alphabet();
        e.test_len = 6;
        const FunctionHandle dup = compose(from_machine(make_rev_tail(), limits),
                                           from_machine(make_dup_emit_rev(), limits));
        e.construction = char_fn("dup_lang_range", binn_alphabet(), [dup](const Str& w) {
            const std::size_t cut = w.find(kExt);
            if (cut == Str::npos) return false;
            return dup.eval(w.substr(0, cut)).count(w) > 0;
        });
        e.brute = char_fn("dup_lang_brute", binn_alphabet(), brute_dup_nat);
        e.machine_files = {"dup_emit_rev.m", "rev_tail.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "square_sub";
        e.description = "repeated-block substrings found with one equality query "
                        "against a block-inequality acceptor";
        e.enum_alphabet = bin;
        e.test_len = 8;
        e.construction = build_level(2, make_square_base(), {make_neq_pair()}, limits);
        e.brute = from_evaluator("square_sub_brute", bin, bin, {1, 1}, brute_square_sub);
        e.machine_files = {"square_base.m", "neq_pair.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "rev_pairs";
        e.description = "the empty string plus x_i y_i for every aligned block "
                        "pair with x_i the reversal of y_i";
        e.enum_alphabet = binnh_alphabet();
        e.test_len = 6;
        e.construction = from_machine(make_rev_pairs(), limits);
        e.brute = from_evaluator("rev_pairs_brute", binnh_alphabet(), bin, {1, 1},
                                 brute_rev_pairs);
        e.machine_files = {"rev_pairs.m"};
        entries.push_back(std::move(e));
    }
    {
        WitnessEntry e;
        e.name = "rev_pairs_max";
        e.description = "dictionary-maximal value of the block-pair function";
        e.enum_alphabet = binnh_alphabet();
        e.test_len = 6;
        e.construction = opt_refinement(from_machine(make_rev_pairs(), limits),
                                        OptMode::maximum);
        e.brute = from_evaluator("rev_pairs_max_brute", binnh_alphabet(), bin, {1, 1},
                                 [bin](const Str& w) -> OutputSet {
                                     return {extremal(brute_rev_pairs(w),
                                                      OptMode::maximum, bin)};
                                 });
        e.machine_files = {"rev_pairs.m"};
        entries.push_back(std::move(e));
    }
    return entries;
}

WitnessVerdict verify_entry(const WitnessEntry& entry, std::size_t max_len) {
    for (const Str& x : strings_up_to(entry.enum_alphabet, max_len)) {
        OutputSet got = entry.construction.eval(x);
        OutputSet want = entry.brute.eval(x);
        if (got != want) {
            WitnessVerdict v;
            v.ok = false;
            v.mismatch_input = x;
            v.detail = entry.name + " at \"" + to_utf8(x) + "\": construction " +
                       render_set(got) + " vs brute " + render_set(want);
            return v;
        }
    }
    return {};
}

} // namespace pdtfun
