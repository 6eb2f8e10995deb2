#include "pdtfun/strings.hpp"

#include <algorithm>
#include <sstream>

namespace pdtfun {

namespace {

constexpr char32_t kMaxScalar = 0x10FFFF;
constexpr char32_t kMaxComponent = 0xFFFF;

bool is_plain_scalar(Symbol s) { return s <= kMaxScalar; }

} // namespace

bool is_composed(Symbol s) { return s > kMaxScalar; }

Symbol compose_symbol(Symbol upper, Symbol lower) {
    if (upper > kMaxComponent || lower > kMaxComponent)
        throw InputError("track component out of range (nested tracks are not supported)");
    if (upper == 0 || lower == 0)
        throw InputError("track component must be a symbol");
    return (upper << 16) | lower;
}

Symbol composed_upper(Symbol s) {
    if (!is_composed(s)) throw InputError("not a paired symbol");
    return s >> 16;
}

Symbol composed_lower(Symbol s) {
    if (!is_composed(s)) throw InputError("not a paired symbol");
    return s & kMaxComponent;
}

Str utf8_to_str(const std::string& text) {
    Str out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto bad = [&] { throw InputError("invalid UTF-8 at byte " + std::to_string(i)); };
    while (i < text.size()) {
        const unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t extra = 0;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 >> 5) == 0x6) {
            cp = b0 & 0x1F;
            extra = 1;
        } else if ((b0 >> 4) == 0xE) {
            cp = b0 & 0x0F;
            extra = 2;
        } else if ((b0 >> 3) == 0x1E) {
            cp = b0 & 0x07;
            extra = 3;
        } else {
            bad();
        }
        if (i + extra >= text.size()) bad();
        for (std::size_t k = 1; k <= extra; ++k) {
            const unsigned char bk = static_cast<unsigned char>(text[i + k]);
            if ((bk >> 6) != 0x2) bad();
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (cp > kMaxScalar) bad();
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string symbol_utf8(Symbol s) {
    if (is_composed(s))
        return "(" + symbol_utf8(composed_upper(s)) + "," + symbol_utf8(composed_lower(s)) + ")";
    if (!is_plain_scalar(s)) throw InputError("symbol out of range");
    std::string out;
    const char32_t cp = s;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string to_utf8(const Str& s) {
    std::string out;
    for (Symbol c : s) {
        if (is_composed(c)) throw InputError("paired symbol in plain UTF-8 conversion");
        out += symbol_utf8(c);
    }
    return out;
}

std::string render_string(const Str& s) {
    std::string out;
    for (Symbol c : s) out += symbol_utf8(c);
    return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols, bool allow_marks)
    : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const Symbol s = symbols_[i];
        if (s == kLeftEnd || s == kRightEnd)
            throw InputError("endmarker declared as an alphabet member");
        if (!allow_marks && (s == kPad || s == kExt))
            throw InputError("reserved mark '" + symbol_utf8(s) +
                             "' declared without opting in");
        if (s == U'(' || s == U')' || s == U',')
            throw InputError("'(' ')' ',' are reserved for paired-symbol syntax");
        if (!is_composed(s) && s > kMaxComponent)
            throw InputError("plain symbols must lie in the Basic Multilingual Plane");
        if (!rank_.emplace(s, static_cast<int>(i)).second)
            throw InputError("duplicate alphabet symbol '" + symbol_utf8(s) + "'");
    }
}

int Alphabet::rank(Symbol s) const {
    const auto it = rank_.find(s);
    return it == rank_.end() ? -1 : it->second;
}

bool Alphabet::contains_all(const Str& s) const {
    return std::all_of(s.begin(), s.end(), [&](Symbol c) { return contains(c); });
}

bool Alphabet::subset_of(const Alphabet& other) const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [&](Symbol c) { return other.contains(c); });
}

std::string Alphabet::describe() const {
    std::string out = "{";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += " ";
        out += symbol_utf8(symbols_[i]);
    }
    return out + "}";
}

Alphabet alphabet_of(const Str& symbols, bool allow_marks) {
    return Alphabet(std::vector<Symbol>(symbols.begin(), symbols.end()), allow_marks);
}

Ordering dict_compare(const Str& x, const Str& y, const Alphabet& alphabet) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int rx = alphabet.rank(x[i]);
        const int ry = alphabet.rank(y[i]);
        if (rx < 0)
            throw InputError("symbol '" + symbol_utf8(x[i]) + "' not in alphabet " +
                             alphabet.describe());
        if (ry < 0)
            throw InputError("symbol '" + symbol_utf8(y[i]) + "' not in alphabet " +
                             alphabet.describe());
        if (rx != ry) return rx < ry ? Ordering::less : Ordering::greater;
    }
    // Validate the tails too so malformed input never compares silently.
    for (std::size_t i = n; i < x.size(); ++i)
        if (!alphabet.contains(x[i]))
            throw InputError("symbol '" + symbol_utf8(x[i]) + "' not in alphabet " +
                             alphabet.describe());
    for (std::size_t i = n; i < y.size(); ++i)
        if (!alphabet.contains(y[i]))
            throw InputError("symbol '" + symbol_utf8(y[i]) + "' not in alphabet " +
                             alphabet.describe());
    if (x.size() == y.size()) return Ordering::equal;
    return x.size() < y.size() ? Ordering::less : Ordering::greater;
}

bool dict_less(const Str& x, const Str& y, const Alphabet& alphabet) {
    return dict_compare(x, y, alphabet) == Ordering::less;
}

TrackedString track_pair(const Str& x, const Str& y) {
    for (const Str* s : {&x, &y}) {
        for (Symbol c : *s) {
            if (c == kLeftEnd || c == kRightEnd)
                throw InputError("endmarker inside a tracked component");
            if (is_composed(c) || c > kMaxComponent)
                throw InputError("tracked components must be plain symbols");
        }
    }
    TrackedString t;
    t.upper = x;
    t.lower = y;
    const std::size_t n = std::max(x.size(), y.size());
    t.upper.resize(n, kPad);
    t.lower.resize(n, kPad);
    t.rendered.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.rendered.push_back(compose_symbol(t.upper[i], t.lower[i]));
    return t;
}

std::pair<Str, Str> track_split(const Str& rendered) {
    Str upper, lower;
    upper.reserve(rendered.size());
    lower.reserve(rendered.size());
    for (Symbol c : rendered) {
        if (!is_composed(c)) throw InputError("track contains a non-paired symbol");
        upper.push_back(composed_upper(c));
        lower.push_back(composed_lower(c));
    }
    while (!upper.empty() && upper.back() == kPad) upper.pop_back();
    while (!lower.empty() && lower.back() == kPad) lower.pop_back();
    return {upper, lower};
}

namespace {

void weave_marks(const Str& x, std::size_t pos, std::size_t budget, Str& acc,
                 std::set<Str>& out, std::size_t cap) {
    if (out.size() > cap) throw ResourceError("extension enumeration cap exceeded");
    if (pos == x.size()) {
        Str s = acc;
        out.insert(s);
        for (std::size_t k = 1; k <= budget; ++k) {
            s.push_back(kExt);
            out.insert(s);
        }
        return;
    }
    for (std::size_t k = 0; k <= budget; ++k) {
        Str s = acc;
        s.append(k, kExt);
        s.push_back(x[pos]);
        weave_marks(x, pos + 1, budget - k, s, out, cap);
    }
}

} // namespace

std::set<Str> natural_extensions(const Str& x, std::size_t max_len, std::size_t cap) {
    if (x.find(kExt) != Str::npos)
        throw InputError("extension mark already occurs in the base string");
    std::set<Str> out;
    if (max_len < x.size()) return out;
    Str acc;
    weave_marks(x, 0, max_len - x.size(), acc, out, cap);
    return out;
}

Str project_naturals(const Str& s) {
    Str out;
    out.reserve(s.size());
    for (Symbol c : s)
        if (c != kExt) out.push_back(c);
    return out;
}

std::vector<Str> strings_up_to(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Str> out;
    out.emplace_back();
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Symbol c : alphabet.symbols()) {
                Str s = out[i];
                s.push_back(c);
                out.push_back(std::move(s));
            }
        level_begin = level_end;
        if (level_begin == out.size()) break;  // empty alphabet
    }
    return out;
}

} // namespace pdtfun
