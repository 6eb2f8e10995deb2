#ifndef PDTFUN_STRINGS_HPP
#define PDTFUN_STRINGS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdtfun/errors.hpp"

namespace pdtfun {

// A symbol is one Unicode scalar value, or a packed pair of them (see
// compose_symbol). Strings are sequences of symbols.
using Symbol = char32_t;
using Str = std::u32string;

inline constexpr Symbol kLeftEnd = U'¢';  // input tape left endmarker
inline constexpr Symbol kRightEnd = U'$';      // input tape right endmarker
inline constexpr Symbol kPad = U'#';           // track padding
inline constexpr Symbol kExt = U'♮';      // extension marker

// Paired symbols for two-track strings. Components must be plain symbols in
// the Basic Multilingual Plane so the pack stays injective; the packed value
// lands above the Unicode range and can never collide with a plain symbol.
bool is_composed(Symbol s);
Symbol compose_symbol(Symbol upper, Symbol lower);
Symbol composed_upper(Symbol s);
Symbol composed_lower(Symbol s);

// UTF-8 boundary helpers. utf8_to_str decodes scalar values only (no pair
// syntax); symbol_utf8 renders a pair as "(u,l)".
Str utf8_to_str(const std::string& text);
std::string to_utf8(const Str& s);
std::string symbol_utf8(Symbol s);
std::string render_string(const Str& s);

// A finite ordered symbol listing. Listing order is significant: it fixes
// dictionary order for every string over the alphabet. Endmarkers are never
// members; the pad and extension markers are members only when allow_marks
// is set (they are ordinary data symbols for track and extension alphabets).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols, bool allow_marks = false);

    bool contains(Symbol s) const { return rank_.count(s) != 0; }
    int rank(Symbol s) const;  // -1 when absent
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool contains_all(const Str& s) const;
    bool subset_of(const Alphabet& other) const;
    std::string describe() const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<Symbol, int> rank_;
};

Alphabet alphabet_of(const Str& symbols, bool allow_marks = false);

enum class Ordering { less, equal, greater };

// Dictionary order: a proper prefix ranks below its extensions; otherwise the
// first differing position decides by alphabet listing order. Distinct from
// shortlex ("ab" < "aba" but also "abbe" < "abc").
Ordering dict_compare(const Str& x, const Str& y, const Alphabet& alphabet);
bool dict_less(const Str& x, const Str& y, const Alphabet& alphabet);

// Two strings overlaid on one tape. The shorter component is padded on the
// right with the pad mark; rendered[i] packs (upper[i], lower[i]).
struct TrackedString {
    Str upper;
    Str lower;
    Str rendered;
};

TrackedString track_pair(const Str& x, const Str& y);

// Recover the pair from a rendered track by stripping trailing padding.
// Components may carry the pad mark as interior data (tracks like x#y over
// y need that); a component whose own data ends in the pad mark does not
// round-trip.
std::pair<Str, Str> track_split(const Str& rendered);

// All strings of length <= max_len whose extension-mark erasure equals x,
// i.e. every way of weaving extension marks into x. Empty when max_len < |x|.
std::set<Str> natural_extensions(const Str& x, std::size_t max_len,
                                 std::size_t cap = 10'000'000);

// Erase every extension mark.
Str project_naturals(const Str& s);

// Every string over the alphabet of length <= max_len, shortest first, then
// by listing order. Deterministic; used by bounded enumeration everywhere.
std::vector<Str> strings_up_to(const Alphabet& alphabet, std::size_t max_len);

} // namespace pdtfun

#endif
