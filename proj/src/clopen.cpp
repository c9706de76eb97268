#include "teamind/clopen.hpp"

#include <algorithm>

namespace teamind {

namespace {

using Words = std::vector<Word>;

bool is_unit(const Words& w) { return w.size() == 1 && w[0].len == 0; }

// Split a sorted antichain (not containing the empty word) into the tails
// of its 0-branch and 1-branch. Sortedness is preserved: all 0-words
// precede all 1-words.
void branch(const Words& w, Words& zero, Words& one) {
    for (const Word& x : w) {
        (x.first_bit() ? one : zero).push_back(x.tail());
    }
}

// Reattach children under 0 and 1, merging the sibling pair (1, 1) into the
// unit. Children are normalized by induction, so this is the only merge
// site.
Words graft(const Words& zero, const Words& one) {
    if (is_unit(zero) && is_unit(one)) {
        return {Word::empty()};
    }
    Words out;
    out.reserve(zero.size() + one.size());
    for (const Word& x : zero) out.push_back(Word{static_cast<std::uint8_t>(x.len + 1), x.bits});
    for (const Word& x : one) {
        out.push_back(
            Word{static_cast<std::uint8_t>(x.len + 1), x.bits | (std::uint64_t{1} << x.len)});
    }
    return out;
}

Words meet_words(const Words& a, const Words& b) {
    if (a.empty() || b.empty()) return {};
    if (is_unit(a)) return b;
    if (is_unit(b)) return a;
    Words a0, a1, b0, b1;
    branch(a, a0, a1);
    branch(b, b0, b1);
    return graft(meet_words(a0, b0), meet_words(a1, b1));
}

Words join_words(const Words& a, const Words& b) {
    if (is_unit(a) || is_unit(b)) return {Word::empty()};
    if (a.empty()) return b;
    if (b.empty()) return a;
    Words a0, a1, b0, b1;
    branch(a, a0, a1);
    branch(b, b0, b1);
    return graft(join_words(a0, b0), join_words(a1, b1));
}

Words complement_words(const Words& a) {
    if (a.empty()) return {Word::empty()};
    if (is_unit(a)) return {};
    Words a0, a1;
    branch(a, a0, a1);
    return graft(complement_words(a0), complement_words(a1));
}

}  // namespace

ClopenSet meet(const ClopenSet& a, const ClopenSet& b) {
    return ClopenSet(meet_words(a.words_, b.words_));
}

ClopenSet join(const ClopenSet& a, const ClopenSet& b) {
    return ClopenSet(join_words(a.words_, b.words_));
}

ClopenSet complement(const ClopenSet& a) {
    return ClopenSet(complement_words(a.words_));
}

ClopenSet parse_clopen(const std::string& text) {
    auto trim = [](const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    std::string body = trim(text);
    if (body.empty()) {
        throw InputError("empty clopen literal (use - for the zero element)");
    }
    if (body == "-") {
        return ClopenSet::zero();
    }
    ClopenSet out = ClopenSet::zero();
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = trim(comma == std::string::npos ? body.substr(pos)
                                                          : body.substr(pos, comma - pos));
        if (tok.empty()) {
            throw InputError("empty word in clopen literal");
        }
        out = join(out, tok == "e" ? ClopenSet::one() : ClopenSet::cylinder(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string print_clopen(const ClopenSet& a) {
    if (a.is_zero()) return "-";
    std::string out;
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        if (i > 0) out += ',';
        const Word& w = a.words()[i];
        out += w.len == 0 ? "e" : w.to_string();
    }
    return out;
}

}  // namespace teamind
