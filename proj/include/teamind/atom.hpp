#pragma once

#include <string>
#include <vector>

namespace teamind {

/// A tuple of attribute names. Repetition is allowed and the tuple may be
/// empty; evaluation against a team follows tuple order.
struct AttributeTuple {
    std::vector<std::string> names;

    bool empty() const { return names.empty(); }
    bool operator==(const AttributeTuple&) const = default;
};

/// AST for the four atom kinds. FD/DEP and EMVD/IND are distinct nodes even
/// though they reduce to each other semantically; the kind is preserved
/// through parsing, checking, and report rendering.
struct DependencyAtom {
    enum class Kind { fd, emvd, dep, ind };

    Kind kind;
    // Positional roles: fd: {x, y}; emvd: {z, x, y}; dep: {u, v};
    // ind: {u, w, v}.
    std::vector<AttributeTuple> tuples;

    static DependencyAtom fd(AttributeTuple x, AttributeTuple y) {
        return {Kind::fd, {std::move(x), std::move(y)}};
    }
    static DependencyAtom emvd(AttributeTuple z, AttributeTuple x, AttributeTuple y) {
        return {Kind::emvd, {std::move(z), std::move(x), std::move(y)}};
    }
    static DependencyAtom dep(AttributeTuple u, AttributeTuple v) {
        return {Kind::dep, {std::move(u), std::move(v)}};
    }
    static DependencyAtom ind(AttributeTuple u, AttributeTuple w, AttributeTuple v) {
        return {Kind::ind, {std::move(u), std::move(w), std::move(v)}};
    }

    bool operator==(const DependencyAtom&) const = default;
};

/// Canonical rendering: "x y -> z", "z ->> x | y", "dep(u; v)",
/// "u _||_ v" / "u _||_{w} v". Empty tuples print as "()".
std::string print_atom(const DependencyAtom& atom);
std::string print_tuple(const AttributeTuple& tuple);

}  // namespace teamind
