#include "teamind/atom.hpp"

namespace teamind {

std::string print_tuple(const AttributeTuple& tuple) {
    if (tuple.names.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < tuple.names.size(); ++i) {
        if (i > 0) out += ' ';
        out += tuple.names[i];
    }
    return out;
}

std::string print_atom(const DependencyAtom& atom) {
    switch (atom.kind) {
        case DependencyAtom::Kind::fd:
            return print_tuple(atom.tuples[0]) + " -> " + print_tuple(atom.tuples[1]);
        case DependencyAtom::Kind::emvd:
            return print_tuple(atom.tuples[0]) + " ->> " + print_tuple(atom.tuples[1]) + " | " +
                   print_tuple(atom.tuples[2]);
        case DependencyAtom::Kind::dep:
            return "dep(" + print_tuple(atom.tuples[0]) + "; " + print_tuple(atom.tuples[1]) +
                   ")";
        case DependencyAtom::Kind::ind:
            if (atom.tuples[1].empty()) {
                return print_tuple(atom.tuples[0]) + " _||_ " + print_tuple(atom.tuples[2]);
            }
            return print_tuple(atom.tuples[0]) + " _||_{" + print_tuple(atom.tuples[1]) + "} " +
                   print_tuple(atom.tuples[2]);
    }
    return "";
}

}  // namespace teamind
