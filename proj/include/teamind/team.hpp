#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "teamind/atom.hpp"
#include "teamind/error.hpp"
#include "teamind/finite_algebra.hpp"

namespace teamind {

/// Relation schema: ordered attribute names, nonempty and pairwise
/// distinct.
struct Schema {
    std::vector<std::string> attributes;

    /// Index of an attribute; throws InputError when absent.
    std::size_t index_of(const std::string& name) const;
};

/// A team (database): a schema plus a set of rows. Rows are value tuples of
/// exact strings, deduplicated preserving first occurrence; row ids are
/// 0..|rows|-1 and double as the universe for kernel algebras.
class Team {
public:
    /// Validates the schema and deduplicates rows; throws InputError on a
    /// bad schema or a row of the wrong width.
    Team(Schema schema, std::vector<std::vector<std::string>> rows);

    const Schema& schema() const { return schema_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& row(std::size_t i) const { return rows_[i]; }
    Universe universe() const { return Universe{rows_.size()}; }

    /// Column indices for a tuple of attribute names, in tuple order.
    std::vector<std::size_t> resolve(const AttributeTuple& tuple) const;

    /// The projection of row i to the resolved columns, as a single key
    /// string (length-prefixed, so distinct tuples never collide).
    std::string project_key(std::size_t i, const std::vector<std::size_t>& cols) const;

    /// The projection as a value tuple.
    std::vector<std::string> project(std::size_t i, const std::vector<std::size_t>& cols) const;

private:
    Schema schema_;
    std::vector<std::vector<std::string>> rows_;
};

enum class TeamFormat { csv, json };

/// Parses a team from CSV (first record = header, standard double-quote
/// escaping) or JSON (array of flat string-valued objects; the first
/// object's key order gives the schema). Rows are deduplicated. Malformed
/// input raises FormatError, with a line number for CSV.
Team load_team(const std::string& text, TeamFormat format);
Team load_team_file(const std::string& path, TeamFormat format);

/// The Boolean algebra generated by the column function of `x`: blocks are
/// the fibers {i : row_i(x) = value}. An empty tuple yields the trivial
/// algebra (one block, or none on the empty team).
FinitePartitionAlgebra kernel_algebra(const Team& team, const AttributeTuple& x);

}  // namespace teamind
