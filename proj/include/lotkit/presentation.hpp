#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

/// One conjugation relation x_k x_i x_k^-1 = x_j, stored by generator name.
struct Relation {
    std::string conjugator;  // x_k
    std::string left;        // x_i
    std::string right;       // x_j

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// A group presentation whose relations are all conjugations. This is the
/// only presentation shape accepted anywhere: general words are rejected.
struct LotPresentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    friend bool operator==(const LotPresentation&, const LotPresentation&) = default;
};

/// Parses `< gen[, gen]* | rel[, rel]* >` where each relation reads
/// `k i k^-1 = j`. Commas count as whitespace; `^-1` is a single literal
/// token. Throws SyntaxError (with position), NonConjugationRelationError
/// (relation not of the conjugation shape, including i = j), or
/// UnknownGeneratorError.
LotPresentation parse_presentation(std::string_view text);

/// One vertex per generator, one edge x_i -> x_j labeled x_k per relation.
/// Throws DuplicateEdgeError if two relations induce an edge between the
/// same unordered vertex pair, NonConjugationRelationError if i = j.
LogGraph presentation_to_log(const LotPresentation& p);

/// Inverse of presentation_to_log: generators in vertex order, one relation
/// per edge in edge order.
LotPresentation log_to_presentation(const LogGraph& g);

/// Line-based LOT file format:
///   vertices: a b c
///   edge a b c
/// with `#` comments and blank lines ignored. Throws SyntaxError carrying
/// the offending line number.
LogGraph parse_lot_file(std::string_view text);

/// Canonical serialization: one vertices line in graph order, then one edge
/// line per edge in graph order. parse_lot_file(serialize_lot(g)) == g.
std::string serialize_lot(const LogGraph& g);

/// GraphViz digraph with labeled edges; highlighted vertices are drawn with
/// a double outline. Output is deterministic.
std::string export_dot(const LogGraph& g, std::span<const int> highlight = {});

}  // namespace lotkit
