#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "totcol/coloring.hpp"
#include "totcol/construction.hpp"
#include "totcol/families.hpp"
#include "totcol/latin.hpp"
#include "totcol/oracle.hpp"
#include "totcol/sweep.hpp"
#include "totcol/verify.hpp"

namespace totcol::io {

using nlohmann::json;

/// {"n": .., "edges": [[u, v], ..]} with u < v sorted; labels added when present.
json graph_to_json(const Graph& g, const std::vector<std::vector<int>>& labels = {});
/// Throws parse_error on malformed input and precondition_error on an invalid graph.
Graph graph_from_json(const json& j);

/// DIMACS "p edge n m" / "e u v" with 1-indexed vertices; 'c' lines are comments.
std::string graph_to_dimacs(const Graph& g);
Graph graph_from_dimacs(std::istream& in);

/// {"vertices": [..], "edges": [[u, v, c], ..]}.
json coloring_to_json(const Graph& g, const TotalColoring& c);
TotalColoring coloring_from_json(const json& j);

/// n rows of comma-separated colors, 0 for a blank cell.
std::string matrix_to_csv(const ColorMatrix& m);
ColorMatrix matrix_from_csv(std::istream& in);

std::string latin_to_csv(const LatinSquare& sq);

json envelope_to_json(const ConstructionResult& r);
json report_to_json(const VerificationReport& r);
json oracle_to_json(const OracleOutcome& r);
json sweep_to_json(const std::vector<SweepRow>& rows);

/// Whole-file helpers; throw parse_error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace totcol::io
