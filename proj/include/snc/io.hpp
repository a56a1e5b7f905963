#pragma once

#include <iosfwd>
#include <string>

#include "snc/conjectures.hpp"
#include "snc/digraph.hpp"
#include "snc/enumeration.hpp"
#include "snc/linalg.hpp"

namespace snc {

// Digraph text format: line 1 is "n m", then m lines "u v" (ASCII decimal,
// single space, LF). Lines starting with '#' are comments; readers also
// tolerate blank lines. The writer emits arcs sorted lexicographically, so
// output is bit-exact for equal digraphs.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);
Digraph read_digraph_file(const std::string& path);
std::string write_digraph(const Digraph& d);

// Matrix text format: line 1 is "rows cols", then one line per row with
// space-separated entries "p/q" (denominator 1 elided to "p"), LF line ends.
// Vectors travel as single-column matrices.
RatMatrix parse_matrix(std::istream& in);
RatMatrix parse_matrix_string(const std::string& text);
RatMatrix read_matrix_file(const std::string& path);
std::string write_matrix(const RatMatrix& m);

RatVector matrix_to_vector(const RatMatrix& m);  // requires a single column
RatMatrix vector_to_matrix(const RatVector& v);
std::string write_vector(const RatVector& v);

// JSON-lines serialization. One compact object per line; rationals are
// canonical "p/q" strings, never floats; key order is fixed so identical
// inputs give byte-identical lines.
std::string verdict_json(const Verdict& v, const std::string& instance);

/// Six forward verdict lines, six reversed ones (instance prefixed
/// "reverse:"), then a relation-summary line.
std::string cross_check_json_lines(const CrossCheckReport& rep);

/// Single summary object; wall time is deliberately excluded (it goes to
/// stderr) so sweep stdout stays byte-identical across runs.
std::string search_report_json(const SearchReport& rep);

}  // namespace snc
