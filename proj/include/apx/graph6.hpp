#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

// Decodes one graph6 record. An optional ">>graph6<<" header and a trailing
// newline are accepted. Throws ParseError (with byte offset) on malformed
// input and CapacityError when the encoded order exceeds 64.
Graph from_graph6(std::string_view text);

// Encodes g without header or newline.
std::string to_graph6(const Graph& g);

// Reads a newline-separated graph6 stream; blank lines are skipped.
// ParseError offsets are relative to the start of the stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace apx
