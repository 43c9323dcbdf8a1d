#pragma once

#include <variant>

#include "leonard/nearbip.hpp"

namespace leonard {

/// One JSON interchange document. Scalars travel as strings in the canonical
/// text encoding, so exactness survives any JSON parser.
struct Document {
    Field field;
    int d;
    std::variant<ParameterArray, TddSequence, MatrixPair, PrimaryData> payload;

    std::string kind() const; // parameter_array | tdd | matrix_pair | primary_data
};

Document make_document(ParameterArray p);
Document make_document(TddSequence t);
Document make_document(MatrixPair m);
Document make_document(PrimaryData pd);

/// Canonical text: sorted keys, two-space indent, trailing newline;
/// parse(render(doc)) == doc and render is a fixed point after one round.
std::string render_document(const Document& doc);

/// Same content on a single line (for NDJSON streams).
std::string render_document_compact(const Document& doc);

Document parse_document(const std::string& text);
Document parse_document_file(const std::string& path);

} // namespace leonard
