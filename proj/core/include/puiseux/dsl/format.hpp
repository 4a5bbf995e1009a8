#pragma once

#include <string>

#include "puiseux/dsl/eval.hpp"

namespace puiseux::dsl {

enum class OutputMode { kText, kJson };

/// Text: one "q = m1·a1 + m2·a2 [len l]" line per factorization, in canonical
/// order, "(no factorizations)" for an empty set. Json: the schemas of the
/// factorization set and property report, with a "provenance" field added
/// for windowed results.
std::string format(const QueryResult& result, OutputMode mode);

std::string format_text(const FactorizationSet& set);

}  // namespace puiseux::dsl
