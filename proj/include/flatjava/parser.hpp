#pragma once

#include <string_view>
#include <vector>

#include "flatjava/ast.hpp"
#include "flatjava/lexer.hpp"

namespace flatjava {

/// Parses one compilation unit of the supported Java subset. Stops at the
/// first problem: Error(ParseError) carries the offending token's span and
/// the set of tokens that would have been accepted; Error(UnsupportedFeature)
/// marks valid Java that lies outside the subset.
ast::CompilationUnit parse(const std::vector<Token>& tokens);

/// tokenize + parse.
ast::CompilationUnit parse_source(std::string_view source, std::uint32_t file_id = 0);

}  // namespace flatjava
