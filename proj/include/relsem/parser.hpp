#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsem/ast.hpp"

namespace relsem {

struct ProgramParse {
  Program program;
  bool domain_from_header = false;
  std::vector<std::string> warnings;
};

/// Parses a program file. The optional fallback supplies the domain when the
/// file has no `domain lo..hi vars ...` header; when both are present the
/// header wins and a warning is recorded. The fallback's state cap applies
/// either way. Throws ParseError / SemanticError.
ProgramParse parse_program(std::string_view text,
                           std::optional<DomainConfig> fallback = std::nullopt);

struct ContractParse {
  ContractTable table;
  std::vector<std::string> warnings;
};

/// Parses a contract file (`contract <name> [logical ...] requires <b>
/// ensures <b>` blocks). When a domain is given, free identifiers that are
/// not declared logicals must be program variables of that domain.
ContractParse parse_contract_file(std::string_view text,
                                  const DomainConfig* domain = nullptr);

}  // namespace relsem
