#pragma once

#include "conewall/descendent.hpp"

#include <string>
#include <vector>

namespace cw {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, size_t offset)
        : Error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'ch' k '(' class ')' | '(' expr ')'
//   class  := ['-'] cterm (('+' | '-') cterm)*
//   cterm  := cfactor ('*' cfactor)*
//   cfactor:= rational | name ['^' int] | '(' class ')'
// Names are the ring basis names plus H and pt. A ch of a class that vanishes in the
// ring (H^5 on P^3) is zero; a warning is appended when warnings is given.
Descendent parse_expr(const std::string& src, const CohRing& R, std::vector<std::string>* warnings = nullptr,
                      int k_max = default_k_max);
CohClass parse_class(const std::string& src, const CohRing& R);

}  // namespace cw
