#pragma once

#include "halgeo/term.hpp"
#include "lexer.hpp"

namespace halgeo::detail {

Term parse_term_tokens(TokenStream& ts, const SortPtr& sort, const SignaturePtr& sig);

}  // namespace halgeo::detail
