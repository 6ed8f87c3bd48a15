#pragma once

#include <span>
#include <string>
#include <string_view>

#include "tlie/core.hpp"

namespace tlie {

// Grammar, loosest binding first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/' | '.') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' ['+' | '-'] integer)?
//   atom    := integer | identifier | '(' sum ')'
// '.' is the tensor product, '*' needs a scalar on one side and '/' a unit
// divisor. Identifiers resolve to basis ids, then variables, then signs.
TensorPoly parse_expression(std::string_view src, const TLieSpec& spec);

LaurentScalar parse_scalar(std::string_view src, std::span<const std::string> variables,
                           std::span<const SignConstant> signs = {});

// Spec-description documents:
//
//   [meta]
//   name = sl_plus_q:2
//   variables = q
//   signs = eps1_2=-1, eps2_3=-1
//   note = free text
//   [basis]
//   e12 1            # id grade [display]
//   [sym]
//   e12 e13 -> q^-1  # pairs x <= y in basis order
//   [bracket]
//   e12 e23 -> e13
//   [pseudo]
//   e13 e24 -> (q - q^-1) * e14.e23
//
// Text after '#' is ignored.
RawSpec parse_spec_text(std::string_view text);
TLieSpec load_spec_text(std::string_view text);
TLieSpec load_spec_file(const std::string& path);
std::string dump_spec(const TLieSpec& spec);

// A readable file if one exists at `arg`, otherwise a catalog key.
TLieSpec resolve_spec(const std::string& arg);

}  // namespace tlie
