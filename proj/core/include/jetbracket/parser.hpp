#pragma once

#include <string>

#include "jetbracket/problem.hpp"

namespace jetbracket {

/// Parses a problem file. Grammar (see docs/formats.md for the normative
/// description):
///
///   file  := decl*
///   decl  := vars | evolve | operator | vector | covector | check
///   vars  := "vars" "x" "[" int "]" "," "u" "[" int "]"
///   evolve:= "evolve" uname "=" expr
///   op    := "operator" ident "=" opexpr
///   sect  := ("vector" | "covector") ident "=" "(" expr ("," expr)* ")"
///   check := "check" ( "bivector" ident | "2form" ident
///                    | "symmetry" secarg | "cosymmetry" secarg
///                    | "vanishing" "k" "=" int ("vector" | "form")
///                    | "symbol" ident | "adjoint" ident | "compose" ident ident )
///
/// Expressions are polynomials over t, x/x1.., jets (u_xx, u2_x1x2) and
/// rational literals with + - * ^ and parentheses. Operator expressions are
/// sums of coeff*D_sigma terms (bare coefficients are zero-order terms), with
/// [row, ...; row, ...] matrices when m > 1. Throws ParseError with position.
ProblemFile parse_problem(const std::string& text);

/// Ad-hoc entry points for the CLI subcommands: parse a single expression or
/// operator against given dimensions.
DiffPoly parse_expression(const std::string& text, int n, int m);
CDiffOperator parse_operator(const std::string& text, int n, int m);

}  // namespace jetbracket
