// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cuntz/element.hpp"

namespace cuntz {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the element grammar
///
///   element := term (('+'|'-') term)*
///   term    := (scalar '*')? atom
///   atom    := 'S[' digits ']' ('S[' digits ']*')? | 'P[' digits ']' | 'I'
///   scalar  := p/q | '(' p/q ('+'|'-') p/q 'i' ')'
///
/// Whitespace between tokens is ignored. "0" denotes the zero element, a
/// leading '-' negates the first term, and S[] is the empty word (so S_1^*
/// is written S[]S[1]*). Letters must not exceed n.
Element parse_element(std::string_view text, int n);

}  // namespace cuntz
