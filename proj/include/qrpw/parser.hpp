#pragma once
/**
 * @file parser.hpp
 * @brief Text grammar for algebra elements.
 *
 * Grammar (round-trips with Element::str()):
 *   expr  := ['-'] term (('+'|'-') term)*
 *   term  := coeff word | coeff | word
 *   coeff := '(' laurent ')' | rational ['*'] [qpow] | qpow
 *   qpow  := 'q' ['^' int]
 *   word  := (gen ['^' int])+
 * Generator tokens are matched longest-first against the presentation's
 * alphabet (so "z0*" wins over "z0", "c-*" over "c-"). Negative exponents
 * are accepted only on central unitary generators. Unknown generator names
 * and malformed syntax raise std::invalid_argument.
 */

#include "qrpw/presentation.hpp"

#include <string>

namespace qrpw {

Element parse_element(const PresPtr& p, const std::string& text);

}  // namespace qrpw
