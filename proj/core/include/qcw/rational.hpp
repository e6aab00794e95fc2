#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcw {

/// "a", "a/b" or a plain decimal "1.25"; canonicalized. std::invalid_argument otherwise.
mpq_class parse_rational(std::string_view text);

std::string to_string(const mpq_class& q);

}  // namespace qcw
