#include "kron/error.hpp"

namespace kron {

void throw_invariant(const std::string& what) { throw InvariantError(what); }

void throw_parse(const std::string& what) { throw ParseError(what); }

}  // namespace kron
