#pragma once

#include <string>

#include "synchro/dfa.hpp"
#include "synchro/nfa.hpp"

namespace synchro {

/// Graphviz rendering. Parallel edges between the same pair of states are
/// merged into one edge with a comma-separated label; the zero state is drawn
/// as a box; NFA initial/terminal states get an entry arrow and a double circle.
std::string to_dot(const Dfa& dfa, const std::string& name = "dfa");
std::string to_dot(const Nfa& nfa, const std::string& name = "nfa");

}  // namespace synchro
