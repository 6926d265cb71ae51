#ifndef ECLCS_ECLCS_HPP
#define ECLCS_ECLCS_HPP

#include "eclcs/automaton.hpp"
#include "eclcs/constraint_set.hpp"
#include "eclcs/errors.hpp"
#include "eclcs/instance.hpp"
#include "eclcs/json_dump.hpp"
#include "eclcs/keyword_tree.hpp"
#include "eclcs/oracle.hpp"
#include "eclcs/solver.hpp"

#endif  // ECLCS_ECLCS_HPP
