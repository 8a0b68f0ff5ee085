#ifndef WHEELER_WHEELER_HPP
#define WHEELER_WHEELER_HPP

#include "wheeler/alphabet.hpp"
#include "wheeler/bisimulation.hpp"
#include "wheeler/equivalence.hpp"
#include "wheeler/generators.hpp"
#include "wheeler/io.hpp"
#include "wheeler/minimize.hpp"
#include "wheeler/nfa.hpp"
#include "wheeler/oracle.hpp"
#include "wheeler/partition.hpp"
#include "wheeler/relation.hpp"
#include "wheeler/standard_bisimulation.hpp"
#include "wheeler/validate.hpp"

#endif // WHEELER_WHEELER_HPP
