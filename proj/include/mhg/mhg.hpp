#ifndef MHG_MHG_HPP
#define MHG_MHG_HPP

#include "mhg/params.hpp"
#include "mhg/magic.hpp"
#include "mhg/cycle.hpp"
#include "mhg/graph.hpp"
#include "mhg/completion.hpp"
#include "mhg/families.hpp"
#include "mhg/witness.hpp"
#include "mhg/oracle.hpp"
#include "mhg/onedelta.hpp"

#endif  // MHG_MHG_HPP
