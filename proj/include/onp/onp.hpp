#pragma once
// Umbrella header: the full library surface.

#include "onp/arithmetic.hpp"
#include "onp/cnf.hpp"
#include "onp/context.hpp"
#include "onp/element.hpp"
#include "onp/errors.hpp"
#include "onp/exp_ordinal.hpp"
#include "onp/factor.hpp"
#include "onp/oracle.hpp"
#include "onp/ordinal.hpp"
#include "onp/parser.hpp"
#include "onp/primes.hpp"
#include "onp/structure.hpp"
#include "onp/tables.hpp"
#include "onp/verify.hpp"
