#pragma once

#include "balanced/equivalence.hpp"
#include "balanced/errors.hpp"
#include "balanced/generators.hpp"
#include "balanced/graph.hpp"
#include "balanced/primes.hpp"
#include "balanced/reduction.hpp"
#include "balanced/word.hpp"
