#pragma once

#include "bairecat.hpp"
#include "core.hpp"
#include "finsolve.hpp"
#include "games.hpp"
#include "pixleyroy.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "space.hpp"
#include "spaces.hpp"
#include "suites.hpp"
#include "transform.hpp"
#include "cli.hpp"
