#pragma once

#include "fring/bitmask.hpp"
#include "fring/canonical.hpp"
#include "fring/catalog.hpp"
#include "fring/constructions.hpp"
#include "fring/error.hpp"
#include "fring/extensions.hpp"
#include "fring/io.hpp"
#include "fring/morita.hpp"
#include "fring/morphism.hpp"
#include "fring/parallel.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"
