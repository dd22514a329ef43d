// hypercore.hpp - umbrella header
#pragma once

#include "hypercore/baselines.hpp"
#include "hypercore/cooccur.hpp"
#include "hypercore/genbench.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/kgcore.hpp"
#include "hypercore/oracle.hpp"
#include "hypercore/serialize.hpp"
