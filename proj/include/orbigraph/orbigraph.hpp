#pragma once

// Commuting graphs of automorphism-orbit actions on finite groups:
// construction, analytics, structural detection and claim verification.

#include "action.hpp"
#include "algebra.hpp"
#include "catalog.hpp"
#include "common.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "io.hpp"
#include "perm.hpp"
#include "structure.hpp"
#include "verify.hpp"
