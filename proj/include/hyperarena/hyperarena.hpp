#pragma once

#include "hyperarena/combinatorics.hpp"
#include "hyperarena/competition.hpp"
#include "hyperarena/constructions.hpp"
#include "hyperarena/digraph.hpp"
#include "hyperarena/error.hpp"
#include "hyperarena/graph.hpp"
#include "hyperarena/hypertournament.hpp"
#include "hyperarena/paths.hpp"
#include "hyperarena/sets.hpp"
#include "hyperarena/verify.hpp"
