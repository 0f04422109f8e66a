#pragma once

// Umbrella header.

#include "linkstream/clique.hpp"
#include "linkstream/delta.hpp"
#include "linkstream/enumerate.hpp"
#include "linkstream/error.hpp"
#include "linkstream/interval.hpp"
#include "linkstream/io.hpp"
#include "linkstream/link_stream.hpp"
#include "linkstream/node_table.hpp"
#include "linkstream/oracle.hpp"
#include "linkstream/random.hpp"
