#pragma once

#include "lcdga/braid.hpp"
#include "lcdga/cobordism.hpp"
#include "lcdga/dga.hpp"
#include "lcdga/distinguisher.hpp"
#include "lcdga/families.hpp"
#include "lcdga/fillings.hpp"
#include "lcdga/io.hpp"
#include "lcdga/monodromy.hpp"
#include "lcdga/ncpoly.hpp"
#include "lcdga/ring.hpp"
