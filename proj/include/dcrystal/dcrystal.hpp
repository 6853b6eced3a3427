#pragma once

#include "dcrystal/cartan.hpp"
#include "dcrystal/crystalgraph.hpp"
#include "dcrystal/isomorphism.hpp"
#include "dcrystal/json_io.hpp"
#include "dcrystal/kostant.hpp"
#include "dcrystal/render.hpp"
#include "dcrystal/tableaux.hpp"
