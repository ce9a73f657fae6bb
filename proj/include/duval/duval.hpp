#pragma once

#include "duval/ade.hpp"
#include "duval/basket.hpp"
#include "duval/catalog.hpp"
#include "duval/errors.hpp"
#include "duval/homology.hpp"
#include "duval/rational.hpp"
#include "duval/search.hpp"
#include "duval/threefold.hpp"
#include "duval/wps.hpp"
