#pragma once

#include "minext/core.hpp"
#include "minext/element_set.hpp"
#include "minext/abelian.hpp"
#include "minext/search.hpp"
#include "minext/substructure.hpp"
#include "minext/bimodule.hpp"
#include "minext/extensions.hpp"
#include "minext/matrix.hpp"
#include "minext/catalog.hpp"
#include "minext/classify.hpp"
#include "minext/brute.hpp"
#include "minext/suites.hpp"
#include "minext/io.hpp"
