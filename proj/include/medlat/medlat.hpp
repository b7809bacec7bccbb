#pragma once

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"
#include "medlat/formula.hpp"
#include "medlat/freedist.hpp"
#include "medlat/io.hpp"
#include "medlat/logic.hpp"
#include "medlat/parser.hpp"
#include "medlat/poset.hpp"
#include "medlat/validity.hpp"
#include "medlat/selector.hpp"
#include "medlat/verify.hpp"
