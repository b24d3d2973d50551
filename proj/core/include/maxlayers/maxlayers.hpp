#ifndef MAXLAYERS_MAXLAYERS_HPP
#define MAXLAYERS_MAXLAYERS_HPP

#include "maxlayers/analysis.hpp"
#include "maxlayers/errors.hpp"
#include "maxlayers/generators.hpp"
#include "maxlayers/half_space_tree.hpp"
#include "maxlayers/io.hpp"
#include "maxlayers/layer_engine.hpp"
#include "maxlayers/list_hst.hpp"
#include "maxlayers/metrics.hpp"
#include "maxlayers/oracle.hpp"
#include "maxlayers/point.hpp"
#include "maxlayers/random.hpp"
#include "maxlayers/report.hpp"
#include "maxlayers/stats.hpp"

#endif
