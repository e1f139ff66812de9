#pragma once

#include "cwpoly/geom_core.hpp"
#include "cwpoly/ball.hpp"
#include "cwpoly/cw.hpp"
#include "cwpoly/evolute.hpp"
#include "cwpoly/iterate.hpp"
#include "cwpoly/io.hpp"
#include "cwpoly/svg.hpp"
#include "cwpoly/verify.hpp"
