#pragma once

#include "matchpack/bichromatic.hpp"
#include "matchpack/generators.hpp"
#include "matchpack/geom.hpp"
#include "matchpack/io.hpp"
#include "matchpack/matching.hpp"
#include "matchpack/oracle.hpp"
#include "matchpack/packers.hpp"
#include "matchpack/persistency.hpp"
#include "matchpack/svg.hpp"
#include "matchpack/types.hpp"
