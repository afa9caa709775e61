#pragma once

#include "attsync/analysis.hpp"
#include "attsync/cases.hpp"
#include "attsync/config.hpp"
#include "attsync/digraph.hpp"
#include "attsync/protocol.hpp"
#include "attsync/quaternion.hpp"
#include "attsync/runner.hpp"
#include "attsync/simulator.hpp"
#include "attsync/trace.hpp"
#include "attsync/trace_io.hpp"
#include "attsync/transform.hpp"
#include "attsync/vec3.hpp"
