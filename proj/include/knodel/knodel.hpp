#pragma once

#include "knodel/core.hpp"
#include "knodel/distance.hpp"
#include "knodel/errors.hpp"
#include "knodel/integer.hpp"
#include "knodel/io.hpp"
#include "knodel/oracle.hpp"
#include "knodel/results.hpp"
#include "knodel/sumrep.hpp"
