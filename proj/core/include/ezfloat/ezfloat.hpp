#pragma once

#include "ezfloat/bigmath.hpp"
#include "ezfloat/decimal.hpp"
#include "ezfloat/reader.hpp"
#include "ezfloat/stats.hpp"
#include "ezfloat/writer.hpp"
