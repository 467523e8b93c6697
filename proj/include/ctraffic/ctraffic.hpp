#pragma once

#include "ctraffic/bigint.hpp"
#include "ctraffic/closed_form.hpp"
#include "ctraffic/errors.hpp"
#include "ctraffic/exterior.hpp"
#include "ctraffic/intersect.hpp"
#include "ctraffic/ktable.hpp"
#include "ctraffic/traffic.hpp"
#include "ctraffic/verify.hpp"
