#pragma once

#include "zmdeg/arith.hpp"
#include "zmdeg/check.hpp"
#include "zmdeg/degrees.hpp"
#include "zmdeg/exact_ratio.hpp"
#include "zmdeg/oracle.hpp"
#include "zmdeg/report_io.hpp"
#include "zmdeg/zm_core.hpp"
