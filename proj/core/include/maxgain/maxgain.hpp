#pragma once

#include "maxgain/bounds.hpp"
#include "maxgain/errors.hpp"
#include "maxgain/evaluation.hpp"
#include "maxgain/expectation.hpp"
#include "maxgain/gen.hpp"
#include "maxgain/greedy.hpp"
#include "maxgain/instance.hpp"
#include "maxgain/io.hpp"
#include "maxgain/learn.hpp"
#include "maxgain/metrics.hpp"
#include "maxgain/oracle.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/policy.hpp"
#include "maxgain/policy_tree.hpp"
#include "maxgain/threshold.hpp"
#include "maxgain/types.hpp"
