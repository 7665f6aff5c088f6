#pragma once

#include "corepath/bijection.hpp"
#include "corepath/gap_poset.hpp"
#include "corepath/oracle.hpp"
#include "corepath/partition.hpp"
#include "corepath/render.hpp"
#include "corepath/trace.hpp"
