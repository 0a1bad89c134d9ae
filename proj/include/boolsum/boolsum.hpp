#pragma once

#include "boolsum/asymptotics.hpp"
#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/cyclotomic.hpp"
#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/expsum.hpp"
#include "boolsum/limits.hpp"
#include "boolsum/parse.hpp"
#include "boolsum/real.hpp"
#include "boolsum/recurrence.hpp"
#include "boolsum/sequence.hpp"
