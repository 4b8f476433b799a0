#pragma once

#include "degenstir/degenerate.hpp"
#include "degenstir/degenerate_stirling.hpp"
#include "degenstir/difference.hpp"
#include "degenstir/egf.hpp"
#include "degenstir/euler_bernoulli.hpp"
#include "degenstir/gf_oracle.hpp"
#include "degenstir/multipoly.hpp"
#include "degenstir/rational.hpp"
#include "degenstir/stirling.hpp"
#include "degenstir/whitney.hpp"
