#pragma once

#include "bruhat/chain.hpp"
#include "bruhat/chain_io.hpp"
#include "bruhat/class_enum.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/io.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/order.hpp"
#include "bruhat/sampling.hpp"
#include "bruhat/search.hpp"
