#pragma once

#include "fdspec/errors.hpp"
#include "fdspec/oracle.hpp"
#include "fdspec/rational.hpp"
#include "fdspec/serialize.hpp"
#include "fdspec/signal.hpp"
#include "fdspec/spectra.hpp"
#include "fdspec/weights.hpp"
