#pragma once

#include "ssclaim/benefits.hpp"
#include "ssclaim/cola_data.hpp"
#include "ssclaim/critical.hpp"
#include "ssclaim/error.hpp"
#include "ssclaim/gain.hpp"
#include "ssclaim/ledger.hpp"
#include "ssclaim/optimize.hpp"
#include "ssclaim/solvers.hpp"
#include "ssclaim/types.hpp"
#include "ssclaim/version.hpp"
