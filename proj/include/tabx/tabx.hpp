#pragma once

#include "tabx/admissible.hpp"
#include "tabx/bijection.hpp"
#include "tabx/clusters.hpp"
#include "tabx/cycles.hpp"
#include "tabx/enumerate.hpp"
#include "tabx/errors.hpp"
#include "tabx/fixtures.hpp"
#include "tabx/io.hpp"
#include "tabx/partition.hpp"
#include "tabx/signed.hpp"
#include "tabx/tableau.hpp"
#include "tabx/tau.hpp"
#include "tabx/verify.hpp"
