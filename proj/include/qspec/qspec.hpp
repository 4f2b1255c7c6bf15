#pragma once

#include "bitset.hpp"
#include "checks.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "finring.hpp"
#include "ideals.hpp"
#include "report.hpp"
#include "spectra.hpp"
#include "text.hpp"
#include "topspace.hpp"
