// Umbrella header.
#pragma once

#include "iterlog/scalars.hpp"
#include "iterlog/number_theory.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/power_series.hpp"
#include "iterlog/logexpr.hpp"
#include "iterlog/io.hpp"
#include "iterlog/verdict.hpp"
#include "iterlog/closed_forms.hpp"
#include "iterlog/recurrences.hpp"
#include "iterlog/parallel.hpp"
#include "iterlog/denominators.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/suite.hpp"
