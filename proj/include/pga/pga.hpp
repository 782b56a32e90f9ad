#pragma once

#include "pga/analysis.hpp"
#include "pga/aut_engine.hpp"
#include "pga/bigint.hpp"
#include "pga/errors.hpp"
#include "pga/finite_group.hpp"
#include "pga/group_expr.hpp"
#include "pga/group_spec.hpp"
#include "pga/men_quotient.hpp"
#include "pga/number_theory.hpp"
#include "pga/oracle.hpp"
#include "pga/power_graph.hpp"
#include "pga/report.hpp"
#include "pga/weighted_graph.hpp"
